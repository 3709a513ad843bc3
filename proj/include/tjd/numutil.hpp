#pragma once

#include <gmpxx.h>

#include "tjd/error.hpp"

namespace tjd {

using BigInt = mpz_class;

inline BigInt big_pow(const BigInt& base, unsigned long e) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline BigInt big_powm(const BigInt& base, const BigInt& e, const BigInt& mod) {
    BigInt r;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), e.get_mpz_t(), mod.get_mpz_t());
    return r;
}

inline BigInt big_invert(const BigInt& a, const BigInt& mod) {
    if (mod == 1) return 0;
    BigInt r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), mod.get_mpz_t()) == 0)
        throw NonUnit("no inverse modulo " + mod.get_str());
    return r;
}

inline BigInt big_lcm(const BigInt& a, const BigInt& b) {
    BigInt r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

// Unique c in [0, m1*m2) with c = r1 mod m1 and c = r2 mod m2; gcd(m1, m2) = 1.
inline BigInt crt_pair(const BigInt& r1, const BigInt& m1, const BigInt& r2, const BigInt& m2) {
    if (m2 == 1) {
        BigInt c = r1 % m1;
        if (c < 0) c += m1;
        return c;
    }
    BigInt t = ((r2 - r1) * big_invert(m1 % m2, m2)) % m2;
    if (t < 0) t += m2;
    BigInt c = r1 + m1 * t;
    BigInt mm = m1 * m2;
    c %= mm;
    if (c < 0) c += mm;
    return c;
}

// Smallest a >= 0 with p^a >= n.
inline long ceil_log(long p, long n) {
    long a = 0;
    BigInt pw = 1;
    while (pw < n) {
        pw *= p;
        ++a;
    }
    return a;
}

// v_p(a) together with a / p^{v_p(a)}; a != 0.
inline long remove_p(BigInt& a, const BigInt& p) {
    BigInt out;
    auto v = mpz_remove(out.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t());
    a = out;
    return static_cast<long>(v);
}

inline bool is_small_prime(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

} // namespace tjd
