#pragma once

#include <cstdint>
#include <vector>

#include "tjd/numutil.hpp"

namespace tjd {

// Permutation of {0, ..., N-1}.
class Perm {
public:
    explicit Perm(std::vector<uint32_t> images);
    static Perm identity(long n);
    static Perm cycle(long n, const std::vector<uint32_t>& pts); // pts[0] -> pts[1] -> ...

    long degree() const { return static_cast<long>(img_.size()); }
    uint32_t operator()(uint32_t x) const { return img_[x]; }
    const std::vector<uint32_t>& images() const { return img_; }

    bool operator==(const Perm& o) const { return img_ == o.img_; }
    bool operator!=(const Perm& o) const { return img_ != o.img_; }
    bool is_identity() const;

    Perm operator*(const Perm& o) const; // (a*b)(x) = a(b(x))
    Perm inverse() const;
    Perm pow(const BigInt& e) const;

    // embed into S_{n'} fixing the new points
    Perm extend(long n_prime) const;

    std::vector<std::vector<uint32_t>> cycles() const; // nontrivial cycles

private:
    std::vector<uint32_t> img_;
};

// lcm of the cycle lengths
BigInt perm_order(const Perm& g);

// s = g^{c_s}, u = g^{c_u} with ord(g) = p^a * m', gcd(m', p) = 1,
// c_s = 0 mod p^a, = 1 mod m',  c_u = 1 mod p^a, = 0 mod m'.
struct PJordanPair {
    Perm s;
    Perm u;
    long p;
    BigInt c_s;
    BigInt c_u;
};
PJordanPair p_jordan_perm(const Perm& g, long p);

// Exhaustive check over all of S_N that exactly one commuting pair (s, u)
// with s*u = g, ord(s) coprime to p, ord(u) a p-power exists, and that it is
// the pair returned by p_jordan_perm.  N <= 7.
bool verify_unique_p_jordan(const Perm& g, long p);

// All elements of S_n in lexicographic order (for exhaustive suites).
std::vector<Perm> symmetric_group(long n);

} // namespace tjd
