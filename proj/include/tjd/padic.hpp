#pragma once

#include <memory>
#include <vector>

#include "tjd/numutil.hpp"

namespace tjd {

class PadicCtx;
using CtxPtr = std::shared_ptr<const PadicCtx>;

// Arithmetic context: the unramified extension Z_q / Z_p of residue degree d,
// q = p^d, with elements carried modulo p^k.  The residue field is
// F_q = F_p[x] / (modulus).  Immutable after construction; share freely.
class PadicCtx {
public:
    long p;
    long d;
    long k;
    std::vector<long> modulus; // monic, degree d, irreducible over F_p, coeffs in [0,p)

    BigInt pz; // p
    BigInt pk; // p^k
    BigInt q;  // p^d

    // Built-in modulus (Conway polynomial) for p in {2,3,5,7,11,13} and d <= 4;
    // for d == 1 any prime gets x - r with r the least primitive root mod p.
    static CtxPtr make(long p, long d, long k);
    static CtxPtr make(long p, long d, long k, std::vector<long> modulus);

    static bool has_default_modulus(long p, long d);
    static std::vector<long> default_modulus(long p, long d);

    bool operator==(const PadicCtx& o) const {
        return p == o.p && d == o.d && k == o.k && modulus == o.modulus;
    }

private:
    PadicCtx() = default;
};

// gcd(x^{p^i} - x, f) = 1 for 1 <= i <= deg/2 and x^{p^deg} = x mod f.
bool modulus_irreducible(long p, const std::vector<long>& f);

inline void require_same_ctx(const CtxPtr& a, const CtxPtr& b) {
    if (!(*a == *b)) throw CtxMismatch("operands belong to different contexts");
}

// Element of F_q = F_p[x]/(modulus); coefficients reduced into [0, p).
class FqElem {
public:
    FqElem(CtxPtr ctx, std::vector<long> coeffs);

    static FqElem zero(const CtxPtr& ctx);
    static FqElem one(const CtxPtr& ctx);
    static FqElem from_int(const CtxPtr& ctx, long v);
    static FqElem gen(const CtxPtr& ctx); // the class of x

    const CtxPtr& ctx() const { return ctx_; }
    const std::vector<long>& coeffs() const { return c_; }

    bool is_zero() const;
    bool operator==(const FqElem& o) const;
    bool operator!=(const FqElem& o) const { return !(*this == o); }

    FqElem operator+(const FqElem& o) const;
    FqElem operator-(const FqElem& o) const;
    FqElem operator*(const FqElem& o) const;
    FqElem operator-() const;

    FqElem inv() const;          // extended Euclid over F_p[x]; throws NonUnit on 0
    FqElem pow(const BigInt& e) const;
    FqElem frobenius() const { return pow(ctx_->pz); }
    FqElem frobenius_inv() const; // p-th root (inverse of Frobenius)

private:
    CtxPtr ctx_;
    std::vector<long> c_; // size d
};

// Element of O = Z_q known modulo p^k, as a polynomial of degree < d over
// Z/p^k reduced by the canonical integer lift of the modulus.
class ZqElem {
public:
    ZqElem(CtxPtr ctx, std::vector<BigInt> coeffs);

    static ZqElem zero(const CtxPtr& ctx);
    static ZqElem one(const CtxPtr& ctx);
    static ZqElem from_int(const CtxPtr& ctx, const BigInt& v);
    static ZqElem lift(const FqElem& a); // canonical coefficientwise lift

    const CtxPtr& ctx() const { return ctx_; }
    const std::vector<BigInt>& coeffs() const { return c_; }

    bool is_zero() const; // zero mod p^k
    bool operator==(const ZqElem& o) const;
    bool operator!=(const ZqElem& o) const { return !(*this == o); }
    bool congruent_mod(const ZqElem& o, long m) const; // equality mod p^m

    ZqElem operator+(const ZqElem& o) const;
    ZqElem operator-(const ZqElem& o) const;
    ZqElem operator*(const ZqElem& o) const;
    ZqElem operator-() const;

    ZqElem inv() const; // Newton lift of the residue inverse; throws NonUnit
    ZqElem pow(const BigInt& e) const;

    FqElem reduce() const;
    bool is_unit() const { return !reduce().is_zero(); }

    // min_i v_p(c_i), capped at k (k means zero at this precision)
    long valuation() const;
    ZqElem times_p_pow(long j) const;     // j >= 0
    ZqElem div_exact_p_pow(long j) const; // all residues divisible by p^j

private:
    CtxPtr ctx_;
    std::vector<BigInt> c_; // size d, each in [0, p^k)
};

// The Teichmuller lift: the unique root of y^q = y over O reducing to a.
// Computed as k-1 iterations of y -> y^q from the canonical lift.
ZqElem teichmuller(const FqElem& a);

// p^v * unit with the unit part a true unit of O, or zero at this precision.
class QqElem {
public:
    static QqElem zero(const CtxPtr& ctx);
    static QqElem make(long v, ZqElem unit);
    static QqElem from_zq(const ZqElem& a);
    static QqElem p_power(const CtxPtr& ctx, long v);

    bool is_zero() const { return zero_; }
    long v() const;
    const ZqElem& unit() const;
    const CtxPtr& ctx() const { return unit_.ctx(); }

    QqElem operator*(const QqElem& o) const;
    QqElem inv() const;
    bool operator==(const QqElem& o) const;

private:
    QqElem(bool z, long v, ZqElem unit) : zero_(z), v_(v), unit_(std::move(unit)) {}
    bool zero_;
    long v_;
    ZqElem unit_;
};

// Canonical form of p^{-s} * a: ZERO if a = 0 at this precision, else
// (v = ord(a) - s, unit = a / p^{ord(a)}).
QqElem qq_normalize(long s, const ZqElem& a);

} // namespace tjd
