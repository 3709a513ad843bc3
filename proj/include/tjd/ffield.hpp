#pragma once

#include <vector>

#include "tjd/padic.hpp"

namespace tjd {

// Polynomials over F_q, coefficients low -> high, no trailing zeros.
using FqPoly = std::vector<FqElem>;

void fq_poly_trim(FqPoly& f);
FqPoly fq_poly_add(const FqPoly& a, const FqPoly& b);
FqPoly fq_poly_sub(const FqPoly& a, const FqPoly& b);
FqPoly fq_poly_mul(const FqPoly& a, const FqPoly& b);
// a = q*b + r with deg r < deg b
std::pair<FqPoly, FqPoly> fq_poly_divrem(const FqPoly& a, const FqPoly& b);
FqPoly fq_poly_gcd(FqPoly a, FqPoly b); // monic
FqPoly fq_poly_derivative(const FqPoly& f);
// product of the distinct irreducible factors of f
FqPoly fq_poly_radical(const FqPoly& f);

// Square matrix over F_q.
class MatFq {
public:
    MatFq(CtxPtr ctx, long n, std::vector<FqElem> entries); // row-major
    static MatFq identity(const CtxPtr& ctx, long n);
    static MatFq zero(const CtxPtr& ctx, long n);
    static MatFq permutation(const CtxPtr& ctx, const std::vector<uint32_t>& images);

    const CtxPtr& ctx() const { return ctx_; }
    long n() const { return n_; }
    const FqElem& at(long i, long j) const { return e_[i * n_ + j]; }
    FqElem& at(long i, long j) { return e_[i * n_ + j]; }

    bool operator==(const MatFq& o) const;
    bool operator!=(const MatFq& o) const { return !(*this == o); }
    bool is_identity() const;

    MatFq operator*(const MatFq& o) const;
    MatFq operator+(const MatFq& o) const;
    MatFq operator-(const MatFq& o) const;
    MatFq pow(const BigInt& e) const; // e >= 0
    MatFq inv() const;                // Gauss-Jordan; throws Singular

private:
    CtxPtr ctx_;
    long n_;
    std::vector<FqElem> e_;
};

// Monic characteristic polynomial det(xI - g), division-free (Berkowitz).
FqPoly charpoly_fq(const MatFq& g);

FqElem det_fq(const MatFq& g);

// (g - 1)^n = 0
bool is_unipotent_fq(const MatFq& g);

// minimal polynomial squarefree, tested by annihilation at the radical of
// the characteristic polynomial; requires g invertible
bool is_semisimple_fq(const MatFq& g);

// Multiplicative Jordan decomposition g = s*u with s semisimple, u unipotent,
// both powers of g:  s = g^{c_s}, c_s = 0 mod p^a, = 1 mod M and
// u = g^{c_u}, c_u = 1 mod p^a, = 0 mod M, where M = lcm_{e<=n}(q^e - 1)
// and a is minimal with p^a >= n.
struct FinJordanPair {
    MatFq s;
    MatFq u;
    BigInt c_s;
    BigInt c_u;
};
FinJordanPair fin_jordan(const MatFq& g);

// lcm_{1<=e<=n}(q^e - 1)
BigInt semisimple_exponent_bound(const CtxPtr& ctx, long n);

// Least m >= 1 with g^m = 1, by descending through the prime factors of the
// exponent bound p^a * M.
BigInt mult_order(const MatFq& g);

} // namespace tjd
