#pragma once

#include <optional>
#include <vector>

#include "tjd/ffield.hpp"
#include "tjd/padic.hpp"

namespace tjd {

// Square matrix over Q_q, represented as p^{-scale} * body with body integral
// and the scale minimal (zero, or some body entry a unit).  Entries of the
// represented matrix are determined to absolute precision k - scale.
class MatQq {
public:
    static MatQq integral(CtxPtr ctx, long n, std::vector<ZqElem> body); // scale 0
    static MatQq make(CtxPtr ctx, long n, long scale, std::vector<ZqElem> body);
    static MatQq from_qq(CtxPtr ctx, long n, const std::vector<QqElem>& entries);
    static MatQq identity(const CtxPtr& ctx, long n);

    const CtxPtr& ctx() const { return ctx_; }
    long n() const { return n_; }
    long scale() const { return scale_; }
    const ZqElem& body(long i, long j) const { return b_[i * n_ + j]; }
    QqElem entry(long i, long j) const { return qq_normalize(scale_, body(i, j)); }

    bool is_integral() const { return scale_ == 0; }
    // min_{i,j} ord(entry), at most k - scale
    long min_entry_valuation() const;

    bool operator==(const MatQq& o) const;
    bool operator!=(const MatQq& o) const { return !(*this == o); }
    // entry-wise ord(difference) >= m, as far as certifiable at precision k
    bool congruent_mod(const MatQq& o, long m) const;

    MatQq operator*(const MatQq& o) const;
    MatQq operator+(const MatQq& o) const;
    MatQq operator-(const MatQq& o) const;
    MatQq pow(const BigInt& e) const; // e >= 0, or any e when det is a unit

    MatQq scale_by_p_pow(long j) const; // p^j * this

    MatFq reduce() const;          // requires integral
    MatQq inv_unimodular() const;  // integral with unit det; Gauss-Jordan over O
    bool is_diagonal() const;

private:
    MatQq(CtxPtr ctx, long n, long scale, std::vector<ZqElem> body);
    void normalize();
    CtxPtr ctx_;
    long n_;
    long scale_;
    std::vector<ZqElem> b_;
};

// Monic characteristic polynomial of the integral body, low -> high.
std::vector<ZqElem> charpoly_integral_body(const MatQq& g);

// Characteristic polynomial of g itself, coefficients as Q_q values.
// Throws PrecisionInsufficient when a coefficient's valuation cannot be
// pinned at precision k.
std::vector<QqElem> charpoly_zq(const MatQq& g);

// ord(det g); throws Singular when det = 0 at precision k.
long det_valuation(const MatQq& g);

// Integral char poly and unit det (Newton-polygon criterion for stabilising
// some lattice).
bool is_bounded(const MatQq& g);

// Full-rank O-lattice in Q_q^n up to homothety.  The stored basis is the
// canonical integral representative: upper triangular, diagonal p^{e_i},
// the entry at (i, j), i < j, reduced mod p^{e_i}, and some entry a unit.
class Lattice {
public:
    static Lattice standard(const CtxPtr& ctx, long n);

    const CtxPtr& ctx() const { return basis_.ctx(); }
    long n() const { return basis_.n(); }
    const MatQq& basis() const { return basis_; }
    const std::vector<long>& diag_exponents() const { return exps_; }
    long e_max() const;

    bool operator==(const Lattice& o) const { return basis_ == o.basis_; }
    bool operator!=(const Lattice& o) const { return !(*this == o); }

    // basis must already be in canonical form; normal construction is hnf()
    Lattice(MatQq basis, std::vector<long> exps)
        : basis_(std::move(basis)), exps_(std::move(exps)) {}

private:
    MatQq basis_;
    std::vector<long> exps_;
};

// Canonical HNF lattice spanned by the given columns; RankDeficient if they
// do not span Q_q^n.
Lattice hnf(const CtxPtr& ctx, long n, const std::vector<std::vector<QqElem>>& columns);

// The g-stable lattice sum_{i<n} g^i O^n; requires is_bounded(g).
Lattice stable_lattice(const MatQq& g);

// Whether g fixes the homothety class of L: g L = p^t L with t = ord(det g)/n.
bool lattice_stabilizes(const MatQq& g, const Lattice& L);

// p^{nu} * B^{-1} with nu minimal such that the result is integral, computed
// exactly from the canonical basis.
struct ScaledInverse {
    MatQq v;
    long nu;
};
ScaledInverse lattice_basis_inverse(const Lattice& l);

struct IntegralConjugate {
    Lattice lattice;
    MatQq h; // B^{-1} g B, integral with unit det
    long effective_precision;
};

// Conjugate a bounded g into GL_n(O) by the basis of its stable lattice.
// The reported precision of h is k - 2 * e_max.
IntegralConjugate conjugate_into_integral(const MatQq& g);

} // namespace tjd
