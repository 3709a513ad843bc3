#include "tjd/matq.hpp"

#include <algorithm>
#include <limits>

#include "tjd/berkowitz.hpp"

namespace tjd {

namespace {

// ---------------------------------------------------------------------------
// Exact polynomial arithmetic over Z[x]/(lifted modulus), no p^k truncation.
// Used where divisions by powers of p must be certified exact: lattice
// normal forms are small exact integers, so products with matrix residues
// stay exact integers here.

using XPoly = std::vector<BigInt>; // size d

XPoly xp_zero(const CtxPtr& ctx) { return XPoly(ctx->d, BigInt(0)); }

bool xp_is_zero(const XPoly& a) {
    return std::all_of(a.begin(), a.end(), [](const BigInt& c) { return c == 0; });
}

void xp_sub_into(XPoly& a, const XPoly& b) {
    for (size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
}

XPoly xp_mul(const CtxPtr& ctx, const XPoly& a, const XPoly& b) {
    long d = ctx->d;
    std::vector<BigInt> prod(2 * d - 1, BigInt(0));
    for (long i = 0; i < d; ++i) {
        if (a[i] == 0) continue;
        for (long j = 0; j < d; ++j)
            if (b[j] != 0) prod[i + j] += a[i] * b[j];
    }
    for (long i = 2 * d - 2; i >= d; --i) {
        if (prod[i] == 0) continue;
        for (long j = 0; j < d; ++j)
            if (ctx->modulus[j] != 0) prod[i - d + j] -= prod[i] * ctx->modulus[j];
        prod[i] = 0;
    }
    prod.resize(d);
    return prod;
}

bool xp_div_exact(const CtxPtr& ctx, XPoly& a, long j) {
    if (j <= 0) return true;
    BigInt pj = big_pow(ctx->pz, j);
    for (auto& c : a) {
        if (!mpz_divisible_p(c.get_mpz_t(), pj.get_mpz_t())) return false;
        c /= pj;
    }
    return true;
}

long xp_valuation(const CtxPtr& ctx, const XPoly& a) {
    long v = std::numeric_limits<long>::max();
    for (const auto& c : a) {
        if (c == 0) continue;
        BigInt t = c;
        v = std::min(v, remove_p(t, ctx->pz));
    }
    return v; // max() for the zero poly
}

using XMat = std::vector<XPoly>; // n*n row-major

XMat xmat_from_body(const MatQq& m) {
    XMat r;
    r.reserve(m.n() * m.n());
    for (long i = 0; i < m.n(); ++i)
        for (long j = 0; j < m.n(); ++j) r.push_back(m.body(i, j).coeffs());
    return r;
}

XMat xmat_mul(const CtxPtr& ctx, long n, const XMat& a, const XMat& b) {
    XMat r(n * n, xp_zero(ctx));
    for (long i = 0; i < n; ++i)
        for (long l = 0; l < n; ++l) {
            if (xp_is_zero(a[i * n + l])) continue;
            for (long j = 0; j < n; ++j) {
                XPoly t = xp_mul(ctx, a[i * n + l], b[l * n + j]);
                for (long c = 0; c < ctx->d; ++c) r[i * n + j][c] += t[c];
            }
        }
    return r;
}

// ---------------------------------------------------------------------------
// Raw integral column HNF: upper triangular, pivot at every row, diagonal
// p^{e_i}, entry (i, j) for i < j reduced mod p^{e_i}.  Valuation pivoting;
// a residue that is 0 mod p^k is treated as zero.

struct RawHnf {
    std::vector<std::vector<ZqElem>> cols; // cols[j][i], j = 0..n-1
    std::vector<long> exps;
};

RawHnf raw_hnf(const CtxPtr& ctx, long n, std::vector<std::vector<ZqElem>> cols) {
    const long K = ctx->k;
    std::vector<std::vector<ZqElem>> basis(n);
    std::vector<long> exps(n, 0);
    std::vector<size_t> active(cols.size());
    for (size_t i = 0; i < cols.size(); ++i) active[i] = i;

    for (long row = n - 1; row >= 0; --row) {
        long best_val = K;
        size_t best_pos = active.size();
        for (size_t pos = 0; pos < active.size(); ++pos) {
            long v = cols[active[pos]][row].valuation();
            if (v < best_val) {
                best_val = v;
                best_pos = pos;
            }
        }
        if (best_val >= K)
            throw RankDeficient("columns do not span (no pivot in row " + std::to_string(row) + ")");
        std::vector<ZqElem> pivot = std::move(cols[active[best_pos]]);
        active.erase(active.begin() + best_pos);
        long e = best_val;
        ZqElem unit_inv = pivot[row].div_exact_p_pow(e).inv();
        for (long i = 0; i <= row; ++i) pivot[i] = pivot[i] * unit_inv;
        for (size_t pos = 0; pos < active.size(); ++pos) {
            auto& c = cols[active[pos]];
            if (c[row].is_zero()) continue;
            ZqElem f = c[row].div_exact_p_pow(e);
            for (long i = 0; i <= row; ++i) c[i] = c[i] - f * pivot[i];
        }
        basis[row] = std::move(pivot);
        exps[row] = e;
    }

    // reduce entry (i, j), i < j, mod p^{e_i} by column operations
    for (long j = 1; j < n; ++j)
        for (long i = j - 1; i >= 0; --i) {
            BigInt pe = big_pow(ctx->pz, exps[i]);
            std::vector<BigInt> qc(ctx->d);
            bool any = false;
            for (long c = 0; c < ctx->d; ++c) {
                BigInt r;
                mpz_fdiv_r(r.get_mpz_t(), basis[j][i].coeffs()[c].get_mpz_t(), pe.get_mpz_t());
                qc[c] = (basis[j][i].coeffs()[c] - r) / pe;
                if (qc[c] != 0) any = true;
            }
            if (!any) continue;
            ZqElem qz(ctx, std::move(qc));
            for (long l = 0; l <= i; ++l) basis[j][l] = basis[j][l] - qz * basis[i][l];
        }
    return RawHnf{std::move(basis), std::move(exps)};
}

MatQq basis_matrix(const CtxPtr& ctx, long n, const RawHnf& h) {
    std::vector<ZqElem> body;
    body.reserve(n * n);
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) body.push_back(h.cols[j][i]);
    return MatQq::integral(ctx, n, std::move(body));
}

Lattice canonical_lattice(const CtxPtr& ctx, long n, RawHnf h) {
    long v0 = ctx->k;
    for (long j = 0; j < n; ++j)
        for (long i = 0; i <= j; ++i) v0 = std::min(v0, h.cols[j][i].valuation());
    if (v0 > 0) {
        for (long j = 0; j < n; ++j)
            for (long i = 0; i <= j; ++i) h.cols[j][i] = h.cols[j][i].div_exact_p_pow(v0);
        for (auto& e : h.exps) e -= v0;
    }
    MatQq b = basis_matrix(ctx, n, h);
    return Lattice(std::move(b), std::move(h.exps));
}

// Solve W Y = R exactly (W the raw lattice basis, R an exact matrix).
// Returns false when some division fails, i.e. Y is not integral.
bool solve_upper_exact(const CtxPtr& ctx, long n, const RawHnf& w, const XMat& r, XMat& y) {
    y.assign(n * n, xp_zero(ctx));
    for (long c = 0; c < n; ++c)
        for (long i = n - 1; i >= 0; --i) {
            XPoly acc = r[i * n + c];
            for (long j = i + 1; j < n; ++j) {
                if (w.cols[j][i].is_zero() || xp_is_zero(y[j * n + c])) continue;
                XPoly t = xp_mul(ctx, w.cols[j][i].coeffs(), y[j * n + c]);
                xp_sub_into(acc, t);
            }
            if (!xp_div_exact(ctx, acc, w.exps[i])) return false;
            y[i * n + c] = std::move(acc);
        }
    return true;
}

RawHnf raw_of_lattice(const Lattice& l) {
    long n = l.n();
    std::vector<std::vector<ZqElem>> cols(n);
    for (long j = 0; j < n; ++j) {
        cols[j].reserve(n);
        for (long i = 0; i < n; ++i) cols[j].push_back(l.basis().body(i, j));
    }
    return RawHnf{std::move(cols), l.diag_exponents()};
}

} // namespace

// ---------------------------------------------------------------------------
// MatQq

MatQq::MatQq(CtxPtr ctx, long n, long scale, std::vector<ZqElem> body)
    : ctx_(std::move(ctx)), n_(n), scale_(scale), b_(std::move(body)) {
    if (n_ < 1) throw ValidationError("matrix dimension must be >= 1");
    if (scale_ < 0) throw ValidationError("scale must be >= 0");
    if (static_cast<long>(b_.size()) != n_ * n_)
        throw ValidationError("entry count does not match dimension");
    for (const auto& x : b_) require_same_ctx(ctx_, x.ctx());
    normalize();
}

void MatQq::normalize() {
    while (scale_ > 0) {
        bool all = std::all_of(b_.begin(), b_.end(),
                               [](const ZqElem& e) { return e.valuation() >= 1; });
        if (!all) break;
        for (auto& e : b_) e = e.div_exact_p_pow(1);
        --scale_;
    }
}

MatQq MatQq::integral(CtxPtr ctx, long n, std::vector<ZqElem> body) {
    return MatQq(std::move(ctx), n, 0, std::move(body));
}

MatQq MatQq::make(CtxPtr ctx, long n, long scale, std::vector<ZqElem> body) {
    return MatQq(std::move(ctx), n, scale, std::move(body));
}

MatQq MatQq::from_qq(CtxPtr ctx, long n, const std::vector<QqElem>& entries) {
    if (static_cast<long>(entries.size()) != n * n)
        throw ValidationError("entry count does not match dimension");
    long s = 0;
    for (const auto& e : entries)
        if (!e.is_zero()) s = std::max(s, -e.v());
    std::vector<ZqElem> body;
    body.reserve(n * n);
    for (const auto& e : entries) {
        if (e.is_zero())
            body.push_back(ZqElem::zero(ctx));
        else
            body.push_back(e.unit().times_p_pow(e.v() + s));
    }
    return MatQq(std::move(ctx), n, s, std::move(body));
}

MatQq MatQq::identity(const CtxPtr& ctx, long n) {
    std::vector<ZqElem> body(n * n, ZqElem::zero(ctx));
    for (long i = 0; i < n; ++i) body[i * n + i] = ZqElem::one(ctx);
    return MatQq(ctx, n, 0, std::move(body));
}

long MatQq::min_entry_valuation() const {
    long v = ctx_->k;
    for (const auto& e : b_) v = std::min(v, e.valuation());
    return v - scale_;
}

bool MatQq::operator==(const MatQq& o) const {
    require_same_ctx(ctx_, o.ctx_);
    return n_ == o.n_ && scale_ == o.scale_ && b_ == o.b_;
}

bool MatQq::congruent_mod(const MatQq& o, long m) const {
    require_same_ctx(ctx_, o.ctx_);
    if (n_ != o.n_) return false;
    long s = std::max(scale_, o.scale_);
    long mm = std::min(m + s, ctx_->k);
    if (mm <= 0) return true;
    BigInt pm = big_pow(ctx_->pz, mm);
    for (long i = 0; i < n_ * n_; ++i) {
        ZqElem a = b_[i].times_p_pow(s - scale_);
        ZqElem b = o.b_[i].times_p_pow(s - o.scale_);
        for (long c = 0; c < ctx_->d; ++c) {
            BigInt diff = a.coeffs()[c] - b.coeffs()[c];
            if (!mpz_divisible_p(diff.get_mpz_t(), pm.get_mpz_t())) return false;
        }
    }
    return true;
}

MatQq MatQq::operator*(const MatQq& o) const {
    require_same_ctx(ctx_, o.ctx_);
    if (n_ != o.n_) throw ValidationError("dimension mismatch");
    std::vector<ZqElem> r(n_ * n_, ZqElem::zero(ctx_));
    for (long i = 0; i < n_; ++i)
        for (long l = 0; l < n_; ++l) {
            if (body(i, l).is_zero()) continue;
            for (long j = 0; j < n_; ++j)
                r[i * n_ + j] = r[i * n_ + j] + body(i, l) * o.body(l, j);
        }
    return MatQq(ctx_, n_, scale_ + o.scale_, std::move(r));
}

MatQq MatQq::operator+(const MatQq& o) const {
    require_same_ctx(ctx_, o.ctx_);
    if (n_ != o.n_) throw ValidationError("dimension mismatch");
    long s = std::max(scale_, o.scale_);
    std::vector<ZqElem> r;
    r.reserve(n_ * n_);
    for (long i = 0; i < n_ * n_; ++i)
        r.push_back(b_[i].times_p_pow(s - scale_) + o.b_[i].times_p_pow(s - o.scale_));
    return MatQq(ctx_, n_, s, std::move(r));
}

MatQq MatQq::operator-(const MatQq& o) const {
    require_same_ctx(ctx_, o.ctx_);
    if (n_ != o.n_) throw ValidationError("dimension mismatch");
    long s = std::max(scale_, o.scale_);
    std::vector<ZqElem> r;
    r.reserve(n_ * n_);
    for (long i = 0; i < n_ * n_; ++i)
        r.push_back(b_[i].times_p_pow(s - scale_) - o.b_[i].times_p_pow(s - o.scale_));
    return MatQq(ctx_, n_, s, std::move(r));
}

MatQq MatQq::pow(const BigInt& e) const {
    if (e < 0) return inv_unimodular().pow(-e);
    MatQq result = identity(ctx_, n_);
    if (e == 0) return result;
    size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (size_t i = bits; i-- > 0;) {
        result = result * result;
        if (mpz_tstbit(e.get_mpz_t(), i)) result = result * *this;
    }
    return result;
}

MatQq MatQq::scale_by_p_pow(long j) const {
    if (j < 0) return MatQq(ctx_, n_, scale_ - j, b_);
    // cancel against the stored scale first; only the remainder multiplies
    // residues (and then truncates the top digits)
    long cancel = std::min(j, scale_);
    if (j == cancel) return MatQq(ctx_, n_, scale_ - cancel, b_);
    std::vector<ZqElem> r;
    r.reserve(b_.size());
    for (const auto& e : b_) r.push_back(e.times_p_pow(j - cancel));
    return MatQq(ctx_, n_, scale_ - cancel, std::move(r));
}

MatFq MatQq::reduce() const {
    if (scale_ != 0) throw NotIntegral("reduction requires an integral matrix");
    std::vector<FqElem> e;
    e.reserve(b_.size());
    for (const auto& x : b_) e.push_back(x.reduce());
    return MatFq(ctx_, n_, std::move(e));
}

MatQq MatQq::inv_unimodular() const {
    if (scale_ != 0) throw NotIntegral("inverse requires an integral matrix");
    std::vector<ZqElem> a = b_;
    std::vector<ZqElem> r(n_ * n_, ZqElem::zero(ctx_));
    for (long i = 0; i < n_; ++i) r[i * n_ + i] = ZqElem::one(ctx_);
    auto A = [&](long i, long j) -> ZqElem& { return a[i * n_ + j]; };
    auto R = [&](long i, long j) -> ZqElem& { return r[i * n_ + j]; };
    for (long j = 0; j < n_; ++j) {
        long piv = -1;
        for (long i = j; i < n_; ++i)
            if (A(i, j).is_unit()) { piv = i; break; }
        if (piv < 0) throw NonUnitDet("matrix is not invertible over O");
        if (piv != j)
            for (long l = 0; l < n_; ++l) {
                std::swap(A(piv, l), A(j, l));
                std::swap(R(piv, l), R(j, l));
            }
        ZqElem s = A(j, j).inv();
        for (long l = 0; l < n_; ++l) {
            A(j, l) = A(j, l) * s;
            R(j, l) = R(j, l) * s;
        }
        for (long i = 0; i < n_; ++i) {
            if (i == j || A(i, j).is_zero()) continue;
            ZqElem f = A(i, j);
            for (long l = 0; l < n_; ++l) {
                A(i, l) = A(i, l) - f * A(j, l);
                R(i, l) = R(i, l) - f * R(j, l);
            }
        }
    }
    return MatQq(ctx_, n_, 0, std::move(r));
}

bool MatQq::is_diagonal() const {
    for (long i = 0; i < n_; ++i)
        for (long j = 0; j < n_; ++j)
            if (i != j && !body(i, j).is_zero()) return false;
    return true;
}

// ---------------------------------------------------------------------------
// characteristic polynomial, boundedness

std::vector<ZqElem> charpoly_integral_body(const MatQq& g) {
    const CtxPtr& ctx = g.ctx();
    return detail::berkowitz_charpoly<ZqElem>(
        g.n(), [&](long i, long j) -> const ZqElem& { return g.body(i, j); },
        ZqElem::zero(ctx), ZqElem::one(ctx));
}

std::vector<QqElem> charpoly_zq(const MatQq& g) {
    const CtxPtr& ctx = g.ctx();
    long n = g.n(), s = g.scale();
    std::vector<ZqElem> c = charpoly_integral_body(g);
    std::vector<QqElem> out;
    out.reserve(n + 1);
    for (long i = 0; i <= n; ++i) {
        long j = n - i; // coefficient of x^i scales by p^{-s*(n-i)}
        if (c[i].is_zero()) {
            if (ctx->k - s * j <= 0)
                throw PrecisionInsufficient("charpoly coefficient valuation not certifiable");
            out.push_back(QqElem::zero(ctx));
        } else {
            out.push_back(qq_normalize(s * j, c[i]));
        }
    }
    return out;
}

long det_valuation(const MatQq& g) {
    std::vector<ZqElem> c = charpoly_integral_body(g);
    if (c[0].is_zero()) throw Singular("det = 0 at the working precision");
    return c[0].valuation() - g.scale() * g.n();
}

bool is_bounded(const MatQq& g) {
    const CtxPtr& ctx = g.ctx();
    long n = g.n(), s = g.scale();
    std::vector<ZqElem> c = charpoly_integral_body(g);
    if (c[0].is_zero()) throw Singular("det = 0 at the working precision");
    if (c[0].valuation() != s * n) return false; // det must be a unit
    bool uncertain = false;
    for (long i = 1; i < n; ++i) {
        long j = n - i;
        if (c[i].is_zero()) {
            if (ctx->k < s * j) uncertain = true;
        } else if (c[i].valuation() < s * j) {
            return false;
        }
    }
    if (uncertain)
        throw PrecisionInsufficient("charpoly integrality not certifiable at precision k");
    return true;
}

// ---------------------------------------------------------------------------
// lattices

Lattice Lattice::standard(const CtxPtr& ctx, long n) {
    return Lattice(MatQq::identity(ctx, n), std::vector<long>(n, 0));
}

long Lattice::e_max() const {
    return *std::max_element(exps_.begin(), exps_.end());
}

Lattice hnf(const CtxPtr& ctx, long n, const std::vector<std::vector<QqElem>>& columns) {
    if (columns.empty()) throw RankDeficient("no columns");
    long t = 0;
    for (const auto& col : columns) {
        if (static_cast<long>(col.size()) != n)
            throw ValidationError("column length does not match dimension");
        for (const auto& e : col)
            if (!e.is_zero()) t = std::max(t, -e.v());
    }
    std::vector<std::vector<ZqElem>> cols;
    cols.reserve(columns.size());
    for (const auto& col : columns) {
        std::vector<ZqElem> c;
        c.reserve(n);
        for (const auto& e : col) {
            if (e.is_zero())
                c.push_back(ZqElem::zero(ctx));
            else
                c.push_back(e.unit().times_p_pow(e.v() + t));
        }
        cols.push_back(std::move(c));
    }
    return canonical_lattice(ctx, n, raw_hnf(ctx, n, std::move(cols)));
}

Lattice stable_lattice(const MatQq& g) {
    if (!is_bounded(g)) throw NotBounded("stable lattice requires a bounded element");
    const CtxPtr& ctx = g.ctx();
    long n = g.n();
    std::vector<std::vector<QqElem>> cols;
    cols.reserve(n * n);
    MatQq power = MatQq::identity(ctx, n);
    for (long e = 0; e < n; ++e) {
        for (long j = 0; j < n; ++j) {
            std::vector<QqElem> col;
            col.reserve(n);
            for (long i = 0; i < n; ++i) col.push_back(power.entry(i, j));
            cols.push_back(std::move(col));
        }
        if (e + 1 < n) power = power * g;
    }
    return hnf(ctx, n, cols);
}

bool lattice_stabilizes(const MatQq& g, const Lattice& l) {
    const CtxPtr& ctx = g.ctx();
    require_same_ctx(ctx, l.ctx());
    long n = g.n();
    if (n != l.n()) throw ValidationError("dimension mismatch");
    long v = det_valuation(g);
    if (v % n != 0) return false;
    long t = v / n;

    // route 1: raw HNF of g * basis equals p^t * basis
    MatQq gw = g * l.basis();
    long c = std::max({gw.scale(), -t, 0L});
    for (long i = 0; i < n; ++i)
        if (l.diag_exponents()[i] + c + t >= ctx->k)
            throw PrecisionInsufficient("lattice comparison exceeds precision k");
    std::vector<std::vector<ZqElem>> cols(n);
    for (long j = 0; j < n; ++j) {
        cols[j].reserve(n);
        for (long i = 0; i < n; ++i)
            cols[j].push_back(gw.body(i, j).times_p_pow(c - gw.scale()));
    }
    RawHnf got = raw_hnf(ctx, n, std::move(cols));
    bool route1 = true;
    for (long i = 0; i < n && route1; ++i)
        if (got.exps[i] != l.diag_exponents()[i] + c + t) route1 = false;
    for (long j = 0; j < n && route1; ++j)
        for (long i = 0; i <= j && route1; ++i)
            if (!(got.cols[j][i] == l.basis().body(i, j).times_p_pow(c + t))) route1 = false;

    // route 2: all entries of p^{-t} B^{-1} g B integral
    RawHnf w = raw_of_lattice(l);
    XMat gb = xmat_from_body(g);
    XMat wb = xmat_from_body(l.basis());
    XMat r = xmat_mul(ctx, n, gb, wb);
    XMat y;
    bool route2 = solve_upper_exact(ctx, n, w, r, y);
    if (route2) {
        // y = p^{s_g} * B^{-1} g B; need valuations >= t + s_g
        long need = t + g.scale();
        for (const auto& e : y)
            if (xp_valuation(ctx, e) < need) { route2 = false; break; }
    }
    return route1 && route2;
}

ScaledInverse lattice_basis_inverse(const Lattice& l) {
    const CtxPtr& ctx = l.ctx();
    long n = l.n();
    RawHnf w = raw_of_lattice(l);
    long cap = 0;
    for (long e : w.exps) cap += e;
    for (long nu = 0; nu <= cap; ++nu) {
        XMat r(n * n, xp_zero(ctx));
        BigInt pj = big_pow(ctx->pz, nu);
        for (long i = 0; i < n; ++i) r[i * n + i][0] = pj;
        XMat y;
        if (solve_upper_exact(ctx, n, w, r, y)) {
            std::vector<ZqElem> body;
            body.reserve(n * n);
            for (auto& e : y) body.emplace_back(ctx, std::move(e));
            return ScaledInverse{MatQq::integral(ctx, n, std::move(body)), nu};
        }
    }
    throw TjdError("lattice basis inverse exceeded its denominator bound");
}

IntegralConjugate conjugate_into_integral(const MatQq& g) {
    if (!is_bounded(g)) throw NotBounded("conjugation requires a bounded element");
    const CtxPtr& ctx = g.ctx();
    long n = g.n();
    Lattice l = stable_lattice(g);
    long eff = ctx->k - 2 * l.e_max();
    if (eff < 1)
        throw PrecisionInsufficient("k - 2*e_max < 1; raise the working precision");
    RawHnf w = raw_of_lattice(l);
    XMat r = xmat_mul(ctx, n, xmat_from_body(g), xmat_from_body(l.basis()));
    XMat y;
    if (!solve_upper_exact(ctx, n, w, r, y))
        throw PrecisionInsufficient("conjugate is not certifiably integral at precision k");
    std::vector<ZqElem> body;
    body.reserve(n * n);
    for (auto& e : y) {
        if (!xp_div_exact(ctx, e, g.scale()))
            throw PrecisionInsufficient("conjugate is not certifiably integral at precision k");
        body.emplace_back(ctx, std::move(e));
    }
    MatQq h = MatQq::integral(ctx, n, std::move(body));
    return IntegralConjugate{std::move(l), std::move(h), eff};
}

} // namespace tjd
