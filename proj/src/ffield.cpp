#include "tjd/ffield.hpp"

#include "tjd/berkowitz.hpp"

#include <algorithm>

namespace tjd {

// ---------------------------------------------------------------------------
// F_q[x]

void fq_poly_trim(FqPoly& f) {
    while (!f.empty() && f.back().is_zero()) f.pop_back();
}

FqPoly fq_poly_add(const FqPoly& a, const FqPoly& b) {
    const FqPoly& lo = a.size() < b.size() ? a : b;
    const FqPoly& hi = a.size() < b.size() ? b : a;
    FqPoly r = hi;
    for (size_t i = 0; i < lo.size(); ++i) r[i] = r[i] + lo[i];
    fq_poly_trim(r);
    return r;
}

FqPoly fq_poly_sub(const FqPoly& a, const FqPoly& b) {
    if (b.empty()) {
        FqPoly r = a;
        fq_poly_trim(r);
        return r;
    }
    FqPoly r = a;
    r.resize(std::max(a.size(), b.size()), FqElem::zero(b[0].ctx()));
    for (size_t i = 0; i < b.size(); ++i) r[i] = r[i] - b[i];
    fq_poly_trim(r);
    return r;
}

FqPoly fq_poly_mul(const FqPoly& a, const FqPoly& b) {
    if (a.empty() || b.empty()) return {};
    const CtxPtr& ctx = a[0].ctx();
    FqPoly r(a.size() + b.size() - 1, FqElem::zero(ctx));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
    }
    fq_poly_trim(r);
    return r;
}

std::pair<FqPoly, FqPoly> fq_poly_divrem(const FqPoly& a, const FqPoly& b) {
    if (b.empty()) throw ValidationError("polynomial division by zero");
    const CtxPtr& ctx = b[0].ctx();
    FqPoly rem = a;
    fq_poly_trim(rem);
    long db = static_cast<long>(b.size()) - 1;
    FqElem lead_inv = b.back().inv();
    FqPoly q;
    if (static_cast<long>(rem.size()) - 1 >= db)
        q.assign(rem.size() - db, FqElem::zero(ctx));
    while (static_cast<long>(rem.size()) - 1 >= db && !rem.empty()) {
        long da = static_cast<long>(rem.size()) - 1;
        FqElem c = rem.back() * lead_inv;
        q[da - db] = c;
        for (long j = 0; j <= db; ++j)
            rem[da - db + j] = rem[da - db + j] - c * b[j];
        fq_poly_trim(rem);
    }
    fq_poly_trim(q);
    return {q, rem};
}

FqPoly fq_poly_gcd(FqPoly a, FqPoly b) {
    fq_poly_trim(a);
    fq_poly_trim(b);
    while (!b.empty()) {
        a = fq_poly_divrem(a, b).second;
        std::swap(a, b);
    }
    if (!a.empty()) {
        FqElem li = a.back().inv();
        for (auto& c : a) c = c * li;
    }
    return a;
}

FqPoly fq_poly_derivative(const FqPoly& f) {
    if (f.size() <= 1) return {};
    const CtxPtr& ctx = f[0].ctx();
    FqPoly r;
    r.reserve(f.size() - 1);
    for (size_t i = 1; i < f.size(); ++i) {
        FqElem scale = FqElem::from_int(ctx, static_cast<long>(i % ctx->p));
        r.push_back(f[i] * scale);
    }
    fq_poly_trim(r);
    return r;
}

namespace {

// f = h(x^p) -> h with p-th roots of the coefficients of f
FqPoly fq_poly_pth_root(const FqPoly& f) {
    const CtxPtr& ctx = f[0].ctx();
    long p = ctx->p;
    FqPoly h;
    h.reserve(f.size() / p + 1);
    for (size_t i = 0; i < f.size(); i += p) h.push_back(f[i].frobenius_inv());
    fq_poly_trim(h);
    return h;
}

} // namespace

FqPoly fq_poly_radical(const FqPoly& f_in) {
    FqPoly f = f_in;
    fq_poly_trim(f);
    if (f.empty()) throw ValidationError("radical of the zero polynomial");
    const CtxPtr& ctx = f[0].ctx();
    if (f.size() == 1) return {FqElem::one(ctx)};
    FqPoly fp = fq_poly_derivative(f);
    if (fp.empty()) {
        // f = h(x^p); all multiplicities divisible by p
        return fq_poly_radical(fq_poly_pth_root(f));
    }
    FqPoly u = fq_poly_gcd(f, fp);
    FqPoly v = fq_poly_divrem(f, u).first; // distinct factors of mult != 0 mod p
    // strip the factors of v from u; what is left has p-divisible multiplicity
    FqPoly w = u;
    for (;;) {
        FqPoly g = fq_poly_gcd(w, v);
        if (g.size() <= 1) break;
        w = fq_poly_divrem(w, g).first;
    }
    if (w.size() <= 1) return v;
    return fq_poly_mul(v, fq_poly_radical(w));
}

// ---------------------------------------------------------------------------
// MatFq

MatFq::MatFq(CtxPtr ctx, long n, std::vector<FqElem> entries)
    : ctx_(std::move(ctx)), n_(n), e_(std::move(entries)) {
    if (n_ < 1) throw ValidationError("matrix dimension must be >= 1");
    if (static_cast<long>(e_.size()) != n_ * n_)
        throw ValidationError("entry count does not match dimension");
    for (const auto& x : e_) require_same_ctx(ctx_, x.ctx());
}

MatFq MatFq::identity(const CtxPtr& ctx, long n) {
    std::vector<FqElem> e(n * n, FqElem::zero(ctx));
    for (long i = 0; i < n; ++i) e[i * n + i] = FqElem::one(ctx);
    return MatFq(ctx, n, std::move(e));
}

MatFq MatFq::zero(const CtxPtr& ctx, long n) {
    return MatFq(ctx, n, std::vector<FqElem>(n * n, FqElem::zero(ctx)));
}

MatFq MatFq::permutation(const CtxPtr& ctx, const std::vector<uint32_t>& images) {
    long n = static_cast<long>(images.size());
    MatFq m = zero(ctx, n);
    for (long j = 0; j < n; ++j) m.at(images[j], j) = FqElem::one(ctx);
    return m;
}

bool MatFq::operator==(const MatFq& o) const {
    require_same_ctx(ctx_, o.ctx_);
    return n_ == o.n_ && e_ == o.e_;
}

bool MatFq::is_identity() const { return *this == identity(ctx_, n_); }

MatFq MatFq::operator*(const MatFq& o) const {
    require_same_ctx(ctx_, o.ctx_);
    if (n_ != o.n_) throw ValidationError("dimension mismatch");
    MatFq r = zero(ctx_, n_);
    for (long i = 0; i < n_; ++i)
        for (long l = 0; l < n_; ++l) {
            if (at(i, l).is_zero()) continue;
            for (long j = 0; j < n_; ++j)
                r.at(i, j) = r.at(i, j) + at(i, l) * o.at(l, j);
        }
    return r;
}

MatFq MatFq::operator+(const MatFq& o) const {
    require_same_ctx(ctx_, o.ctx_);
    if (n_ != o.n_) throw ValidationError("dimension mismatch");
    MatFq r = *this;
    for (long i = 0; i < n_ * n_; ++i) r.e_[i] = r.e_[i] + o.e_[i];
    return r;
}

MatFq MatFq::operator-(const MatFq& o) const {
    require_same_ctx(ctx_, o.ctx_);
    if (n_ != o.n_) throw ValidationError("dimension mismatch");
    MatFq r = *this;
    for (long i = 0; i < n_ * n_; ++i) r.e_[i] = r.e_[i] - o.e_[i];
    return r;
}

MatFq MatFq::pow(const BigInt& e) const {
    if (e < 0) return inv().pow(-e);
    MatFq result = identity(ctx_, n_);
    if (e == 0) return result;
    size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (size_t i = bits; i-- > 0;) {
        result = result * result;
        if (mpz_tstbit(e.get_mpz_t(), i)) result = result * *this;
    }
    return result;
}

MatFq MatFq::inv() const {
    MatFq a = *this;
    MatFq r = identity(ctx_, n_);
    for (long j = 0; j < n_; ++j) {
        long piv = -1;
        for (long i = j; i < n_; ++i)
            if (!a.at(i, j).is_zero()) { piv = i; break; }
        if (piv < 0) throw Singular("matrix over F_q is singular");
        if (piv != j)
            for (long l = 0; l < n_; ++l) {
                std::swap(a.at(piv, l), a.at(j, l));
                std::swap(r.at(piv, l), r.at(j, l));
            }
        FqElem s = a.at(j, j).inv();
        for (long l = 0; l < n_; ++l) {
            a.at(j, l) = a.at(j, l) * s;
            r.at(j, l) = r.at(j, l) * s;
        }
        for (long i = 0; i < n_; ++i) {
            if (i == j || a.at(i, j).is_zero()) continue;
            FqElem f = a.at(i, j);
            for (long l = 0; l < n_; ++l) {
                a.at(i, l) = a.at(i, l) - f * a.at(j, l);
                r.at(i, l) = r.at(i, l) - f * r.at(j, l);
            }
        }
    }
    return r;
}

FqPoly charpoly_fq(const MatFq& g) {
    const CtxPtr& ctx = g.ctx();
    return detail::berkowitz_charpoly<FqElem>(
        g.n(), [&](long i, long j) -> const FqElem& { return g.at(i, j); },
        FqElem::zero(ctx), FqElem::one(ctx));
}

FqElem det_fq(const MatFq& g) {
    FqPoly cp = charpoly_fq(g);
    FqElem c0 = cp[0]; // det(xI - g) at 0 = (-1)^n det g
    if (g.n() % 2 == 1) c0 = -c0;
    return c0;
}

bool is_unipotent_fq(const MatFq& g) {
    MatFq d = g - MatFq::identity(g.ctx(), g.n());
    return d.pow(g.n()) == MatFq::zero(g.ctx(), g.n());
}

bool is_semisimple_fq(const MatFq& g) {
    if (det_fq(g).is_zero()) throw Singular("semisimplicity test requires invertible input");
    FqPoly rad = fq_poly_radical(charpoly_fq(g));
    // Horner evaluation of rad at g
    MatFq acc = MatFq::zero(g.ctx(), g.n());
    for (size_t i = rad.size(); i-- > 0;) {
        acc = acc * g;
        for (long j = 0; j < g.n(); ++j) acc.at(j, j) = acc.at(j, j) + rad[i];
    }
    return acc == MatFq::zero(g.ctx(), g.n());
}

BigInt semisimple_exponent_bound(const CtxPtr& ctx, long n) {
    BigInt m = 1;
    BigInt qe = 1;
    for (long e = 1; e <= n; ++e) {
        qe *= ctx->q;
        m = big_lcm(m, qe - 1);
    }
    return m;
}

FinJordanPair fin_jordan(const MatFq& g) {
    const CtxPtr& ctx = g.ctx();
    if (det_fq(g).is_zero()) throw Singular("fin_jordan requires invertible input");
    BigInt m = semisimple_exponent_bound(ctx, g.n());
    long a = ceil_log(ctx->p, g.n());
    BigInt pa = big_pow(ctx->pz, a);
    BigInt c_s = crt_pair(0, pa, 1, m);
    BigInt c_u = crt_pair(1, pa, 0, m);
    return FinJordanPair{g.pow(c_s), g.pow(c_u), c_s, c_u};
}

BigInt mult_order(const MatFq& g) {
    const CtxPtr& ctx = g.ctx();
    if (det_fq(g).is_zero()) throw Singular("mult_order requires invertible input");
    long a = ceil_log(ctx->p, g.n());
    // collect the primes of the exponent bound p^a * lcm_e(q^e - 1)
    std::vector<BigInt> primes{ctx->pz};
    BigInt qe = 1;
    for (long e = 1; e <= g.n(); ++e) {
        qe *= ctx->q;
        BigInt rest = qe - 1;
        for (BigInt f = 2; f * f <= rest && f < (1 << 20);) {
            if (mpz_divisible_p(rest.get_mpz_t(), f.get_mpz_t())) {
                primes.push_back(f);
                while (mpz_divisible_p(rest.get_mpz_t(), f.get_mpz_t())) rest /= f;
            } else {
                ++f;
            }
        }
        if (rest > 1) {
            if (mpz_probab_prime_p(rest.get_mpz_t(), 40) == 0)
                throw ValidationError("exponent bound has an intractable composite cofactor");
            primes.push_back(rest);
        }
    }
    std::sort(primes.begin(), primes.end());
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
    BigInt ord = big_pow(ctx->pz, a) * semisimple_exponent_bound(ctx, g.n());
    MatFq id = MatFq::identity(ctx, g.n());
    for (const BigInt& ell : primes) {
        while (mpz_divisible_p(ord.get_mpz_t(), ell.get_mpz_t())) {
            BigInt cand = ord / ell;
            if (g.pow(cand) == id)
                ord = cand;
            else
                break;
        }
    }
    return ord;
}

} // namespace tjd
