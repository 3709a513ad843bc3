#include "tjd/padic.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace tjd {

// ---------------------------------------------------------------------------
// small polynomial arithmetic over F_p (coefficients in [0,p), low -> high)

namespace {

using Poly = std::vector<long>;

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

long inv_mod_p(long a, long p) {
    long t = 0, newt = 1, r = p, newr = a % p;
    while (newr != 0) {
        long qt = r / newr;
        t -= qt * newt; std::swap(t, newt);
        r -= qt * newr; std::swap(r, newr);
    }
    if (r != 1) throw NonUnit("not invertible mod p");
    return ((t % p) + p) % p;
}

Poly poly_rem(Poly a, const Poly& f, long p) {
    trim(a);
    long df = static_cast<long>(f.size()) - 1;
    long lead_inv = inv_mod_p(f[df], p);
    while (static_cast<long>(a.size()) - 1 >= df && !a.empty()) {
        long da = static_cast<long>(a.size()) - 1;
        long c = (a[da] * lead_inv) % p;
        if (c != 0)
            for (long j = 0; j <= df; ++j)
                a[da - df + j] = ((a[da - df + j] - c * f[j]) % p + p) % p;
        trim(a);
    }
    return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, long p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    return poly_rem(std::move(r), f, p);
}

Poly poly_powmod(Poly base, const BigInt& e, const Poly& f, long p) {
    Poly result{1};
    base = poly_rem(std::move(base), f, p);
    size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    if (e == 0) return result;
    for (size_t i = bits; i-- > 0;) {
        result = poly_mulmod(result, result, f, p);
        if (mpz_tstbit(e.get_mpz_t(), i))
            result = poly_mulmod(result, base, f, p);
    }
    return result;
}

Poly poly_gcd(Poly a, Poly b, long p) {
    trim(a); trim(b);
    while (!b.empty()) {
        a = poly_rem(std::move(a), b, p);
        std::swap(a, b);
    }
    // normalize monic
    if (!a.empty()) {
        long li = inv_mod_p(a.back(), p);
        for (auto& c : a) c = (c * li) % p;
    }
    return a;
}

// u with u*a = 1 mod f (a nonzero mod f, f irreducible)
Poly poly_invmod(const Poly& a, const Poly& f, long p) {
    Poly r0 = f, r1 = poly_rem(a, f, p);
    Poly t0{}, t1{1};
    if (r1.empty()) throw NonUnit("zero has no inverse");
    while (!r1.empty()) {
        // r0 = q*r1 + r2
        Poly q;
        Poly rem = r0;
        trim(rem);
        long d1 = static_cast<long>(r1.size()) - 1;
        long lead_inv = inv_mod_p(r1[d1], p);
        q.assign(std::max<long>(static_cast<long>(rem.size()) - d1, 1), 0);
        while (static_cast<long>(rem.size()) - 1 >= d1 && !rem.empty()) {
            long da = static_cast<long>(rem.size()) - 1;
            long c = (rem[da] * lead_inv) % p;
            q[da - d1] = c;
            for (long j = 0; j <= d1; ++j)
                rem[da - d1 + j] = ((rem[da - d1 + j] - c * r1[j]) % p + p) % p;
            trim(rem);
        }
        // t2 = t0 - q*t1
        Poly qt;
        if (!q.empty() && !t1.empty()) {
            qt.assign(q.size() + t1.size() - 1, 0);
            for (size_t i = 0; i < q.size(); ++i)
                for (size_t j = 0; j < t1.size(); ++j)
                    qt[i + j] = (qt[i + j] + q[i] * t1[j]) % p;
        }
        Poly t2(std::max(t0.size(), qt.size()), 0);
        for (size_t i = 0; i < t2.size(); ++i) {
            long v0 = i < t0.size() ? t0[i] : 0;
            long v1 = i < qt.size() ? qt[i] : 0;
            t2[i] = ((v0 - v1) % p + p) % p;
        }
        trim(t2);
        r0 = std::move(r1); r1 = std::move(rem);
        t0 = std::move(t1); t1 = std::move(t2);
    }
    if (r0.size() != 1) throw NonUnit("element not invertible");
    long li = inv_mod_p(r0[0], p);
    for (auto& c : t0) c = (c * li) % p;
    return poly_rem(std::move(t0), f, p);
}

long least_primitive_root(long p) {
    if (p == 2) return 1;
    std::vector<long> primes;
    long m = p - 1;
    for (long d2 = 2; d2 * d2 <= m; ++d2)
        while (m % d2 == 0) {
            if (primes.empty() || primes.back() != d2) primes.push_back(d2);
            m /= d2;
        }
    if (m > 1) primes.push_back(m);
    for (long r = 2; r < p; ++r) {
        bool ok = true;
        for (long ell : primes) {
            BigInt t = big_powm(r, (p - 1) / ell, p);
            if (t == 1) { ok = false; break; }
        }
        if (ok) return r;
    }
    throw ValidationError("no primitive root found (p not prime?)");
}

// Conway polynomials, coefficients low -> high.
const std::map<std::pair<long, long>, std::vector<long>>& conway_table() {
    static const std::map<std::pair<long, long>, std::vector<long>> t = {
        {{2, 1}, {1, 1}},
        {{2, 2}, {1, 1, 1}},
        {{2, 3}, {1, 1, 0, 1}},
        {{2, 4}, {1, 1, 0, 0, 1}},
        {{3, 1}, {1, 1}},
        {{3, 2}, {2, 2, 1}},
        {{3, 3}, {1, 2, 0, 1}},
        {{3, 4}, {2, 0, 0, 2, 1}},
        {{5, 1}, {3, 1}},
        {{5, 2}, {2, 4, 1}},
        {{5, 3}, {3, 3, 0, 1}},
        {{5, 4}, {2, 4, 4, 0, 1}},
        {{7, 1}, {4, 1}},
        {{7, 2}, {3, 6, 1}},
        {{7, 3}, {4, 0, 6, 1}},
        {{7, 4}, {3, 4, 5, 0, 1}},
        {{11, 1}, {9, 1}},
        {{11, 2}, {2, 7, 1}},
        {{11, 3}, {9, 2, 0, 1}},
        {{11, 4}, {2, 10, 8, 0, 1}},
        {{13, 1}, {11, 1}},
        {{13, 2}, {2, 12, 1}},
        {{13, 3}, {11, 2, 0, 1}},
        {{13, 4}, {2, 12, 3, 0, 1}},
    };
    return t;
}

} // namespace

bool modulus_irreducible(long p, const std::vector<long>& f) {
    long d = static_cast<long>(f.size()) - 1;
    Poly x{0, 1};
    for (long i = 1; i <= d / 2; ++i) {
        Poly xpi = poly_powmod(x, big_pow(p, i), f, p);
        // xpi - x
        Poly diff = xpi;
        if (diff.size() < 2) diff.resize(2, 0);
        diff[1] = ((diff[1] - 1) % p + p) % p;
        trim(diff);
        Poly g = poly_gcd(f, diff, p);
        if (static_cast<long>(g.size()) - 1 >= 1) return false;
    }
    Poly xpd = poly_powmod(x, big_pow(p, d), f, p);
    Poly xr = poly_rem(x, f, p);
    return xpd == xr;
}

bool PadicCtx::has_default_modulus(long p, long d) {
    return d == 1 || conway_table().count({p, d}) > 0;
}

std::vector<long> PadicCtx::default_modulus(long p, long d) {
    auto it = conway_table().find({p, d});
    if (it != conway_table().end()) return it->second;
    if (d == 1) return {((p - least_primitive_root(p)) % p + p) % p, 1};
    throw ValidationError("no built-in modulus for p=" + std::to_string(p) +
                          ", d=" + std::to_string(d) + "; supply one explicitly");
}

CtxPtr PadicCtx::make(long p, long d, long k) {
    return make(p, d, k, default_modulus(p, d));
}

CtxPtr PadicCtx::make(long p, long d, long k, std::vector<long> modulus) {
    if (p >= (1L << 16)) throw ValidationError("p must be < 2^16");
    if (!is_small_prime(p)) throw ValidationError("p is not prime");
    if (d < 1) throw ValidationError("residue degree must be >= 1");
    if (k < 1) throw ValidationError("precision must be >= 1");
    if (static_cast<long>(modulus.size()) != d + 1)
        throw ValidationError("modulus must have degree d");
    for (auto& c : modulus) c = ((c % p) + p) % p;
    if (modulus[d] != 1) throw ValidationError("modulus must be monic");
    if (!modulus_irreducible(p, modulus))
        throw ValidationError("modulus is reducible over F_p");
    auto ctx = std::shared_ptr<PadicCtx>(new PadicCtx());
    ctx->p = p;
    ctx->d = d;
    ctx->k = k;
    ctx->modulus = std::move(modulus);
    ctx->pz = p;
    ctx->pk = big_pow(BigInt(p), k);
    ctx->q = big_pow(BigInt(p), d);
    return ctx;
}

// ---------------------------------------------------------------------------
// FqElem

FqElem::FqElem(CtxPtr ctx, std::vector<long> coeffs) : ctx_(std::move(ctx)) {
    if (static_cast<long>(coeffs.size()) > ctx_->d)
        throw ValidationError("too many coefficients for residue degree");
    coeffs.resize(ctx_->d, 0);
    for (auto& c : coeffs) c = ((c % ctx_->p) + ctx_->p) % ctx_->p;
    c_ = std::move(coeffs);
}

FqElem FqElem::zero(const CtxPtr& ctx) { return FqElem(ctx, {}); }
FqElem FqElem::one(const CtxPtr& ctx) { return FqElem(ctx, {1}); }
FqElem FqElem::from_int(const CtxPtr& ctx, long v) { return FqElem(ctx, {v}); }
FqElem FqElem::gen(const CtxPtr& ctx) {
    if (ctx->d == 1) throw ValidationError("prime field has no generator x");
    return FqElem(ctx, {0, 1});
}

bool FqElem::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](long c) { return c == 0; });
}

bool FqElem::operator==(const FqElem& o) const {
    require_same_ctx(ctx_, o.ctx_);
    return c_ == o.c_;
}

FqElem FqElem::operator+(const FqElem& o) const {
    require_same_ctx(ctx_, o.ctx_);
    std::vector<long> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = (c_[i] + o.c_[i]) % ctx_->p;
    return FqElem(ctx_, std::move(r));
}

FqElem FqElem::operator-(const FqElem& o) const {
    require_same_ctx(ctx_, o.ctx_);
    std::vector<long> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i)
        r[i] = ((c_[i] - o.c_[i]) % ctx_->p + ctx_->p) % ctx_->p;
    return FqElem(ctx_, std::move(r));
}

FqElem FqElem::operator-() const {
    std::vector<long> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = (ctx_->p - c_[i]) % ctx_->p;
    return FqElem(ctx_, std::move(r));
}

FqElem FqElem::operator*(const FqElem& o) const {
    require_same_ctx(ctx_, o.ctx_);
    Poly prod = poly_mulmod(c_, o.c_, ctx_->modulus, ctx_->p);
    prod.resize(ctx_->d, 0);
    return FqElem(ctx_, std::move(prod));
}

FqElem FqElem::inv() const {
    if (is_zero()) throw NonUnit("inverse of zero in F_q");
    Poly r = poly_invmod(c_, ctx_->modulus, ctx_->p);
    r.resize(ctx_->d, 0);
    return FqElem(ctx_, std::move(r));
}

FqElem FqElem::pow(const BigInt& e) const {
    if (e < 0) return inv().pow(-e);
    Poly r = poly_powmod(c_, e, ctx_->modulus, ctx_->p);
    r.resize(ctx_->d, 0);
    return FqElem(ctx_, std::move(r));
}

FqElem FqElem::frobenius_inv() const {
    return pow(big_pow(ctx_->pz, ctx_->d - 1));
}

// ---------------------------------------------------------------------------
// ZqElem

ZqElem::ZqElem(CtxPtr ctx, std::vector<BigInt> coeffs) : ctx_(std::move(ctx)) {
    if (static_cast<long>(coeffs.size()) > ctx_->d)
        throw ValidationError("too many coefficients for residue degree");
    coeffs.resize(ctx_->d, BigInt(0));
    for (auto& c : coeffs) {
        mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), ctx_->pk.get_mpz_t());
    }
    c_ = std::move(coeffs);
}

ZqElem ZqElem::zero(const CtxPtr& ctx) { return ZqElem(ctx, {}); }
ZqElem ZqElem::one(const CtxPtr& ctx) { return ZqElem(ctx, {BigInt(1)}); }
ZqElem ZqElem::from_int(const CtxPtr& ctx, const BigInt& v) { return ZqElem(ctx, {v}); }

ZqElem ZqElem::lift(const FqElem& a) {
    std::vector<BigInt> c(a.coeffs().begin(), a.coeffs().end());
    return ZqElem(a.ctx(), std::move(c));
}

bool ZqElem::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const BigInt& c) { return c == 0; });
}

bool ZqElem::operator==(const ZqElem& o) const {
    require_same_ctx(ctx_, o.ctx_);
    return c_ == o.c_;
}

bool ZqElem::congruent_mod(const ZqElem& o, long m) const {
    require_same_ctx(ctx_, o.ctx_);
    if (m >= ctx_->k) return c_ == o.c_;
    if (m <= 0) return true;
    BigInt pm = big_pow(ctx_->pz, m);
    for (long i = 0; i < ctx_->d; ++i) {
        BigInt diff = c_[i] - o.c_[i];
        if (!mpz_divisible_p(diff.get_mpz_t(), pm.get_mpz_t())) return false;
    }
    return true;
}

ZqElem ZqElem::operator+(const ZqElem& o) const {
    require_same_ctx(ctx_, o.ctx_);
    std::vector<BigInt> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] + o.c_[i];
    return ZqElem(ctx_, std::move(r));
}

ZqElem ZqElem::operator-(const ZqElem& o) const {
    require_same_ctx(ctx_, o.ctx_);
    std::vector<BigInt> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] - o.c_[i];
    return ZqElem(ctx_, std::move(r));
}

ZqElem ZqElem::operator-() const {
    std::vector<BigInt> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = -c_[i];
    return ZqElem(ctx_, std::move(r));
}

ZqElem ZqElem::operator*(const ZqElem& o) const {
    require_same_ctx(ctx_, o.ctx_);
    long d = ctx_->d;
    std::vector<BigInt> prod(2 * d - 1, BigInt(0));
    for (long i = 0; i < d; ++i) {
        if (c_[i] == 0) continue;
        for (long j = 0; j < d; ++j)
            if (o.c_[j] != 0) prod[i + j] += c_[i] * o.c_[j];
    }
    // reduce by the canonical integer lift of the (monic) modulus
    for (long i = 2 * d - 2; i >= d; --i) {
        if (prod[i] == 0) continue;
        for (long j = 0; j < d; ++j)
            if (ctx_->modulus[j] != 0) prod[i - d + j] -= prod[i] * ctx_->modulus[j];
        prod[i] = 0;
    }
    prod.resize(d);
    return ZqElem(ctx_, std::move(prod));
}

ZqElem ZqElem::inv() const {
    FqElem r0 = reduce();
    if (r0.is_zero()) throw NonUnit("inverse of a non-unit in O");
    ZqElem x = ZqElem::lift(r0.inv());
    ZqElem two = ZqElem(ctx_, {BigInt(2)});
    long prec = 1;
    while (prec < ctx_->k) {
        x = x * (two - *this * x);
        prec *= 2;
    }
    return x;
}

ZqElem ZqElem::pow(const BigInt& e) const {
    if (e < 0) return inv().pow(-e);
    ZqElem result = ZqElem::one(ctx_);
    if (e == 0) return result;
    size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (size_t i = bits; i-- > 0;) {
        result = result * result;
        if (mpz_tstbit(e.get_mpz_t(), i)) result = result * *this;
    }
    return result;
}

FqElem ZqElem::reduce() const {
    std::vector<long> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) {
        BigInt m = c_[i] % ctx_->pz;
        r[i] = m.get_si();
    }
    return FqElem(ctx_, std::move(r));
}

long ZqElem::valuation() const {
    long v = ctx_->k;
    for (const auto& c : c_) {
        if (c == 0) continue;
        BigInt t = c;
        long vc = remove_p(t, ctx_->pz);
        v = std::min(v, vc);
    }
    return v;
}

ZqElem ZqElem::times_p_pow(long j) const {
    if (j < 0) throw ValidationError("negative power in times_p_pow");
    BigInt pj = big_pow(ctx_->pz, j);
    std::vector<BigInt> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] * pj;
    return ZqElem(ctx_, std::move(r));
}

ZqElem ZqElem::div_exact_p_pow(long j) const {
    if (j == 0) return *this;
    BigInt pj = big_pow(ctx_->pz, j);
    std::vector<BigInt> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) {
        if (!mpz_divisible_p(c_[i].get_mpz_t(), pj.get_mpz_t()))
            throw PrecisionInsufficient("residue not divisible by p^" + std::to_string(j));
        r[i] = c_[i] / pj;
    }
    return ZqElem(ctx_, std::move(r));
}

// ---------------------------------------------------------------------------

ZqElem teichmuller(const FqElem& a) {
    const CtxPtr& ctx = a.ctx();
    ZqElem y = ZqElem::lift(a);
    for (long i = 0; i + 1 < ctx->k; ++i) y = y.pow(ctx->q);
    if (!(y.pow(ctx->q) == y))
        throw TjdError("teichmuller iteration failed to stabilise");
    return y;
}

QqElem QqElem::zero(const CtxPtr& ctx) { return QqElem(true, 0, ZqElem::zero(ctx)); }

QqElem QqElem::make(long v, ZqElem unit) {
    if (!unit.is_unit()) throw ValidationError("unit part of QqElem is not a unit");
    return QqElem(false, v, std::move(unit));
}

QqElem QqElem::from_zq(const ZqElem& a) { return qq_normalize(0, a); }

QqElem QqElem::p_power(const CtxPtr& ctx, long v) {
    return QqElem(false, v, ZqElem::one(ctx));
}

long QqElem::v() const {
    if (zero_) throw ValidationError("valuation of zero");
    return v_;
}

const ZqElem& QqElem::unit() const {
    if (zero_) throw ValidationError("unit part of zero");
    return unit_;
}

QqElem QqElem::operator*(const QqElem& o) const {
    if (zero_ || o.zero_) return QqElem(true, 0, ZqElem::zero(ctx()));
    return QqElem(false, v_ + o.v_, unit_ * o.unit_);
}

QqElem QqElem::inv() const {
    if (zero_) throw NonUnit("inverse of zero in Q_q");
    return QqElem(false, -v_, unit_.inv());
}

bool QqElem::operator==(const QqElem& o) const {
    if (zero_ != o.zero_) return false;
    if (zero_) return true;
    return v_ == o.v_ && unit_ == o.unit_;
}

QqElem qq_normalize(long s, const ZqElem& a) {
    if (a.is_zero()) return QqElem::zero(a.ctx());
    long v0 = a.valuation();
    return QqElem::make(v0 - s, a.div_exact_p_pow(v0));
}

} // namespace tjd
