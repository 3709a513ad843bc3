#include "tjd/randomgen.hpp"

#include <numeric>

namespace tjd {

BigInt Rng::below_big(const BigInt& n) {
    if (n <= 1) return 0;
    size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
    size_t words = (bits + 63) / 64 + 1;
    BigInt acc = 0;
    for (size_t i = 0; i < words; ++i) {
        acc <<= 64;
        acc += BigInt(static_cast<unsigned long>(next()));
    }
    return acc % n;
}

FqElem random_fq(Rng& rng, const CtxPtr& ctx) {
    std::vector<long> c(ctx->d);
    for (auto& x : c) x = rng.below_long(ctx->p);
    return FqElem(ctx, std::move(c));
}

FqElem random_fq_nonzero(Rng& rng, const CtxPtr& ctx) {
    for (;;) {
        FqElem a = random_fq(rng, ctx);
        if (!a.is_zero()) return a;
    }
}

ZqElem random_zq(Rng& rng, const CtxPtr& ctx) {
    std::vector<BigInt> c(ctx->d);
    for (auto& x : c) x = rng.below_big(ctx->pk);
    return ZqElem(ctx, std::move(c));
}

ZqElem random_zq_unit(Rng& rng, const CtxPtr& ctx) {
    for (;;) {
        ZqElem a = random_zq(rng, ctx);
        if (a.is_unit()) return a;
    }
}

MatQq random_gl_integral(Rng& rng, const CtxPtr& ctx, long n, long steps) {
    MatQq g = MatQq::identity(ctx, n);
    for (long t = 0; t < steps; ++t) {
        long i = rng.below_long(n);
        long j = rng.below_long(n);
        if (n > 1)
            while (j == i) j = rng.below_long(n);
        if (n == 1) break;
        std::vector<ZqElem> e(n * n, ZqElem::zero(ctx));
        for (long l = 0; l < n; ++l) e[l * n + l] = ZqElem::one(ctx);
        e[i * n + j] = random_zq(rng, ctx);
        g = g * MatQq::integral(ctx, n, std::move(e));
    }
    // permutation part
    Perm sigma = random_perm(rng, n);
    std::vector<ZqElem> pm(n * n, ZqElem::zero(ctx));
    for (long j = 0; j < n; ++j) pm[sigma(static_cast<uint32_t>(j)) * n + j] = ZqElem::one(ctx);
    g = g * MatQq::integral(ctx, n, std::move(pm));
    // Teichmuller diagonal
    std::vector<ZqElem> diag(n * n, ZqElem::zero(ctx));
    for (long i = 0; i < n; ++i) diag[i * n + i] = teichmuller(random_fq_nonzero(rng, ctx));
    return g * MatQq::integral(ctx, n, std::move(diag));
}

Lattice random_lattice(Rng& rng, const CtxPtr& ctx, long n, long max_exp) {
    std::vector<long> exps(n);
    for (auto& e : exps) e = rng.below_long(max_exp + 1);
    std::vector<std::vector<QqElem>> cols(n);
    for (long j = 0; j < n; ++j) {
        std::vector<QqElem> col;
        col.reserve(n);
        for (long i = 0; i < n; ++i) {
            if (i == j) {
                col.push_back(QqElem::p_power(ctx, exps[i]));
            } else if (i < j && exps[i] > 0) {
                BigInt r = rng.below_big(big_pow(ctx->pz, exps[i]));
                ZqElem v = ZqElem::from_int(ctx, r);
                col.push_back(v.is_zero() ? QqElem::zero(ctx) : QqElem::from_zq(v));
            } else {
                col.push_back(QqElem::zero(ctx));
            }
        }
        cols[j] = std::move(col);
    }
    return hnf(ctx, n, cols);
}

MatQq random_bounded(Rng& rng, const CtxPtr& ctx, long n, long max_exp) {
    Lattice l = random_lattice(rng, ctx, n, max_exp);
    MatQq u = random_gl_integral(rng, ctx, n);
    ScaledInverse inv = lattice_basis_inverse(l);
    return (l.basis() * u * inv.v).scale_by_p_pow(-inv.nu);
}

Perm random_perm(Rng& rng, long n) {
    std::vector<uint32_t> img(n);
    std::iota(img.begin(), img.end(), 0);
    for (long i = n - 1; i > 0; --i) {
        long j = rng.below_long(i + 1);
        std::swap(img[i], img[j]);
    }
    return Perm(std::move(img));
}

} // namespace tjd
