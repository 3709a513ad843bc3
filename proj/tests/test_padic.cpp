#include "doctest.h"

#include "tjd/padic.hpp"

using namespace tjd;

namespace {

ZqElem zq(const CtxPtr& ctx, long v) { return ZqElem::from_int(ctx, v); }

} // namespace

TEST_CASE("context validation") {
    CHECK_NOTHROW(PadicCtx::make(5, 1, 2));
    CHECK_NOTHROW(PadicCtx::make(2, 4, 3));
    CHECK_NOTHROW(PadicCtx::make(13, 4, 1));
    CHECK_THROWS_AS(PadicCtx::make(6, 1, 2), ValidationError);   // not prime
    CHECK_THROWS_AS(PadicCtx::make(5, 1, 0), ValidationError);   // k < 1
    CHECK_THROWS_AS(PadicCtx::make(5, 0, 2), ValidationError);   // d < 1
    CHECK_THROWS_AS(PadicCtx::make(65537, 1, 1), ValidationError);
    // x^2 + 1 is reducible over F_5 (roots 2, 3)
    CHECK_THROWS_AS(PadicCtx::make(5, 2, 2, {1, 0, 1}), ValidationError);
    CHECK_NOTHROW(PadicCtx::make(5, 2, 2, {2, 4, 1}));
    // non-monic
    CHECK_THROWS_AS(PadicCtx::make(5, 2, 2, {1, 0, 2}), ValidationError);
    // default modulus only for d = 1 outside the Conway table
    CHECK_NOTHROW(PadicCtx::make(17, 1, 2));
    CHECK_THROWS_AS(PadicCtx::make(17, 2, 2), ValidationError);
}

TEST_CASE("conway table is irreducible everywhere") {
    for (long p : {2L, 3L, 5L, 7L, 11L, 13L})
        for (long d : {1L, 2L, 3L, 4L}) {
            auto mod = PadicCtx::default_modulus(p, d);
            CHECK(modulus_irreducible(p, mod));
        }
}

TEST_CASE("zq arithmetic examples") {
    auto ctx = PadicCtx::make(5, 1, 2);
    CHECK(zq(ctx, 7) + zq(ctx, 18) == zq(ctx, 0));  // 25 = 0 mod 25
    CHECK(zq(ctx, 7) * zq(ctx, 18) == zq(ctx, 1));  // 126 = 1 mod 25
    CHECK(zq(ctx, 7) - zq(ctx, 18) == zq(ctx, -11));

    // (p=2, d=2, k=3, modulus x^2+x+1): x * x = -x - 1 = 7 + 7x mod 8
    auto c2 = PadicCtx::make(2, 2, 3, {1, 1, 1});
    ZqElem x(c2, {BigInt(0), BigInt(1)});
    ZqElem xx = x * x;
    CHECK(xx == ZqElem(c2, {BigInt(7), BigInt(7)}));
    CHECK(xx.reduce() == FqElem(c2, {1, 1}));
}

TEST_CASE("zq ctx mismatch") {
    auto a = PadicCtx::make(5, 1, 2);
    auto b = PadicCtx::make(5, 1, 3);
    CHECK_THROWS_AS(zq(a, 1) + zq(b, 1), CtxMismatch);
}

TEST_CASE("zq_inv") {
    auto ctx = PadicCtx::make(5, 1, 2);
    CHECK(zq(ctx, 7).inv() == zq(ctx, 18)); // 7*18 = 126 = 1 mod 25
    CHECK(zq(ctx, 1).inv() == zq(ctx, 1));
    CHECK_THROWS_AS(zq(ctx, 5).inv(), NonUnit);
    CHECK_THROWS_AS(zq(ctx, 0).inv(), NonUnit);

    auto big = PadicCtx::make(7, 3, 9);
    ZqElem u(big, {BigInt(3), BigInt(11), BigInt(40353600)});
    CHECK(u * u.inv() == ZqElem::one(big));
}

TEST_CASE("reduce") {
    auto ctx = PadicCtx::make(5, 1, 2);
    CHECK(zq(ctx, 7).reduce() == FqElem::from_int(ctx, 2));
    CHECK(zq(ctx, 0).reduce() == FqElem::zero(ctx));
    auto c32 = PadicCtx::make(3, 2, 2);
    CHECK(ZqElem(c32, {BigInt(4), BigInt(3)}).reduce() == FqElem::from_int(c32, 1));
}

TEST_CASE("fq field axioms and inverse") {
    auto ctx = PadicCtx::make(3, 4, 1);
    FqElem a(ctx, {1, 2, 0, 1});
    FqElem b(ctx, {2, 2, 1, 0});
    CHECK(a * b == b * a);
    CHECK(a * a.inv() == FqElem::one(ctx));
    CHECK((a * b) * a.inv() == b * (a * a.inv()));
    CHECK(a.pow(ctx->q - 1) == FqElem::one(ctx)); // Lagrange in F_81
    CHECK(a.frobenius_inv().frobenius() == a);
    CHECK_THROWS_AS(FqElem::zero(ctx).inv(), NonUnit);
}

TEST_CASE("teichmuller golden values") {
    auto c5 = PadicCtx::make(5, 1, 2);
    CHECK(teichmuller(FqElem::from_int(c5, 2)) == zq(c5, 7)); // 2^5 = 32 = 7 mod 25

    auto c3 = PadicCtx::make(3, 1, 2);
    CHECK(teichmuller(FqElem::from_int(c3, 2)) == zq(c3, 8)); // 8^2 = 64 = 1 mod 9

    CHECK(teichmuller(FqElem::one(c5)) == ZqElem::one(c5));
    CHECK(teichmuller(FqElem::zero(c5)) == ZqElem::zero(c5));
}

TEST_CASE("teichmuller root property") {
    for (auto ctx : {PadicCtx::make(5, 1, 4), PadicCtx::make(2, 3, 6), PadicCtx::make(3, 2, 5)}) {
        for (long v = 0; v < ctx->p; ++v) {
            FqElem a = FqElem::from_int(ctx, v);
            ZqElem t = teichmuller(a);
            CHECK(t.reduce() == a);
            if (v != 0) CHECK(t.pow(ctx->q - 1) == ZqElem::one(ctx));
        }
        if (ctx->d > 1) {
            FqElem g = FqElem::gen(ctx);
            ZqElem t = teichmuller(g);
            CHECK(t.reduce() == g);
            CHECK(t.pow(ctx->q - 1) == ZqElem::one(ctx));
        }
    }
}

TEST_CASE("qq_normalize") {
    auto ctx = PadicCtx::make(5, 1, 3);
    QqElem a = qq_normalize(0, zq(ctx, 10));
    CHECK(a.v() == 1);
    CHECK(a.unit() == zq(ctx, 2));

    QqElem b = qq_normalize(1, zq(ctx, 1));
    CHECK(b.v() == -1);
    CHECK(b.unit() == zq(ctx, 1));

    CHECK(qq_normalize(0, zq(ctx, 0)).is_zero());

    QqElem c = a * b; // 10/5 = 2
    CHECK(c.v() == 0);
    CHECK(c.unit() == zq(ctx, 2));
    CHECK(a.inv() * a == QqElem::p_power(ctx, 0));
}

TEST_CASE("zq valuation and shifts") {
    auto ctx = PadicCtx::make(5, 1, 4);
    CHECK(zq(ctx, 50).valuation() == 2);
    CHECK(zq(ctx, 3).valuation() == 0);
    CHECK(zq(ctx, 0).valuation() == 4);
    CHECK(zq(ctx, 50).div_exact_p_pow(2) == zq(ctx, 2));
    CHECK_THROWS_AS(zq(ctx, 50).div_exact_p_pow(3), PrecisionInsufficient);
    CHECK(zq(ctx, 2).times_p_pow(3) == zq(ctx, 250));
    CHECK(zq(ctx, 2).congruent_mod(zq(ctx, 127), 3));
    CHECK_FALSE(zq(ctx, 2).congruent_mod(zq(ctx, 127), 4));
}
