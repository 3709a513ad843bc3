#include "tjd/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "tjd/decomposition.hpp"
#include "tjd/randomgen.hpp"

namespace tjd {

bool SuiteReport::all_pass() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.failures == 0; });
}

namespace {

struct Harness {
    SuiteReport rep;
    Rng rng;
    Harness(std::string name, uint64_t seed, long trials) : rng(seed) {
        rep.suite = std::move(name);
        rep.seed = seed;
        rep.trials = trials;
    }
    void tally(const std::string& name, bool ok) {
        for (auto& c : rep.checks)
            if (c.name == name) {
                ++c.trials;
                if (!ok) ++c.failures;
                return;
            }
        rep.checks.push_back(CheckResult{name, 1, ok ? 0 : 1});
    }
};

// enumerate all coefficient vectors in [0, p^k)^d
void for_all_zq(const CtxPtr& ctx, const std::function<void(const ZqElem&)>& f) {
    std::vector<BigInt> c(ctx->d, BigInt(0));
    for (;;) {
        f(ZqElem(ctx, c));
        long i = 0;
        while (i < ctx->d) {
            c[i] += 1;
            if (c[i] < ctx->pk) break;
            c[i] = 0;
            ++i;
        }
        if (i == ctx->d) return;
    }
}

void for_all_fq(const CtxPtr& ctx, const std::function<void(const FqElem&)>& f) {
    std::vector<long> c(ctx->d, 0);
    for (;;) {
        f(FqElem(ctx, c));
        long i = 0;
        while (i < ctx->d) {
            if (++c[i] < ctx->p) break;
            c[i] = 0;
            ++i;
        }
        if (i == ctx->d) return;
    }
}

MatFq random_glnf(Rng& rng, const CtxPtr& ctx, long n) {
    for (;;) {
        std::vector<FqElem> e;
        e.reserve(n * n);
        for (long i = 0; i < n * n; ++i) e.push_back(random_fq(rng, ctx));
        MatFq g(ctx, n, std::move(e));
        if (!det_fq(g).is_zero()) return g;
    }
}

// ---------------------------------------------------------------------------

SuiteReport suite_padic_ring(uint64_t seed, long trials) {
    Harness h("padic-ring", seed, trials);
    std::vector<CtxPtr> ctxs = {PadicCtx::make(5, 1, 3), PadicCtx::make(2, 2, 4),
                                PadicCtx::make(7, 2, 2), PadicCtx::make(3, 2, 3)};
    for (long t = 0; t < trials; ++t) {
        const CtxPtr& ctx = ctxs[t % ctxs.size()];
        ZqElem a = random_zq(h.rng, ctx), b = random_zq(h.rng, ctx), c = random_zq(h.rng, ctx);
        h.tally("add-assoc", (a + b) + c == a + (b + c));
        h.tally("mul-assoc", (a * b) * c == a * (b * c));
        h.tally("mul-comm", a * b == b * a);
        h.tally("distributive", a * (b + c) == a * b + a * c);
        ZqElem u = random_zq_unit(h.rng, ctx);
        h.tally("inv-involution", u.inv().inv() == u);
        h.tally("inv-correct", u * u.inv() == ZqElem::one(ctx));
    }
    return h.rep;
}

SuiteReport suite_teichmuller(uint64_t seed, long trials) {
    Harness h("teichmuller", seed, trials);
    for (const CtxPtr& ctx :
         {PadicCtx::make(5, 1, 2), PadicCtx::make(3, 2, 2), PadicCtx::make(7, 2, 3)}) {
        std::vector<FqElem> all;
        for_all_fq(ctx, [&](const FqElem& a) { all.push_back(a); });
        std::vector<ZqElem> lift;
        lift.reserve(all.size());
        for (const auto& a : all) lift.push_back(teichmuller(a));
        for (size_t i = 0; i < all.size(); ++i) {
            h.tally("frobenius", lift[i].pow(ctx->p) == teichmuller(all[i].frobenius()));
            for (size_t j = 0; j < all.size(); ++j)
                h.tally("multiplicative",
                        teichmuller(all[i] * all[j]) == lift[i] * lift[j]);
        }
        h.tally("fixes-zero", teichmuller(FqElem::zero(ctx)) == ZqElem::zero(ctx));
        h.tally("fixes-one", teichmuller(FqElem::one(ctx)) == ZqElem::one(ctx));
    }
    // image characterisation: u = teich(reduce(u)) iff u^{q-1} = 1
    for (const CtxPtr& ctx :
         {PadicCtx::make(5, 1, 2), PadicCtx::make(2, 2, 3), PadicCtx::make(3, 1, 4)}) {
        for_all_zq(ctx, [&](const ZqElem& u) {
            if (!u.is_unit()) return;
            bool in_image = u == teichmuller(u.reduce());
            bool root = u.pow(ctx->q - 1) == ZqElem::one(ctx);
            h.tally("image-characterisation", in_image == root);
        });
    }
    return h.rep;
}

SuiteReport suite_fin_jordan(uint64_t seed, long trials) {
    Harness h("fin-jordan", seed, trials);
    std::vector<CtxPtr> ctxs = {PadicCtx::make(2, 1, 1), PadicCtx::make(3, 1, 1),
                                PadicCtx::make(5, 1, 1), PadicCtx::make(7, 1, 1),
                                PadicCtx::make(2, 2, 1), PadicCtx::make(3, 2, 1)};
    for (long t = 0; t < trials; ++t) {
        const CtxPtr& ctx = ctxs[t % ctxs.size()];
        long n = 1 + h.rng.below_long(4);
        MatFq g = random_glnf(h.rng, ctx, n);
        FinJordanPair fj = fin_jordan(g);
        h.tally("product", fj.s * fj.u == g);
        h.tally("commute", fj.s * fj.u == fj.u * fj.s);
        h.tally("s-semisimple", is_semisimple_fq(fj.s));
        h.tally("u-unipotent", is_unipotent_fq(fj.u));

        BigInt ord = mult_order(g);
        h.tally("order-divides-bound",
                mpz_divisible_p(BigInt(big_pow(ctx->pz, ceil_log(ctx->p, n)) *
                                       semisimple_exponent_bound(ctx, n))
                                    .get_mpz_t(),
                                ord.get_mpz_t()) != 0);
        if (ord <= 200000) {
            // brute force over <g>: the decomposition is the only commuting
            // pair of a coprime-to-p and a p-power-order element
            long count = 0;
            bool found = false;
            BigInt pz = ctx->pz;
            for (BigInt i = 0; i < ord; ++i) {
                BigInt gi, gu;
                mpz_gcd(gi.get_mpz_t(), i.get_mpz_t(), ord.get_mpz_t());
                BigInt os = ord / gi; // order of g^i
                if (mpz_divisible_p(os.get_mpz_t(), pz.get_mpz_t())) continue;
                BigInt one_minus = ((1 - i) % ord + ord) % ord;
                mpz_gcd(gu.get_mpz_t(), one_minus.get_mpz_t(), ord.get_mpz_t());
                BigInt ou = ord / gu;
                long v = remove_p(ou, pz);
                (void)v;
                if (ou != 1) continue;
                ++count;
                if (i == fj.c_s % ord) found = true;
            }
            h.tally("unique-in-cyclic", count == 1 && found);
        }

        BigInt m(1 + h.rng.below_long(12));
        FinJordanPair fm = fin_jordan(g.pow(m));
        h.tally("power-compat", fm.s == fj.s.pow(m) && fm.u == fj.u.pow(m));

        MatFq hh = random_glnf(h.rng, ctx, n);
        MatFq conj = hh * g * hh.inv();
        FinJordanPair fc = fin_jordan(conj);
        h.tally("conj-equivariant",
                fc.s == hh * fj.s * hh.inv() && fc.u == hh * fj.u * hh.inv());
    }
    return h.rep;
}

SuiteReport suite_profinite(uint64_t seed, long trials) {
    Harness h("profinite", seed, trials);
    const long primes[] = {2, 3, 5};
    for (long t = 0; t < trials; ++t) {
        long n = 1 + h.rng.below_long(7);
        long p = primes[h.rng.below_long(3)];
        Perm g = random_perm(h.rng, n);
        PJordanPair pj = p_jordan_perm(g, p);
        h.tally("product", pj.s * pj.u == g);
        h.tally("commute", pj.s * pj.u == pj.u * pj.s);
        BigInt os = perm_order(pj.s);
        h.tally("s-coprime-order", !mpz_divisible_ui_p(os.get_mpz_t(), p));
        BigInt ou = perm_order(pj.u);
        remove_p(ou, BigInt(p));
        h.tally("u-p-power-order", ou == 1);

        PJordanPair ext = p_jordan_perm(g.extend(n + 1), p);
        h.tally("functorial", ext.s == pj.s.extend(n + 1) && ext.u == pj.u.extend(n + 1));

        Perm c = random_perm(h.rng, n);
        PJordanPair pc = p_jordan_perm(c * g * c.inverse(), p);
        h.tally("conj-equivariant", pc.s == c * pj.s * c.inverse() &&
                                        pc.u == c * pj.u * c.inverse());
        if (n <= 5) h.tally("unique-exhaustive", verify_unique_p_jordan(g, p));
    }
    // six-cycle: the p = 2 and p = 3 decompositions swap g^3 and g^4
    Perm six = Perm::cycle(6, {0, 1, 2, 3, 4, 5});
    PJordanPair two = p_jordan_perm(six, 2);
    PJordanPair three = p_jordan_perm(six, 3);
    h.tally("six-cycle-swap", two.s == six.pow(4) && two.u == six.pow(3) &&
                                  three.s == six.pow(3) && three.u == six.pow(4));
    return h.rep;
}

SuiteReport suite_hnf(uint64_t seed, long trials) {
    Harness h("hnf", seed, trials);
    std::vector<CtxPtr> ctxs = {PadicCtx::make(5, 1, 12), PadicCtx::make(2, 1, 12),
                                PadicCtx::make(3, 2, 10)};
    for (long t = 0; t < trials; ++t) {
        const CtxPtr& ctx = ctxs[t % ctxs.size()];
        long n = 2 + h.rng.below_long(2);
        long emax = n == 3 ? 1 : 2;
        Lattice l = random_lattice(h.rng, ctx, n, emax);
        std::vector<std::vector<QqElem>> cols(n);
        for (long j = 0; j < n; ++j)
            for (long i = 0; i < n; ++i) cols[j].push_back(l.basis().entry(i, j));
        h.tally("idempotent", hnf(ctx, n, cols) == l);

        MatQq g = random_bounded(h.rng, ctx, n, emax);
        h.tally("bounded", is_bounded(g));
        Lattice sl = stable_lattice(g);
        h.tally("stable-lattice-stable", lattice_stabilizes(g, sl));

        MatQq u = random_gl_integral(h.rng, ctx, n);
        h.tally("bounded-conj-invariant", is_bounded(u * g * u.inv_unimodular()));

        // boundedness criterion vs the direct stable-lattice oracle
        MatQq cand = g;
        if (h.rng.below(2) == 0) {
            std::vector<ZqElem> d(n * n, ZqElem::zero(ctx));
            for (long i = 0; i < n; ++i)
                d[i * n + i] = i == 0 ? ZqElem::from_int(ctx, ctx->pz) : ZqElem::one(ctx);
            cand = cand * MatQq::integral(ctx, n, std::move(d)); // det valuation 1
        }
        bool bounded;
        try {
            bounded = is_bounded(cand);
        } catch (const Singular&) {
            continue;
        } catch (const PrecisionInsufficient&) {
            continue;
        }
        std::vector<std::vector<QqElem>> pw;
        MatQq power = MatQq::identity(ctx, n);
        for (long e = 0; e < n; ++e) {
            for (long j = 0; j < n; ++j) {
                std::vector<QqElem> col;
                for (long i = 0; i < n; ++i) col.push_back(power.entry(i, j));
                pw.push_back(std::move(col));
            }
            if (e + 1 < n) power = power * cand;
        }
        Lattice l0 = hnf(ctx, n, pw);
        bool oracle = det_valuation(cand) == 0 && lattice_stabilizes(cand, l0);
        h.tally("criterion-vs-oracle", bounded == oracle);
    }
    return h.rep;
}

struct TjdCtxPick {
    CtxPtr ctx;
    long n;
};

TjdCtxPick pick_tjd_ctx(Rng& rng, long t) {
    static const long ps[] = {2, 3, 5, 7};
    long p = ps[t % 4];
    long d = 1 + rng.below_long(2);
    long k = 2 + rng.below_long(7);
    long n = 1 + rng.below_long(4);
    return TjdCtxPick{PadicCtx::make(p, d, k), n};
}

SuiteReport suite_tjd_roundtrip(uint64_t seed, long trials) {
    Harness h("tjd-roundtrip", seed, trials);
    for (long t = 0; t < trials; ++t) {
        auto [ctx, n] = pick_tjd_ctx(h.rng, t);
        MatQq g = random_gl_integral(h.rng, ctx, n);
        TJDResult r = decompose(g);
        long k = ctx->k;
        h.tally("round-trip", (r.gamma_ts * r.gamma_tu).congruent_mod(g, k));
        h.tally("parts-commute",
                (r.gamma_ts * r.gamma_tu).congruent_mod(r.gamma_tu * r.gamma_ts, k));
        TJDResult r2 = decompose(g, ctx->p == 3 ? 5 : 3);
        h.tally("over-multiple", r2.gamma_ts == r.gamma_ts && r2.gamma_tu == r.gamma_tu);
        TJDResult rs = decompose(r.gamma_ts);
        TJDResult ru = decompose(r.gamma_tu);
        MatQq id = MatQq::identity(ctx, n);
        h.tally("idempotent", rs.gamma_ts == r.gamma_ts && rs.gamma_tu == id &&
                                  ru.gamma_ts == id && ru.gamma_tu == r.gamma_tu);
        BigInt m(1 + h.rng.below_long(10));
        TJDResult rp = decompose(g.pow(m));
        h.tally("power-compat", rp.gamma_ts == r.gamma_ts.pow(m) &&
                                    rp.gamma_tu == r.gamma_tu.pow(m));
        h.tally("ts-order", r.gamma_ts.pow(r.m) == MatQq::identity(ctx, n));
        if (n == 1) {
            h.tally("teichmuller-consistency",
                    r.gamma_ts.body(0, 0) == teichmuller(g.body(0, 0).reduce()));
        }
        if (ctx->d == 2) {
            // entries in Z_p stay in Z_p
            std::vector<ZqElem> e;
            for (long i = 0; i < n * n; ++i)
                e.push_back(ZqElem::from_int(ctx, h.rng.below_big(ctx->pk)));
            MatQq gp = MatQq::integral(ctx, n, std::move(e));
            std::vector<ZqElem> cp = charpoly_integral_body(gp);
            if (!cp[0].is_zero() && cp[0].valuation() == 0) {
                TJDResult rr = decompose(gp);
                bool rational = true;
                for (long i = 0; i < n && rational; ++i)
                    for (long j = 0; j < n && rational; ++j) {
                        const auto& cs = rr.gamma_ts.body(i, j).coeffs();
                        const auto& cu = rr.gamma_tu.body(i, j).coeffs();
                        for (long c = 1; c < ctx->d; ++c)
                            if (cs[c] != 0 || cu[c] != 0) rational = false;
                    }
                h.tally("galois-rational", rational);
            }
        }
    }
    return h.rep;
}

SuiteReport suite_projection(uint64_t seed, long trials) {
    Harness h("projection", seed, trials);
    for (long t = 0; t < trials; ++t) {
        auto [ctx, n] = pick_tjd_ctx(h.rng, t);
        MatQq g = random_gl_integral(h.rng, ctx, n);
        TJDResult r = decompose(g);
        h.tally("projects-to-finite-jordan", check_projection(g, r));
    }
    return h.rep;
}

SuiteReport suite_equivariance(uint64_t seed, long trials) {
    Harness h("equivariance", seed, trials);
    for (long t = 0; t < trials; ++t) {
        auto [ctx, n] = pick_tjd_ctx(h.rng, t);
        MatQq g = random_gl_integral(h.rng, ctx, n);
        TJDResult r = decompose(g);
        MatQq c = random_gl_integral(h.rng, ctx, n);
        MatQq ci = c.inv_unimodular();
        TJDResult rc = decompose(c * g * ci);
        h.tally("conj-equivariant", rc.gamma_ts == c * r.gamma_ts * ci &&
                                        rc.gamma_tu == c * r.gamma_tu * ci);
        // block embedding GL_n -> GL_{n+1}
        auto embed = [&](const MatQq& m) {
            std::vector<ZqElem> e((n + 1) * (n + 1), ZqElem::zero(ctx));
            for (long i = 0; i < n; ++i)
                for (long j = 0; j < n; ++j) e[i * (n + 1) + j] = m.body(i, j);
            e[n * (n + 1) + n] = ZqElem::one(ctx);
            return MatQq::integral(ctx, n + 1, std::move(e));
        };
        TJDResult re = decompose(embed(g));
        h.tally("block-embedding", re.gamma_ts == embed(r.gamma_ts) &&
                                       re.gamma_tu == embed(r.gamma_tu));
    }
    return h.rep;
}

SuiteReport suite_lattice_fixed(uint64_t seed, long trials) {
    Harness h("lattice-fixed", seed, trials);
    std::vector<CtxPtr> ctxs = {PadicCtx::make(5, 1, 12), PadicCtx::make(2, 1, 12),
                                PadicCtx::make(3, 1, 12), PadicCtx::make(7, 1, 12)};
    for (long t = 0; t < trials; ++t) {
        const CtxPtr& ctx = ctxs[t % ctxs.size()];
        long n = 2 + h.rng.below_long(2);
        long emax = n == 3 ? 1 : 2;
        MatQq g = random_bounded(h.rng, ctx, n, emax);
        TJDResult r = decompose(g);
        h.tally("fixed-at-stable", check_fixed_lattice(g, r, stable_lattice(g)));
        for (long i = 0; i < 5; ++i) {
            Lattice l = random_lattice(h.rng, ctx, n, emax);
            h.tally("fixed-biconditional", check_fixed_lattice(g, r, l));
        }
    }
    return h.rep;
}

SuiteReport suite_mod_center(uint64_t seed, long trials) {
    Harness h("mod-center", seed, trials);
    std::vector<CtxPtr> ctxs = {PadicCtx::make(5, 1, 8), PadicCtx::make(3, 1, 8),
                                PadicCtx::make(2, 1, 8)};
    for (long t = 0; t < trials; ++t) {
        const CtxPtr& ctx = ctxs[t % ctxs.size()];
        long n = 1 + h.rng.below_long(3);
        MatQq u = random_gl_integral(h.rng, ctx, n);
        long rexp = static_cast<long>(h.rng.below(5)) - 2;
        MatQq g = u.scale_by_p_pow(rexp);
        ModCenterOutcome out = decompose_mod_center(g);
        bool ok = false;
        if (auto* dec = std::get_if<ModCenterDecomposition>(&out)) {
            ok = !dec->z.is_zero() && dec->z.v() == rexp &&
                 dec->z.unit() == ZqElem::one(ctx) &&
                 (dec->result.gamma_ts * dec->result.gamma_tu)
                     .congruent_mod(u, dec->result.effective_precision);
        }
        h.tally("central-scaling", ok);

        // slope 1/2: ramified index 2
        std::vector<ZqElem> e(4, ZqElem::zero(ctx));
        e[1] = random_zq_unit(h.rng, ctx).times_p_pow(1);
        e[2] = random_zq_unit(h.rng, ctx);
        MatQq ram = MatQq::integral(ctx, 2, std::move(e));
        ModCenterOutcome out2 = decompose_mod_center(ram);
        auto* nr = std::get_if<NeedsRamified>(&out2);
        h.tally("needs-ramified-2", nr != nullptr && nr->e == 2 &&
                                        nr->tame == (ctx->p != 2));
    }
    return h.rep;
}

SuiteReport suite_limit(uint64_t seed, long trials) {
    Harness h("limit", seed, trials);
    for (long t = 0; t < trials; ++t) {
        auto [ctx, n] = pick_tjd_ctx(h.rng, t);
        MatQq g = random_gl_integral(h.rng, ctx, n);
        TJDResult r = decompose(g);
        MatQq id = MatQq::identity(ctx, n);
        BigInt e = big_pow(ctx->pz, r.a + ctx->k);
        h.tally("tu-limit", r.gamma_tu.pow(e).congruent_mod(id, ctx->k));
        if (ctx->p != 2) {
            BigInt e1 = big_pow(ctx->pz, r.a + ctx->k - 1);
            h.tally("tu-limit-sharp", r.gamma_tu.pow(e1).congruent_mod(id, ctx->k));
        }
    }
    return h.rep;
}

using SuiteFn = SuiteReport (*)(uint64_t, long);

const std::map<std::string, SuiteFn>& suite_table() {
    static const std::map<std::string, SuiteFn> t = {
        {"padic-ring", suite_padic_ring},   {"teichmuller", suite_teichmuller},
        {"fin-jordan", suite_fin_jordan},   {"profinite", suite_profinite},
        {"hnf", suite_hnf},                 {"tjd-roundtrip", suite_tjd_roundtrip},
        {"projection", suite_projection},   {"equivariance", suite_equivariance},
        {"lattice-fixed", suite_lattice_fixed}, {"mod-center", suite_mod_center},
        {"limit", suite_limit},
    };
    return t;
}

} // namespace

SuiteReport run_suite(const std::string& name, uint64_t seed, long trials) {
    auto it = suite_table().find(name);
    if (it == suite_table().end()) throw UnknownSuite("unknown suite: " + name);
    return it->second(seed, trials);
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& [k, fn] : suite_table()) v.push_back(k);
        return v;
    }();
    return names;
}

} // namespace tjd
