#include "tjd/decomposition.hpp"

#include <numeric>

namespace tjd {

TJDResult decompose_integral(const MatQq& g, long m_multiplier) {
    const CtxPtr& ctx = g.ctx();
    if (!g.is_integral()) throw NotIntegral("decompose_integral requires entries in O");
    if (m_multiplier < 1 || m_multiplier % ctx->p == 0)
        throw ValidationError("m_multiplier must be positive and coprime to p");
    std::vector<ZqElem> cp = charpoly_integral_body(g);
    if (cp[0].is_zero()) throw Singular("det = 0 at the working precision");
    if (cp[0].valuation() != 0) throw NonUnitDet("det is not a unit of O");

    BigInt m = semisimple_exponent_bound(ctx, g.n()) * m_multiplier;
    long a = ceil_log(ctx->p, g.n()) + (ctx->p == 2 ? 1 : 0);
    BigInt pak = big_pow(ctx->pz, a + ctx->k);
    BigInt c = crt_pair(1, m, 0, pak);

    MatQq gamma_ts = g.pow(c);
    MatQq gamma_tu = gamma_ts.inv_unimodular() * g;
    return TJDResult{std::move(gamma_ts), std::move(gamma_tu),
                     std::move(m),        a,
                     std::move(c),        std::nullopt,
                     ctx->k};
}

TJDResult decompose(const MatQq& g, long m_multiplier) {
    if (!is_bounded(g)) throw NotBounded("element is not bounded");
    if (g.is_integral()) return decompose_integral(g, m_multiplier);

    IntegralConjugate conj = conjugate_into_integral(g);
    TJDResult inner = decompose_integral(conj.h, m_multiplier);
    ScaledInverse inv = lattice_basis_inverse(conj.lattice);
    const MatQq& w = conj.lattice.basis();
    MatQq gamma_ts = (w * inner.gamma_ts * inv.v).scale_by_p_pow(-inv.nu);
    MatQq gamma_tu = (w * inner.gamma_tu * inv.v).scale_by_p_pow(-inv.nu);
    return TJDResult{std::move(gamma_ts),  std::move(gamma_tu),
                     std::move(inner.m),   inner.a,
                     std::move(inner.c),   std::move(conj.lattice),
                     conj.effective_precision};
}

bool is_abs_semisimple(const MatQq& g) {
    TJDResult r = decompose(g);
    MatQq id = MatQq::identity(g.ctx(), g.n());
    return r.gamma_tu.congruent_mod(id, r.effective_precision);
}

bool is_top_unipotent(const MatQq& g) {
    if (!is_bounded(g)) throw NotBounded("element is not bounded");
    MatQq h = g.is_integral() ? g : conjugate_into_integral(g).h;
    return is_unipotent_fq(h.reduce());
}

bool check_projection(const MatQq& g, const TJDResult& r) {
    if (!g.is_integral()) throw NotIntegral("projection check requires entries in O");
    FinJordanPair fin = fin_jordan(g.reduce());
    if (!r.gamma_ts.is_integral() || !r.gamma_tu.is_integral()) return false;
    return r.gamma_ts.reduce() == fin.s && r.gamma_tu.reduce() == fin.u;
}

FiltrationClass torus_filtration(const MatQq& g) {
    if (!g.is_diagonal()) throw NotDiagonal("torus filtration requires a diagonal element");
    const CtxPtr& ctx = g.ctx();
    std::vector<QqElem> diag;
    for (long i = 0; i < g.n(); ++i) {
        QqElem e = g.entry(i, i);
        if (e.is_zero()) throw Singular("zero diagonal entry");
        diag.push_back(std::move(e));
    }
    for (const auto& e : diag)
        if (e.v() != 0) return FiltrationClass::UNBOUNDED;
    FqElem one = FqElem::one(ctx);
    for (const auto& e : diag)
        if (!(e.unit().reduce() == one)) return FiltrationClass::PARAHORIC_0;
    return FiltrationClass::PARAHORIC_0PLUS;
}

ModCenterOutcome decompose_mod_center(const MatQq& g) {
    const CtxPtr& ctx = g.ctx();
    long n = g.n(), s = g.scale();
    std::vector<ZqElem> cp = charpoly_integral_body(g);
    if (cp[0].is_zero()) throw Singular("det = 0 at the working precision");
    long total = cp[0].valuation() - s * n; // ord(det g)
    // single Newton segment from (0,0) to (n, total):
    // every (i, ord(a_i)) must lie on or above the segment
    for (long i = 1; i < n; ++i) {
        const ZqElem& ci = cp[n - i];
        if (ci.is_zero()) {
            long bound = ctx->k - s * i;
            if (bound * n < i * total)
                throw PrecisionInsufficient("Newton polygon not certifiable at precision k");
        } else {
            long vi = ci.valuation() - s * i;
            if (vi * n < i * total)
                throw NotBoundedModCenter("Newton polygon has more than one slope");
        }
    }
    long gcd_nt = std::gcd(n, total < 0 ? -total : total);
    if (total % n != 0) {
        long e = n / gcd_nt;
        return NeedsRamified{e, e % ctx->p != 0};
    }
    long r = total / n;
    MatQq scaled = g.scale_by_p_pow(-r);
    TJDResult res = decompose(scaled);
    // forming p^{-r} g cannot recover digits above p^{k - r} of the unit part
    res.effective_precision = std::min(res.effective_precision, ctx->k - std::max(r, 0L));
    return ModCenterDecomposition{QqElem::p_power(ctx, r), std::move(res)};
}

bool check_fixed_lattice(const MatQq& g, const TJDResult& r, const Lattice& l) {
    bool whole = lattice_stabilizes(g, l);
    bool parts = lattice_stabilizes(r.gamma_ts, l) && lattice_stabilizes(r.gamma_tu, l);
    return whole == parts;
}

} // namespace tjd
