#include "tjd/cli.hpp"

#include "tjd/decomposition.hpp"
#include "tjd/randomgen.hpp"

namespace tjd::cli {

namespace {

RunResult error_result(const std::string& type, const std::string& message, int code) {
    return RunResult{Json{{"error", Json{{"type", type}, {"message", message}}}}, code};
}

template <class Fn>
RunResult guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const NotBounded& e) {
        return error_result("NotBounded", e.what(), 2);
    } catch (const PrecisionInsufficient& e) {
        return error_result("PrecisionInsufficient", e.what(), 3);
    } catch (const UnknownSuite& e) {
        return error_result("UnknownSuite", e.what(), 5);
    } catch (const TjdError& e) {
        return error_result("ValidationError", e.what(), 5);
    } catch (const Json::exception& e) {
        return error_result("ParseError", e.what(), 5);
    }
}

Json decompose_report(const CtxPtr& ctx, const MatQq& g, const TJDResult& r) {
    MatQq id = MatQq::identity(ctx, g.n());
    long eff = r.effective_precision;
    bool commute = (r.gamma_ts * r.gamma_tu).congruent_mod(g, eff) &&
                   (r.gamma_tu * r.gamma_ts).congruent_mod(g, eff);
    bool ts_order = r.gamma_ts.pow(r.m).congruent_mod(id, eff);
    bool projection, tu_unip;
    if (g.is_integral()) {
        projection = check_projection(g, r);
        tu_unip = is_unipotent_fq(r.gamma_tu.reduce());
    } else {
        IntegralConjugate conj = conjugate_into_integral(g);
        TJDResult inner = decompose_integral(conj.h);
        projection = check_projection(conj.h, inner);
        tu_unip = is_unipotent_fq(inner.gamma_tu.reduce());
    }
    Json cert{{"M", r.m.get_str()},
              {"a", r.a},
              {"c", r.c.get_str()},
              {"conjugator", r.conjugator ? matqq_to_json(r.conjugator->basis())
                                          : Json("identity")}};
    return Json{{"gamma_ts", matqq_to_json(r.gamma_ts)},
                {"gamma_tu", matqq_to_json(r.gamma_tu)},
                {"certificate", cert},
                {"effective_precision", eff},
                {"checks", Json{{"commute", commute},
                                {"projection", projection},
                                {"ts_order", ts_order},
                                {"tu_reduction_unipotent", tu_unip}}}};
}

} // namespace

RunResult run_decompose(const Json& ctx_json, const Json& matrix_json, bool mod_center) {
    return guarded([&]() -> RunResult {
        CtxPtr ctx = ctx_from_json(ctx_json);
        MatQq g = matqq_from_json(ctx, matrix_json);
        if (!mod_center) {
            TJDResult r = decompose(g);
            return RunResult{decompose_report(ctx, g, r), 0};
        }
        ModCenterOutcome out = decompose_mod_center(g);
        if (auto* nr = std::get_if<NeedsRamified>(&out)) {
            return RunResult{Json{{"needs_ramified", nr->e}, {"tame", nr->tame}}, 4};
        }
        auto& dec = std::get<ModCenterDecomposition>(out);
        MatQq reduced = g.scale_by_p_pow(-dec.z.v());
        Json rep = decompose_report(ctx, reduced, dec.result);
        rep["z"] = qq_to_json(dec.z);
        return RunResult{std::move(rep), 0};
    });
}

RunResult run_check(const Json& ctx_json, const Json& matrix_json) {
    return guarded([&]() -> RunResult {
        CtxPtr ctx = ctx_from_json(ctx_json);
        MatQq g = matqq_from_json(ctx, matrix_json);
        Json rep;
        bool bounded = is_bounded(g);
        rep["bounded"] = bounded;
        if (bounded) {
            rep["abs_semisimple"] = is_abs_semisimple(g);
            rep["top_unipotent"] = is_top_unipotent(g);
        } else {
            rep["abs_semisimple"] = nullptr;
            rep["top_unipotent"] = nullptr;
        }
        if (g.is_diagonal()) rep["filtration"] = filtration_name(torus_filtration(g));
        return RunResult{std::move(rep), 0};
    });
}

RunResult run_teichmuller(const Json& ctx_json, const Json& value_json) {
    return guarded([&]() -> RunResult {
        CtxPtr ctx = ctx_from_json(ctx_json);
        FqElem a = fq_from_json(ctx, value_json);
        return RunResult{Json{{"value", zq_to_json(teichmuller(a))}}, 0};
    });
}

RunResult run_profinite_decompose(const Json& perm_json, long p) {
    return guarded([&]() -> RunResult {
        Perm g = perm_from_json(perm_json);
        PJordanPair pj = p_jordan_perm(g, p);
        Json rep{{"s", perm_to_json(pj.s)},
                 {"u", perm_to_json(pj.u)},
                 {"s_power", "g^" + pj.c_s.get_str()},
                 {"u_power", "g^" + pj.c_u.get_str()},
                 {"orders", Json{{"g", perm_order(g).get_str()},
                                 {"s", perm_order(pj.s).get_str()},
                                 {"u", perm_order(pj.u).get_str()}}}};
        return RunResult{std::move(rep), 0};
    });
}

Json suite_report_to_json(const SuiteReport& rep) {
    Json checks = Json::array();
    for (const auto& c : rep.checks)
        checks.push_back(Json{{"name", c.name}, {"trials", c.trials}, {"failures", c.failures}});
    return Json{{"suite", rep.suite},
                {"seed", rep.seed},
                {"trials", rep.trials},
                {"checks", checks},
                {"all_pass", rep.all_pass()}};
}

RunResult run_verify(const std::string& suite, uint64_t seed, long trials) {
    return guarded([&]() -> RunResult {
        SuiteReport rep = run_suite(suite, seed, trials);
        return RunResult{suite_report_to_json(rep), rep.all_pass() ? 0 : 1};
    });
}

} // namespace tjd::cli
