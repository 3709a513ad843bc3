#include "tjd/json_io.hpp"

namespace tjd {

namespace {

BigInt big_from_json(const Json& j) {
    try {
        if (j.is_string()) return BigInt(j.get<std::string>());
        if (j.is_number_integer()) return BigInt(j.get<long>());
    } catch (const std::invalid_argument&) {
    }
    throw ValidationError("expected a decimal integer string");
}

long long_from_json(const Json& j, const char* what) {
    if (!j.is_number_integer())
        throw ValidationError(std::string("expected an integer for ") + what);
    return j.get<long>();
}

} // namespace

Json ctx_to_json(const PadicCtx& ctx) {
    return Json{{"p", ctx.p}, {"d", ctx.d}, {"k", ctx.k}, {"modulus", ctx.modulus}};
}

CtxPtr ctx_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("p") || !j.contains("d") || !j.contains("k"))
        throw ValidationError("context requires fields p, d, k");
    long p = long_from_json(j.at("p"), "p");
    long d = long_from_json(j.at("d"), "d");
    long k = long_from_json(j.at("k"), "k");
    if (j.contains("modulus")) {
        std::vector<long> mod;
        for (const auto& c : j.at("modulus")) mod.push_back(long_from_json(c, "modulus"));
        return PadicCtx::make(p, d, k, std::move(mod));
    }
    return PadicCtx::make(p, d, k);
}

Json fq_to_json(const FqElem& a) { return Json(a.coeffs()); }

FqElem fq_from_json(const CtxPtr& ctx, const Json& j) {
    if (j.is_number_integer()) return FqElem::from_int(ctx, j.get<long>());
    if (!j.is_array()) throw ValidationError("F_q element must be a coefficient array");
    std::vector<long> c;
    for (const auto& x : j) c.push_back(long_from_json(x, "coefficient"));
    return FqElem(ctx, std::move(c));
}

Json zq_to_json(const ZqElem& a) {
    Json coeffs = Json::array();
    for (const auto& c : a.coeffs()) coeffs.push_back(c.get_str());
    return Json{{"coeffs", coeffs}};
}

ZqElem zq_from_json(const CtxPtr& ctx, const Json& j) {
    const Json* arr = nullptr;
    if (j.is_object() && j.contains("coeffs"))
        arr = &j.at("coeffs");
    else if (j.is_array())
        arr = &j;
    else if (j.is_string() || j.is_number_integer())
        return ZqElem::from_int(ctx, big_from_json(j));
    if (!arr || !arr->is_array())
        throw ValidationError("O element must be {\"coeffs\": [...]} or an array");
    std::vector<BigInt> c;
    for (const auto& x : *arr) c.push_back(big_from_json(x));
    return ZqElem(ctx, std::move(c));
}

Json qq_to_json(const QqElem& a) {
    if (a.is_zero()) return Json{{"zero", true}};
    return Json{{"v", a.v()}, {"unit", zq_to_json(a.unit())}};
}

QqElem qq_from_json(const CtxPtr& ctx, const Json& j) {
    if (j.is_object() && j.contains("zero") && j.at("zero").get<bool>())
        return QqElem::zero(ctx);
    if (!j.is_object() || !j.contains("v") || !j.contains("unit"))
        throw ValidationError("Q_q element must be {\"zero\": true} or {\"v\", \"unit\"}");
    long v = long_from_json(j.at("v"), "v");
    return QqElem::make(v, zq_from_json(ctx, j.at("unit")));
}

Json matfq_to_json(const MatFq& m) {
    Json rows = Json::array();
    for (long i = 0; i < m.n(); ++i) {
        Json row = Json::array();
        for (long j = 0; j < m.n(); ++j) row.push_back(fq_to_json(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return Json{{"n", m.n()}, {"entries", rows}};
}

MatFq matfq_from_json(const CtxPtr& ctx, const Json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("entries"))
        throw ValidationError("matrix requires fields n and entries");
    long n = long_from_json(j.at("n"), "n");
    const Json& rows = j.at("entries");
    if (!rows.is_array() || static_cast<long>(rows.size()) != n)
        throw ValidationError("entries must be an n x n array");
    std::vector<FqElem> e;
    for (const auto& row : rows) {
        if (!row.is_array() || static_cast<long>(row.size()) != n)
            throw ValidationError("entries must be an n x n array");
        for (const auto& x : row) e.push_back(fq_from_json(ctx, x));
    }
    return MatFq(ctx, n, std::move(e));
}

Json matqq_to_json(const MatQq& m) {
    Json rows = Json::array();
    for (long i = 0; i < m.n(); ++i) {
        Json row = Json::array();
        for (long j = 0; j < m.n(); ++j) row.push_back(zq_to_json(m.body(i, j)));
        rows.push_back(std::move(row));
    }
    return Json{{"n", m.n()}, {"scale", m.scale()}, {"entries", rows}};
}

MatQq matqq_from_json(const CtxPtr& ctx, const Json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("entries"))
        throw ValidationError("matrix requires fields n and entries");
    long n = long_from_json(j.at("n"), "n");
    long scale = j.contains("scale") ? long_from_json(j.at("scale"), "scale") : 0;
    const Json& rows = j.at("entries");
    if (!rows.is_array() || static_cast<long>(rows.size()) != n)
        throw ValidationError("entries must be an n x n array");
    std::vector<ZqElem> e;
    for (const auto& row : rows) {
        if (!row.is_array() || static_cast<long>(row.size()) != n)
            throw ValidationError("entries must be an n x n array");
        for (const auto& x : row) e.push_back(zq_from_json(ctx, x));
    }
    return MatQq::make(ctx, n, scale, std::move(e));
}

Json lattice_to_json(const Lattice& l) {
    return Json{{"basis", matqq_to_json(l.basis())},
                {"diag_exponents", l.diag_exponents()}};
}

Json perm_to_json(const Perm& g) { return Json(g.images()); }

Perm perm_from_json(const Json& j) {
    if (!j.is_array()) throw ValidationError("permutation must be an array of images");
    std::vector<uint32_t> img;
    for (const auto& x : j) {
        long v = long_from_json(x, "image");
        if (v < 0) throw ValidationError("permutation images must be >= 0");
        img.push_back(static_cast<uint32_t>(v));
    }
    return Perm(std::move(img));
}

std::string filtration_name(FiltrationClass f) {
    switch (f) {
        case FiltrationClass::UNBOUNDED: return "UNBOUNDED";
        case FiltrationClass::BOUNDED: return "BOUNDED";
        case FiltrationClass::PARAHORIC_0: return "PARAHORIC_0";
        case FiltrationClass::PARAHORIC_0PLUS: return "PARAHORIC_0PLUS";
    }
    return "UNKNOWN";
}

} // namespace tjd
