#pragma once

#include <string>

#include "json.hpp"

#include "tjd/decomposition.hpp"
#include "tjd/profinite.hpp"

namespace tjd {

using Json = nlohmann::json;

// Big integers travel as decimal strings; p, d, k and dimensions as numbers.

Json ctx_to_json(const PadicCtx& ctx);
CtxPtr ctx_from_json(const Json& j); // throws ValidationError

Json fq_to_json(const FqElem& a); // bare coefficient array
FqElem fq_from_json(const CtxPtr& ctx, const Json& j);

Json zq_to_json(const ZqElem& a); // {"coeffs": ["...", ...]}
ZqElem zq_from_json(const CtxPtr& ctx, const Json& j);

Json qq_to_json(const QqElem& a); // {"v": n, "unit": {...}} or {"zero": true}
QqElem qq_from_json(const CtxPtr& ctx, const Json& j);

Json matfq_to_json(const MatFq& m); // {"n": n, "entries": [[coeff arrays]]}
MatFq matfq_from_json(const CtxPtr& ctx, const Json& j);

Json matqq_to_json(const MatQq& m); // {"n": n, "scale": s, "entries": [[ZqElem]]}
MatQq matqq_from_json(const CtxPtr& ctx, const Json& j);

Json lattice_to_json(const Lattice& l);

Json perm_to_json(const Perm& g);
Perm perm_from_json(const Json& j);

std::string filtration_name(FiltrationClass f);

} // namespace tjd
