#pragma once

#include <optional>
#include <variant>

#include "tjd/matq.hpp"

namespace tjd {

// Topological Jordan decomposition gamma = gamma_ts * gamma_tu of a bounded
// element: gamma_ts of finite order prime to p (absolutely semisimple),
// gamma_tu with gamma_tu^{p^m} -> 1 (topologically unipotent).
//
// gamma_ts = g^c for the certificate exponent c with c = 1 mod M and
// c = 0 mod p^{a+k}, M = lcm_{e<=n}(q^e - 1), a = ceil(log_p n) (+1 when
// p = 2).  The p-part of c kills the unipotent contribution to order p^k;
// the prime-to-p part fixes the semisimple part, whose order divides M.
struct TJDResult {
    MatQq gamma_ts;
    MatQq gamma_tu;
    BigInt m; // prime-to-p exponent bound actually used
    long a;
    BigInt c;
    std::optional<Lattice> conjugator; // empty: identity
    long effective_precision;
};

// g integral with unit det.  m_multiplier (coprime to p) replaces M by
// m_multiplier * M; any such over-multiple yields the same decomposition.
TJDResult decompose_integral(const MatQq& g, long m_multiplier = 1);

// Any bounded g: conjugate into GL_n(O) by the stable-lattice basis, split
// there, conjugate back.
TJDResult decompose(const MatQq& g, long m_multiplier = 1);

// gamma_tu = 1 at effective precision (equivalently g^M = 1).
bool is_abs_semisimple(const MatQq& g);

// reduction of the integral conjugate is unipotent (equivalently gamma_ts = 1).
bool is_top_unipotent(const MatQq& g);

// The reductions of gamma_ts / gamma_tu equal the finite Jordan parts of the
// reduction of g.  g integral with unit det, r = decompose(g).
bool check_projection(const MatQq& g, const TJDResult& r);

enum class FiltrationClass { UNBOUNDED, BOUNDED, PARAHORIC_0, PARAHORIC_0PLUS };

// Position of a diagonal element in the standard torus filtration.
FiltrationClass torus_filtration(const MatQq& g);

// The decomposition modulo the centre exists only over a ramified extension
// of index e (the denominator of ord(det g)/n).
struct NeedsRamified {
    long e;
    bool tame; // gcd(e, p) = 1 (advisory)
};

struct ModCenterDecomposition {
    QqElem z; // central part p^r
    TJDResult result;
};

using ModCenterOutcome = std::variant<ModCenterDecomposition, NeedsRamified>;

// g with all char-poly root valuations equal to r = ord(det g)/n (Newton
// polygon a single segment; otherwise NotBoundedModCenter).  For integer r,
// z = p^r and the decomposition of z^{-1} g; otherwise NeedsRamified.
ModCenterOutcome decompose_mod_center(const MatQq& g);

// The fixed-point biconditional: L is stabilised by g iff it is stabilised
// by both parts.  Returns the truth of the biconditional.
bool check_fixed_lattice(const MatQq& g, const TJDResult& r, const Lattice& l);

} // namespace tjd
