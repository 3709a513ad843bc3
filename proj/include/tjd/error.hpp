#pragma once

#include <stdexcept>
#include <string>

namespace tjd {

struct TjdError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Arithmetic context of two operands differs.
struct CtxMismatch : TjdError { using TjdError::TjdError; };

// Inversion of an element with positive valuation.
struct NonUnit : TjdError { using TjdError::TjdError; };

// A valuation or congruence cannot be certified at the working precision.
struct PrecisionInsufficient : TjdError { using TjdError::TjdError; };

// det == 0 at the working precision.
struct Singular : TjdError { using TjdError::TjdError; };

struct NotBounded : TjdError { using TjdError::TjdError; };
struct NotIntegral : TjdError { using TjdError::TjdError; };
struct NonUnitDet : TjdError { using TjdError::TjdError; };
struct RankDeficient : TjdError { using TjdError::TjdError; };
struct NotDiagonal : TjdError { using TjdError::TjdError; };
struct NotBoundedModCenter : TjdError { using TjdError::TjdError; };
struct SearchTooLarge : TjdError { using TjdError::TjdError; };
struct UnknownSuite : TjdError { using TjdError::TjdError; };
struct ValidationError : TjdError { using TjdError::TjdError; };

} // namespace tjd
