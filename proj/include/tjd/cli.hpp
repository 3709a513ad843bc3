#pragma once

#include <cstdint>
#include <string>

#include "tjd/json_io.hpp"
#include "tjd/verify.hpp"

namespace tjd::cli {

// Exit codes: 0 ok, 1 verification failure, 2 NotBounded,
// 3 PrecisionInsufficient, 4 NeedsRamified, 5 parse/validation error.
struct RunResult {
    Json report;
    int exit_code = 0;
};

// Each entry point catches library errors and reports them as
// {"error": {"type", "message"}} with the matching exit code, so the
// reports are deterministic functions of their inputs.
RunResult run_decompose(const Json& ctx_json, const Json& matrix_json, bool mod_center);
RunResult run_check(const Json& ctx_json, const Json& matrix_json);
RunResult run_teichmuller(const Json& ctx_json, const Json& value_json);
RunResult run_profinite_decompose(const Json& perm_json, long p);
RunResult run_verify(const std::string& suite, uint64_t seed, long trials);

Json suite_report_to_json(const SuiteReport& rep);

} // namespace tjd::cli
