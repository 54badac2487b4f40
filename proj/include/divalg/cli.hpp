#pragma once

#include <cstdint>
#include <string>

#include "divalg/json_io.hpp"

namespace divalg {

struct CliOptions {
    std::string format = "json";  // "json" or "text"
    std::uint64_t seed = 0;
    int precision = 50;
    int samples = 10;          // randomized-suite size for the verify command
    bool emit_tables = false;  // include multiplication tables in verify results
};

/// Check status values carried by every command report.
enum class CheckStatus { pass, fail, inconclusive };

const char* to_string(CheckStatus s);

/// Exit codes: 0 all pass, 1 any check failed, 2 usage error,
/// 3 inconclusive results only.
struct Envelope {
    Json doc;
    std::string rendered;
    int exit_code = 0;
};

Envelope run_classify(long p_max, long m_max, long alpha_max, const CliOptions& options);
Envelope run_verify(long p, long m, long alpha, const CliOptions& options);
Envelope run_profile(long p, long m, long alpha, const CliOptions& options);
Envelope run_hermitian(long p, const CliOptions& options);

}  // namespace divalg
