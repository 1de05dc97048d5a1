// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include "csalg/algebra.hpp"
#include "csalg/maps.hpp"
#include "csalg/report.hpp"

namespace csalg {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Options of one pipeline invocation. Positional inputs are passed as
/// "input" and "input2"; the gen family as "family".
using Options = std::map<std::string, std::string>;

inline constexpr std::size_t kDefaultMaxDim = 24;
inline constexpr const char* kMaxDimEnv = "CSALG_MAX_DIM";

/// Cap from options["max-dim"], else $CSALG_MAX_DIM, else kDefaultMaxDim.
std::size_t max_dim(const Options& options);

/// Runs gen, analyze, derivations, verify-thm31, verify-thm41, local-test or
/// trace. Throws UsageError for unknown commands or missing/invalid options,
/// ParseError / AssociativityError for bad input files.
Report run_pipeline(const std::string& command, const Options& options);

// In-memory pipelines behind the file-based commands.
Report analyze_report(const FinAlgebra& a, std::uint64_t seed, std::size_t trials);
Report trace_report(const FinAlgebra& a, std::uint64_t seed, std::size_t trials);
Report derivations_report(const FinAlgebra& a);
Report theorem31_report(const FinAlgebra& a);
Report theorem41_report(const FinAlgebra& a, const LinearMap& t);
Report local_derivation_report(const FinAlgebra& a, const LinearMap& d, std::uint64_t seed, std::size_t samples);
Report local_inner_automorphism_report(const FinAlgebra& a, const LinearMap& t, std::uint64_t seed,
                                       std::size_t samples, std::size_t trials);

/// "transpose" (matrix units of M_n), "identity", or a map file path.
LinearMap resolve_map(const std::string& source, const FinAlgebra& a);

}  // namespace csalg
