#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "ncj/io.hpp"

namespace ncj {

/// Exit codes shared by every verb.
enum ExitCode : int { kPass = 0, kIdentityFailure = 1, kInputError = 2, kBudgetExceeded = 3 };

struct RunConfig {
  std::string verb;
  /// Catalog selector: k3, k3h, dt, dth, jgamma, gamma-nd, grassmann; or a
  /// Grassmann action (gras-der, hn, cent-ann, lifts) for the grassmann verb.
  std::string target;
  std::string field = "q";
  std::string alpha = "1/2", beta = "0", gamma = "0";
  std::optional<std::string> t;
  std::optional<std::string> json_path;
  std::optional<std::string> other_path;  // second algebra for isosearch
  std::optional<std::string> out_path;
  std::size_t n = 2;
  std::string grassmann_a = "0";          // A of J(Gamma_n, A)
  std::string coeffs = "identity";        // "identity" or "diag:c1,c2,..."
  std::size_t dim = 1;
  std::uint64_t seed = 1;
  std::uint64_t max_candidates = 5'000'000;
  std::size_t max_dim = 16;
  std::optional<int> criterion;
};

struct RunResult {
  int code = kPass;
  Json report;
  /// Extra text for the terminal (the matrix table).
  std::string text;
};

/// Resolves the configured field and parameters.  Names that are not
/// numbers become variables: over q the field is promoted to the rational
/// functions in those names.
Field resolve_field(const RunConfig& cfg);
SuperAlgebra resolve_algebra(const RunConfig& cfg);

/// Dispatches on cfg.verb.  Library errors map to exit codes 2 and 3 with an
/// {"error": kind, "message": ...} report.
RunResult run(const RunConfig& cfg);

}  // namespace ncj
