#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ncj/io.hpp"

namespace ncj {

struct SubCheck {
  std::string name;
  bool pass = true;
  std::string detail;
};

struct CriterionResult {
  int number = 0;
  std::string title;
  std::vector<SubCheck> checks;
  bool pass() const;
};

constexpr int criterion_count = 11;

/// Runs one acceptance criterion (1..11).  `seed` feeds the randomized
/// consistency check.  Throws InvalidArgument for other numbers.
CriterionResult run_criterion(int number, std::uint64_t seed = 1);

/// "criterion N  PASS  title  (k/k checks)" plus the failing check names.
std::string summary_line(const CriterionResult& r);
Json criterion_json(const CriterionResult& r);

}  // namespace ncj
