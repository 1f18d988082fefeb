// Acceptance runner: one line per criterion; exit status 1 if any fails.
#include <cstdlib>
#include <iostream>
#include <string>

#include "ncj/acceptance.hpp"

int main(int argc, char** argv) {
  std::vector<int> which;
  for (int i = 1; i < argc; ++i) which.push_back(std::atoi(argv[i]));
  if (which.empty())
    for (int n = 1; n <= ncj::criterion_count; ++n) which.push_back(n);
  bool all = true;
  for (int n : which) {
    try {
      auto r = ncj::run_criterion(n);
      std::cout << ncj::summary_line(r) << "\n";
      for (const auto& c : r.checks)
        std::cout << "    " << (c.pass ? "ok   " : "FAIL ") << c.name << (c.detail.empty() ? "" : "  [" + c.detail + "]") << "\n";
      all = all && r.pass();
    } catch (const std::exception& e) {
      std::cout << "criterion " << n << "  FAIL  " << e.what() << "\n";
      all = false;
    }
  }
  return all ? 0 : 1;
}
