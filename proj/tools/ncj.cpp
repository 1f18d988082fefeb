#include <iostream>

#include "CLI11.hpp"
#include "ncj/cli.hpp"

int main(int argc, char** argv) {
  ncj::RunConfig cfg;
  CLI::App app{"Noncommutative Jordan superalgebra workbench"};
  app.require_subcommand(1);
  app.fallthrough();

  app.add_option("--field", cfg.field, "q, gfP or ratfunc:a,b,...");
  app.add_option("--alpha", cfg.alpha, "rational or variable name");
  app.add_option("--beta", cfg.beta);
  app.add_option("--gamma", cfg.gamma);
  app.add_option("--t", cfg.t);
  app.add_option("--json", cfg.json_path, "algebra spec file")->check(CLI::ExistingFile);
  app.add_option("--other", cfg.other_path, "second algebra spec for isosearch")->check(CLI::ExistingFile);
  app.add_option("--out", cfg.out_path, "write the JSON report here");
  app.add_option("--n", cfg.n, "number of Grassmann generators");
  app.add_option("--A", cfg.grassmann_a, "A of J(Gamma_n, A), e.g. x1^x2");
  app.add_option("--a", cfg.coeffs, "coefficient data: identity or diag:c1,...,cn");
  app.add_option("--dim", cfg.dim, "subalgebra dimension");
  app.add_option("--seed", cfg.seed);
  app.add_option("--max-candidates", cfg.max_candidates, "search budget")->check(CLI::PositiveNumber);
  app.add_option("--max-dim", cfg.max_dim, "largest algebra the oracles accept")->check(CLI::PositiveNumber);
  app.add_option("--criterion", cfg.criterion, "run one acceptance criterion");

  for (const char* verb : {"verify", "derive", "aut", "subalg", "isosearch"}) {
    auto* sub = app.add_subcommand(verb);
    sub->add_option("algebra", cfg.target, "k3, k3h, dt, dth, jgamma, gamma-nd, grassmann");
  }
  app.add_subcommand("grassmann")->add_option("action", cfg.target, "gras-der, hn, cent-ann, lifts");
  app.add_subcommand("matrix", "run the acceptance criteria");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : ncj::kInputError;
  }
  cfg.verb = app.get_subcommands().front()->get_name();

  ncj::RunResult r = ncj::run(cfg);
  std::string body = ncj::dump(r.report);
  if (!r.text.empty()) std::cout << r.text;
  if (cfg.out_path) {
    try {
      ncj::write_text(*cfg.out_path, body);
    } catch (const ncj::Error& e) {
      std::cerr << e.what() << "\n";
      return ncj::kInputError;
    }
  } else if (r.text.empty()) {
    std::cout << body;
  }
  return r.code;
}
