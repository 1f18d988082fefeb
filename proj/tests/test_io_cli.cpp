#include <filesystem>
#include <string>

#include "doctest.h"
#include "ncj/cli.hpp"

using namespace ncj;

namespace {

std::string data(const char* name) { return std::string(NCJ_TEST_DATA) + "/" + name; }

RunConfig config(std::string verb, std::string target = {}) {
  RunConfig c;
  c.verb = std::move(verb);
  c.target = std::move(target);
  return c;
}

}  // namespace

TEST_CASE("algebra specs round trip through JSON") {
  Field f = Field::rational_functions({"a", "t"});
  SuperAlgebra d = make_dt(f.variable("t"), f.variable("a"), f.zero(), f.zero());
  CHECK(algebra_from_json(algebra_to_json(d)) == d);
  Field p = Field::prime(7);
  SuperAlgebra k = make_k3(p.from_int(3), p.from_int(2), p.one());
  CHECK(algebra_from_json(Json::parse(dump(algebra_to_json(k)))) == k);

  Json spec = Json::parse(R"j({"field": "ratfunc:a,t", "parity": [0], "table": [[0, 0, [[0, "(4*a-2)/(t+1)"]]]]})j");
  SuperAlgebra one = algebra_from_json(spec);
  CHECK(one.coeff(0, 0, 0) == one.field().parse("(4*a-2)/(t+1)"));
  CHECK(field_from_json(Json::parse(R"({"kind": "gf", "p": 13})")) == Field::prime(13));

  CHECK(load_algebra(data("k3_literal.json")) == make_k3(Field::rational_functions({"a", "t"}).variable("a"),
                                                          Field::rational_functions({"a", "t"}).zero(),
                                                          Field::rational_functions({"a", "t"}).zero()));
}

TEST_CASE("malformed specs are input errors") {
  for (const char* text : {R"([1, 2])", R"({"parity": [0, 2]})", R"({"parity": [0], "dim": 2})",
                           R"({"parity": [0], "table": [[0, 1, [[0, 1]]]]})", R"({"parity": [0], "table": [[0, 0, [[0, 1.5]]]]})",
                           R"({"parity": [0], "field": {"kind": "reals"}})", R"({"parity": [0], "table": [[0, 0, [[0, "b"]]]]})"}) {
    CAPTURE(text);
    CHECK_THROWS_AS(algebra_from_json(Json::parse(text)), Error);
  }
}

TEST_CASE("verify verb") {
  auto c = config("verify", "k3");
  c.alpha = "a";
  c.beta = "b";
  c.gamma = "g";
  CHECK(run(c).code == kPass);
  auto d = config("verify", "dt");
  d.t = "0";
  d.alpha = "a";
  CHECK(run(d).code == kPass);
  auto bad = config("verify");
  bad.json_path = data("random_bad.json");
  auto r = run(bad);
  CHECK(r.code == kIdentityFailure);
  CHECK_FALSE(r.report["checks"][0]["failures"].empty());
  auto missing = config("verify");
  missing.json_path = data("nope.json");
  CHECK(run(missing).code == kInputError);
  CHECK(run(config("verify", "dt")).code == kInputError);
  auto finite = config("verify", "k3");
  finite.field = "gf5";
  finite.alpha = "a";
  CHECK(run(finite).code == kInputError);
}

TEST_CASE("derive, aut, subalg and isosearch verbs") {
  auto d = config("derive", "k3");
  auto r = run(d);
  CHECK(r.code == kPass);
  CHECK(r.report["dims"] == Json::array({3, 2}));
  CHECK(r.report["basis"]["odd"].size() == 2);
  CHECK(r.report["closure"]["structure"]["dim"] == 5);

  auto a = config("aut", "k3");
  a.alpha = "2";
  a.field = "gf5";
  auto ar = run(a);
  CHECK(ar.report["count"] == 4);
  CHECK(ar.report["in_family"] == 4);
  a.field = "q";
  CHECK(run(a).code == kInputError);
  a.field = "gf5";
  a.max_candidates = 10;
  CHECK(run(a).code == kBudgetExceeded);

  auto s = config("subalg", "k3");
  s.alpha = "2";
  s.field = "gf5";
  s.dim = 2;
  auto sr = run(s);
  CHECK(sr.code == kPass);
  CHECK(sr.report["count"] == 2);
  CHECK(sr.report["family_match"]["matched"] == 2);

  auto i = config("isosearch", "k3");
  i.field = "gf5";
  i.alpha = "0";
  i.beta = "1";
  i.gamma = "2";
  CHECK(run(i).report["found"] == true);
  auto i2 = config("isosearch", "k3");
  i2.field = "gf5";
  i2.alpha = "2";
  Json k33 = algebra_to_json(make_k3(Field::prime(5).from_int(3), Field::prime(5).zero(), Field::prime(5).zero()));
  std::string path = (std::filesystem::temp_directory_path() / "ncj_k3_half_gf5.json").string();
  write_text(path, dump(k33));
  i2.other_path = path;
  auto ir = run(i2);
  CHECK(ir.report["found"] == false);
  CHECK(ir.report["invariant_shortcut"] == true);
}

TEST_CASE("grassmann verb") {
  auto g = config("grassmann", "gras-der");
  g.n = 3;
  g.coeffs = "diag:1,1,x1^x2";
  auto r = run(g);
  CHECK(r.code == kPass);
  CHECK(r.report["dims"] == Json::array({1, 2}));
  auto h = config("grassmann", "hn");
  h.n = 2;
  CHECK(run(h).code == kPass);
  auto l = config("grassmann", "lifts");
  l.n = 3;
  l.grassmann_a = "x1^x2";
  CHECK(run(l).code == kPass);
  l.grassmann_a = "x1";
  CHECK(run(l).code == kInputError);
  g.coeffs = "diag:1";
  CHECK(run(g).code == kInputError);
}

TEST_CASE("reports are byte-identical across runs") {
  auto a = config("aut", "dt");
  a.field = "gf5";
  a.alpha = "3";
  a.t = "2";
  CHECK(dump(run(a).report) == dump(run(a).report));
  auto m = config("matrix");
  m.criterion = 11;
  m.seed = 7;
  auto first = run(m);
  CHECK(first.code == kPass);
  CHECK(dump(first.report) == dump(run(m).report));
  auto d = config("derive", "dt");
  d.t = "t";
  CHECK(dump(run(d).report) == dump(run(d).report));
}
