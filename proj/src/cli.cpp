#include "ncj/cli.hpp"

#include <regex>
#include <set>
#include <sstream>

#include "ncj/acceptance.hpp"
#include "ncj/grassmann_lab.hpp"

namespace ncj {

namespace {

[[noreturn]] void input_error(const std::string& what) { throw Error(ErrorKind::InvalidArgument, what); }

std::vector<std::string> identifiers(const std::string& text) {
  static const std::regex id(R"([A-Za-z_][A-Za-z0-9_]*)");
  std::vector<std::string> out;
  for (auto it = std::sregex_iterator(text.begin(), text.end(), id); it != std::sregex_iterator(); ++it) out.push_back(it->str());
  return out;
}

std::vector<std::string> parameter_texts(const RunConfig& cfg) {
  std::vector<std::string> v{cfg.alpha, cfg.beta, cfg.gamma};
  if (cfg.t) v.push_back(*cfg.t);
  return v;
}

struct Params {
  FieldValue alpha, beta, gamma, t;
};

Params resolve_params(const RunConfig& cfg, const Field& f) {
  Params p{f.parse(cfg.alpha), f.parse(cfg.beta), f.parse(cfg.gamma), f.zero()};
  if (cfg.t) p.t = f.parse(*cfg.t);
  return p;
}

// (kind, alpha, t) when the selected algebra is one of the subalgebra/automorphism
// catalog shapes.
struct FamilyKey {
  std::string kind;
  FieldValue alpha, t;
};

std::optional<FamilyKey> family_key(const RunConfig& cfg, const Field& f) {
  if (cfg.json_path) return std::nullopt;
  Params p = resolve_params(cfg, f);
  if (cfg.target == "k3h" || cfg.target == "dth") return FamilyKey{cfg.target, f.parse("1/2"), p.t};
  if ((cfg.target == "k3" || cfg.target == "dt") && p.beta.is_zero() && p.gamma.is_zero()) return FamilyKey{cfg.target, p.alpha, p.t};
  return std::nullopt;
}

CoeffMatrix coefficient_data(const RunConfig& cfg, const Field& f) {
  std::size_t n = cfg.n;
  if (cfg.coeffs == "identity") return diagonal_matrix(std::vector<GrassmannElement>(n, GrassmannElement::constant(n, f.one(), f)));
  if (cfg.coeffs.rfind("diag:", 0) == 0) {
    std::vector<GrassmannElement> diag;
    std::stringstream ss(cfg.coeffs.substr(5));
    std::string item;
    while (std::getline(ss, item, ',')) diag.push_back(GrassmannElement::parse(item, n, f));
    if (diag.size() != n) input_error("diag: needs " + std::to_string(n) + " entries");
    return diagonal_matrix(diag);
  }
  input_error("coefficients must be 'identity' or 'diag:c1,...,cn'");
}

Json identity_json(const SuperAlgebra& a, const IdentityReport& r) {
  Json failures = Json::array();
  for (const auto& f : r.failures) {
    Json args = Json::array();
    for (std::size_t i : f.indices) args.push_back(a.names()[i]);
    failures.push_back({{"args", args}, {"residual", f.residual}});
  }
  return {{"identity", r.identity}, {"pass", r.pass}, {"checked", r.checked}, {"failure_count", r.failure_count}, {"failures", failures}};
}

Json wn_json(const std::vector<WnDerivation>& basis) {
  Json out = Json::array();
  for (const auto& d : basis) {
    Json comps = Json::array();
    for (const auto& c : d.f) comps.push_back(c.to_string());
    out.push_back(comps);
  }
  return out;
}

std::uint64_t check_budget(const RunConfig& cfg, const SuperAlgebra& a) {
  if (a.dim() > cfg.max_dim)
    throw Error(ErrorKind::SearchTooLarge, "dimension " + std::to_string(a.dim()) + " above --max-dim " + std::to_string(cfg.max_dim));
  return cfg.max_candidates;
}

void require_prime(const SuperAlgebra& a) {
  if (a.field().kind() != Field::Kind::Prime) input_error("finite-field oracle: pass --field gfP");
}

// ---------------------------------------------------------------------------

RunResult cmd_verify(const RunConfig& cfg) {
  SuperAlgebra a = resolve_algebra(cfg);
  RunResult r;
  Json checks = Json::array();
  bool pass = true;
  auto add = [&](const SuperAlgebra& on, const IdentityReport& rep) {
    checks.push_back(identity_json(on, rep));
    pass = pass && rep.pass;
  };
  add(a, check_flexible(a));
  add(a, check_noncomm_jordan(a));
  SuperAlgebra plus = plus_algebra(a);
  SuperAlgebra bracket = commutator_bracket(a);
  add(plus, check_jordan_super(plus));
  add(plus, check_poisson_bracket(plus, bracket));
  bool round_trip = reconstruct(plus, bracket) == a;
  pass = pass && round_trip;
  r.report = {{"verb", "verify"}, {"algebra", algebra_to_json(a)}, {"checks", checks}, {"round_trip", round_trip}, {"pass", pass}};
  r.code = pass ? kPass : kIdentityFailure;
  return r;
}

RunResult cmd_derive(const RunConfig& cfg) {
  SuperAlgebra a = resolve_algebra(cfg);
  check_budget(cfg, a);
  RunResult r;
  r.report = derivation_report(derivation_space(a));
  r.report["verb"] = "derive";
  bool closed = r.report["closure"]["closed"].get<bool>() && r.report["closure"]["jacobi"].get<bool>();
  r.code = closed ? kPass : kIdentityFailure;
  return r;
}

RunResult cmd_aut(const RunConfig& cfg) {
  SuperAlgebra a = resolve_algebra(cfg);
  require_prime(a);
  SearchBudget budget{check_budget(cfg, a)};
  auto maps = enumerate_automorphisms(a, budget);
  RunResult r;
  Json list = Json::array();
  for (const auto& m : maps) list.push_back(matrix_to_json(m.matrix));
  r.report = {{"verb", "aut"}, {"algebra", algebra_to_json(a)}, {"count", maps.size()}, {"maps", list}, {"group", is_group(maps)}};
  if (auto key = family_key(cfg, a.field())) {
    bool half = (a.field().embed(key->alpha) - a.field().parse("1/2")).is_zero();
    std::size_t inside = 0;
    for (const auto& m : maps) inside += automorphism_in_family(key->kind, half, m);
    r.report["in_family"] = inside;
  }
  return r;
}

RunResult cmd_subalg(const RunConfig& cfg) {
  SuperAlgebra a = resolve_algebra(cfg);
  require_prime(a);
  SearchBudget budget{check_budget(cfg, a)};
  if (cfg.dim == 0 || cfg.dim >= a.dim()) input_error("--dim must lie strictly between 0 and the algebra dimension");
  auto found = enumerate_subalgebras(a, cfg.dim, budget);
  RunResult r;
  Json list = Json::array();
  for (const auto& w : found) list.push_back(witness_to_json(a, w));
  r.report = {{"verb", "subalg"}, {"algebra", algebra_to_json(a)}, {"dim", cfg.dim}, {"count", found.size()}, {"witnesses", list}};
  if (auto key = family_key(cfg, a.field())) {
    auto m = subalgebra_cross_check(key->kind, key->alpha, key->t, cfg.dim, budget);
    r.report["family_match"] = {{"found", m.found}, {"matched", m.matched}, {"applicable_families", m.applicable_families}, {"unmatched", m.unmatched}};
    if (!m.unmatched.empty()) r.code = kIdentityFailure;
  }
  return r;
}

RunResult cmd_isosearch(const RunConfig& cfg) {
  SuperAlgebra a = resolve_algebra(cfg);
  require_prime(a);
  SearchBudget budget{check_budget(cfg, a)};
  RunResult r;
  SuperAlgebra b;
  bool predicted = false;
  if (cfg.other_path) {
    b = load_algebra(*cfg.other_path);
  } else {
    if (cfg.target != "k3") input_error("isosearch needs --other, or the k3 selector to compare against its normal form");
    Params p = resolve_params(cfg, a.field());
    auto nf = k3_normal_form(p.alpha, p.beta, p.gamma);
    if (!nf) {
      r.report = {{"verb", "isosearch"}, {"algebra", algebra_to_json(a)}, {"normal_form", nullptr}, {"note", "needs a square root outside the field"}};
      return r;
    }
    b = *nf;
    predicted = true;
  }
  auto res = isomorphism_search(a, b, budget);
  r.report = {{"verb", "isosearch"},
              {"algebra", algebra_to_json(a)},
              {"other", algebra_to_json(b)},
              {"found", res.map.has_value()},
              {"invariant_shortcut", res.invariant_shortcut},
              {"derivation_dims", {{res.dims_a.first, res.dims_a.second}, {res.dims_b.first, res.dims_b.second}}}};
  if (res.map) r.report["map"] = matrix_to_json(res.map->matrix);
  if (predicted && !res.map) r.code = kIdentityFailure;
  return r;
}

RunResult cmd_grassmann(const RunConfig& cfg) {
  Field f = resolve_field(cfg);
  if (cfg.n == 0 || cfg.n > 6) input_error("--n must be between 1 and 6");
  RunResult r;
  const std::string& action = cfg.target.empty() ? std::string("gras-der") : cfg.target;
  if (action == "gras-der") {
    auto a = coefficient_data(cfg, f);
    auto even = gras_der_solve(cfg.n, a, 0), odd = gras_der_solve(cfg.n, a, 1);
    auto ca = cent_ann_inclusion_check(cfg.n, a);
    r.report = {{"verb", "grassmann"},
                {"action", action},
                {"algebra", algebra_to_json(make_gamma_nd(cfg.n, a))},
                {"dims", {even.basis.size(), odd.basis.size()}},
                {"basis", {{"even", wn_json(even.basis)}, {"odd", wn_json(odd.basis)}}},
                {"verified", even.verified && odd.verified},
                {"cent_ann", {{"pass", ca.pass}, {"notes", ca.notes}}}};
    r.code = even.verified && odd.verified && ca.pass ? kPass : kIdentityFailure;
  } else if (action == "hn") {
    auto even = hn_space(cfg.n, 0, f), odd = hn_space(cfg.n, 1, f);
    r.report = {{"verb", "grassmann"}, {"action", action}, {"n", cfg.n}, {"dims", {even.size(), odd.size()}},
                {"basis", {{"even", wn_json(even)}, {"odd", wn_json(odd)}}}};
  } else if (action == "cent-ann") {
    auto ca = cent_ann_inclusion_check(cfg.n, coefficient_data(cfg, f));
    r.report = {{"verb", "grassmann"}, {"action", action}, {"pass", ca.pass}, {"notes", ca.notes},
                {"cent_ann_dims", {ca.cent_ann_dims.first, ca.cent_ann_dims.second}},
                {"der_dims", {ca.der_dims.first, ca.der_dims.second}}};
    r.code = ca.pass ? kPass : kIdentityFailure;
  } else if (action == "lifts") {
    auto A = GrassmannElement::parse(cfg.grassmann_a, cfg.n, f);
    SuperAlgebra j = make_j_gamma_A(cfg.n, A);
    std::size_t d1 = 0, d1_ok = 0, agree = 0, d2_ok = 0;
    for (unsigned s : {0U, 1U})
      for (const auto& d : hn_space(cfg.n, s, f)) {
        ++d1;
        bool direct = jgammaA_d1_direct(d, A);
        d1_ok += direct;
        agree += direct == jgammaA_d1_criterion(d, A);
      }
    for (Mask m : monomial_order(cfg.n)) d2_ok += is_derivation(j, jgamma_d2(GrassmannElement::monomial(cfg.n, m, f.one(), f)));
    std::size_t monomials = monomial_order(cfg.n).size();
    r.report = {{"verb", "grassmann"}, {"action", action}, {"n", cfg.n}, {"A", A.to_string()},
                {"d1", {{"basis", d1}, {"derivations", d1_ok}, {"criterion_agrees", agree}}},
                {"d2", {{"monomials", monomials}, {"derivations", d2_ok}}}};
    r.code = agree == d1 && d2_ok == monomials ? kPass : kIdentityFailure;
  } else {
    input_error("unknown grassmann action " + action + " (gras-der, hn, cent-ann, lifts)");
  }
  return r;
}

RunResult cmd_matrix(const RunConfig& cfg) {
  RunResult r;
  Json list = Json::array();
  std::ostringstream text;
  bool all = true;
  for (int n = 1; n <= criterion_count; ++n) {
    if (cfg.criterion && *cfg.criterion != n) continue;
    auto c = run_criterion(n, cfg.seed);
    text << summary_line(c) << "\n";
    list.push_back(criterion_json(c));
    all = all && c.pass();
  }
  if (list.empty()) input_error("criterion must be between 1 and " + std::to_string(criterion_count));
  r.report = {{"verb", "matrix"}, {"seed", cfg.seed}, {"criteria", list}, {"pass", all}};
  r.text = text.str();
  r.code = all ? kPass : kIdentityFailure;
  return r;
}

}  // namespace

Field resolve_field(const RunConfig& cfg) {
  Field f = Field::from_string(cfg.field);
  std::vector<std::string> vars;
  for (const auto& text : parameter_texts(cfg))
    for (const auto& id : identifiers(text))
      if (std::find(vars.begin(), vars.end(), id) == vars.end()) vars.push_back(id);
  if (vars.empty()) return f;
  switch (f.kind()) {
    case Field::Kind::Rational: return Field::rational_functions(vars);
    case Field::Kind::Prime: input_error("symbolic parameters need --field q or ratfunc:...");
    case Field::Kind::RationalFunction:
      for (const auto& v : vars)
        if (!f.has_variable(v)) input_error("variable " + v + " is not declared in " + cfg.field);
      return f;
  }
  return f;
}

SuperAlgebra resolve_algebra(const RunConfig& cfg) {
  if (cfg.json_path) return load_algebra(*cfg.json_path);
  Field f = resolve_field(cfg);
  const std::string& k = cfg.target;
  if (k.empty()) input_error("name an algebra (k3, k3h, dt, dth, jgamma, gamma-nd, grassmann) or pass --json");
  if (k == "jgamma") return make_j_gamma_A(cfg.n, GrassmannElement::parse(cfg.grassmann_a, cfg.n, f));
  if (k == "gamma-nd") return make_gamma_nd(cfg.n, coefficient_data(cfg, f));
  if (k == "grassmann") return make_grassmann(cfg.n, f);
  Params p = resolve_params(cfg, f);
  FieldValue half = f.parse("1/2");
  if (k == "k3") return make_k3(p.alpha, p.beta, p.gamma);
  if (k == "k3h") return make_k3(half, half, f.zero());
  if (k == "dt" || k == "dth") {
    if (!cfg.t) input_error("the D_t algebras need --t");
    return k == "dt" ? make_dt(p.t, p.alpha, p.beta, p.gamma) : make_dt(p.t, half, half, f.zero());
  }
  input_error("unknown algebra " + k);
}

RunResult run(const RunConfig& cfg) {
  try {
    if (cfg.verb == "verify") return cmd_verify(cfg);
    if (cfg.verb == "derive") return cmd_derive(cfg);
    if (cfg.verb == "aut") return cmd_aut(cfg);
    if (cfg.verb == "subalg") return cmd_subalg(cfg);
    if (cfg.verb == "isosearch") return cmd_isosearch(cfg);
    if (cfg.verb == "grassmann") return cmd_grassmann(cfg);
    if (cfg.verb == "matrix") return cmd_matrix(cfg);
    input_error("unknown verb " + cfg.verb);
  } catch (const Error& e) {
    RunResult r;
    r.code = e.kind() == ErrorKind::SearchTooLarge ? kBudgetExceeded : kInputError;
    r.report = {{"error", to_string(e.kind())}, {"message", e.what()}};
    return r;
  }
}

}  // namespace ncj
