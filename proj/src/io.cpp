#include "ncj/io.hpp"

#include <fstream>
#include <sstream>

namespace ncj {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::Parse, what); }

FieldValue coeff_from_json(const Field& f, const Json& c) {
  if (c.is_number_integer()) return f.from_int(c.get<long>());
  if (c.is_string()) return f.parse(c.get<std::string>());
  bad("coefficient must be an integer or a string");
}

std::size_t index_from_json(const Json& j, std::size_t dim, const char* what) {
  if (!j.is_number_unsigned() && !j.is_number_integer()) bad(std::string(what) + " is not an index");
  long v = j.get<long>();
  if (v < 0 || static_cast<std::size_t>(v) >= dim) bad(std::string(what) + " index " + std::to_string(v) + " out of range");
  return static_cast<std::size_t>(v);
}

}  // namespace

Field field_from_json(const Json& j) {
  if (j.is_string()) return Field::from_string(j.get<std::string>());
  if (!j.is_object() || !j.contains("kind")) bad("field must be a string or an object with \"kind\"");
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "q") return Field::rationals();
  if (kind == "gf") {
    if (!j.contains("p") || !j.at("p").is_number_unsigned()) bad("gf field needs a positive \"p\"");
    return Field::prime(j.at("p").get<std::uint64_t>());
  }
  if (kind == "ratfunc") {
    if (!j.contains("vars") || !j.at("vars").is_array()) bad("ratfunc field needs \"vars\"");
    return Field::rational_functions(j.at("vars").get<std::vector<std::string>>());
  }
  bad("unknown field kind " + kind);
}

Json field_to_json(const Field& f) {
  switch (f.kind()) {
    case Field::Kind::Rational: return {{"kind", "q"}};
    case Field::Kind::Prime: return {{"kind", "gf"}, {"p", f.modulus()}};
    case Field::Kind::RationalFunction: return {{"kind", "ratfunc"}, {"vars", f.variables()}};
  }
  return {};
}

SuperAlgebra algebra_from_json(const Json& j) {
  try {
    if (!j.is_object()) bad("algebra spec must be an object");
    Field f = j.contains("field") ? field_from_json(j.at("field")) : Field::rationals();
    if (!j.contains("parity") || !j.at("parity").is_array()) bad("missing \"parity\"");
    auto parity = j.at("parity").get<std::vector<unsigned>>();
    for (unsigned p : parity)
      if (p > 1) bad("parity entries must be 0 or 1");
    if (j.contains("dim") && j.at("dim").get<std::size_t>() != parity.size()) bad("\"dim\" disagrees with \"parity\"");
    std::vector<std::string> names;
    if (j.contains("names")) {
      names = j.at("names").get<std::vector<std::string>>();
      if (names.size() != parity.size()) bad("\"names\" has the wrong length");
    }
    SuperAlgebra a(f, parity, names);
    const std::size_t n = parity.size();
    if (j.contains("table")) {
      for (const auto& entry : j.at("table")) {
        if (!entry.is_array() || entry.size() != 3 || !entry[2].is_array()) bad("table entries are [i, j, [[k, coeff], ...]]");
        std::size_t i = index_from_json(entry[0], n, "row"), jj = index_from_json(entry[1], n, "column");
        for (const auto& term : entry[2]) {
          if (!term.is_array() || term.size() != 2) bad("product terms are [k, coeff]");
          a.add(i, jj, index_from_json(term[0], n, "target"), coeff_from_json(f, term[1]));
        }
      }
    }
    return a;
  } catch (const Json::exception& e) {
    bad(e.what());
  }
}

SuperAlgebra load_algebra(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot read " + path);
  Json j;
  try {
    in >> j;
  } catch (const Json::exception& e) {
    bad(path + ": " + e.what());
  }
  return algebra_from_json(j);
}

Json algebra_to_json(const SuperAlgebra& a) {
  Json table = Json::array();
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      const auto& terms = a.product(i, j);
      if (terms.empty()) continue;
      Json ts = Json::array();
      for (const auto& t : terms) ts.push_back({t.index, t.coeff.to_string()});
      table.push_back({i, j, ts});
    }
  return {{"field", field_to_json(a.field())}, {"dim", a.dim()}, {"parity", a.parities()}, {"names", a.names()}, {"table", table}};
}

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).to_string());
    rows.push_back(row);
  }
  return rows;
}

Json map_to_json(const LinearMap& m) { return {{"parity", m.parity}, {"rows", matrix_to_json(m.matrix)}}; }

Json derivation_report(const DerivationSpace& d) {
  Json basis;
  for (unsigned s : {0U, 1U}) {
    Json part = Json::array();
    for (const auto& m : d.part(s)) part.push_back(matrix_to_json(m.matrix));
    basis[s ? "odd" : "even"] = part;
  }
  ClosureReport c = closure_check(d);
  auto [even, odd] = d.dims();
  return {{"algebra", algebra_to_json(d.algebra)},
          {"dims", {even, odd}},
          {"basis", basis},
          {"closure", {{"closed", c.closed}, {"jacobi", c.jacobi}, {"structure", algebra_to_json(c.structure)}, {"notes", c.notes}}}};
}

Json witness_to_json(const SuperAlgebra& a, const SubalgebraWitness& w) {
  Json vecs = Json::array();
  for (std::size_t r = 0; r < w.basis.rows(); ++r) vecs.push_back(a.element_to_string(w.basis.row(r)));
  return {{"basis", matrix_to_json(w.basis)}, {"span", vecs}, {"graded", is_graded(a, w)}};
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write " + path);
  out << text;
}

}  // namespace ncj
