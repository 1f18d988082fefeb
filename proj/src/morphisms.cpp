#include "ncj/morphisms.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <set>
#include <sstream>

#include "ncj/derivations.hpp"
#include "ncj/parallel.hpp"

namespace ncj {

namespace {

std::string pair_name(const SuperAlgebra& a, std::size_t i, std::size_t j) {
  return "(" + a.names()[i] + "," + a.names()[j] + ")";
}

Field joined(const Field& a, const Field& b) { return a == b ? a : a.join(b); }

std::string matrix_key(const Matrix& m) {
  std::string s;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) s += m.at(r, c).to_string() + ",";
    s += ";";
  }
  return s;
}

// Reduces v against a reduced echelon basis; zero iff v lies in the span.
Vec reduce(const Matrix& basis, const std::vector<std::size_t>& pivots, Vec v) {
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    FieldValue c = v[pivots[r]];
    if (c.is_zero()) continue;
    for (std::size_t k = 0; k < v.size(); ++k)
      if (!basis.at(r, k).is_zero()) v[k] -= c * basis.at(r, k);
  }
  return v;
}

std::vector<std::size_t> pivots_of(const Matrix& basis) {
  std::vector<std::size_t> piv;
  for (std::size_t r = 0; r < basis.rows(); ++r)
    for (std::size_t c = 0; c < basis.cols(); ++c)
      if (!basis.at(r, c).is_zero()) {
        piv.push_back(c);
        break;
      }
  return piv;
}

bool closed(const SuperAlgebra& a, const Matrix& basis, const std::vector<std::size_t>& pivots) {
  for (std::size_t i = 0; i < basis.rows(); ++i) {
    Vec bi = basis.row(i);
    for (std::size_t j = 0; j < basis.rows(); ++j)
      if (!is_zero(reduce(basis, pivots, a.multiply(bi, basis.row(j))))) return false;
  }
  return true;
}

std::vector<FieldValue> field_elements(const Field& f, bool nonzero) {
  std::vector<FieldValue> out;
  for (std::uint64_t v = nonzero ? 1 : 0; v < f.modulus(); ++v) out.push_back(f.from_int(static_cast<long>(v)));
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// homomorphisms

MorphismReport is_homomorphism(const SuperAlgebra& a, const SuperAlgebra& b, const LinearMap& phi) {
  if (phi.parity != 0) throw Error(ErrorKind::ParityViolation, "homomorphisms are even");
  if (phi.matrix.rows() != a.dim() || phi.matrix.cols() != b.dim()) throw Error(ErrorKind::SizeMismatch, "map shape");
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t k = 0; k < b.dim(); ++k)
      if (!phi.matrix.at(i, k).is_zero() && a.parity(i) != b.parity(k))
        throw Error(ErrorKind::ParityViolation, "map mixes parities at " + a.names()[i] + " -> " + b.names()[k]);
  Field F = joined(joined(a.field(), b.field()), phi.matrix.field());
  SuperAlgebra A = a.field() == F ? a : a.change_field(F);
  SuperAlgebra B = b.field() == F ? b : b.change_field(F);
  Matrix M = phi.matrix.field() == F ? phi.matrix : phi.matrix.substitute(F, {});
  MorphismReport rep;
  std::vector<Vec> images;
  for (std::size_t i = 0; i < A.dim(); ++i) images.push_back(M.row(i));
  for (std::size_t i = 0; i < A.dim(); ++i)
    for (std::size_t j = 0; j < A.dim(); ++j) {
      Vec lhs = A.basis(i).empty() ? Vec{} : A.multiply(A.basis(i), A.basis(j)) * M;
      Vec rhs = B.multiply(images[i], images[j]);
      Vec res = sub(lhs, rhs);
      if (!is_zero(res)) {
        rep.pass = false;
        if (rep.residuals.size() < 8) rep.residuals.push_back(pair_name(A, i, j) + ": " + B.element_to_string(res));
      }
    }
  return rep;
}

MorphismReport is_automorphism(const SuperAlgebra& a, const LinearMap& phi) {
  MorphismReport rep = is_homomorphism(a, a, phi);
  Field F = joined(a.field(), phi.matrix.field());
  Matrix M = phi.matrix.field() == F ? phi.matrix : phi.matrix.substitute(F, {});
  if (determinant(M).is_zero()) {
    rep.pass = false;
    rep.note = "map is not invertible";
  }
  return rep;
}

LinearMap ParametricMap::resolved() const {
  if (constraints.empty()) return {matrix, 0};
  return {matrix.substitute(matrix.field(), constraints), 0};
}

// ---------------------------------------------------------------------------
// subalgebras

SubalgebraWitness make_witness(const SuperAlgebra& a, const std::vector<Element>& spanning) {
  SubalgebraWitness w;
  w.spanning = spanning;
  auto rows = echelon_basis(spanning, a.field());
  w.basis = rows.empty() ? Matrix(0, a.dim(), a.field()) : Matrix::from_rows(rows, a.field(), a.dim());
  w.dim = rows.size();
  return w;
}

bool is_subalgebra(const SuperAlgebra& a, const SubalgebraWitness& w) { return closed(a, w.basis, pivots_of(w.basis)); }

bool is_graded(const SuperAlgebra& a, const SubalgebraWitness& w) {
  std::vector<Vec> parts[2];
  for (std::size_t r = 0; r < w.basis.rows(); ++r) {
    Vec v = w.basis.row(r);
    for (unsigned s = 0; s < 2; ++s) {
      Vec p = v;
      for (std::size_t k = 0; k < p.size(); ++k)
        if (a.parity(k) != s) p[k] = a.field().zero();
      parts[s].push_back(p);
    }
  }
  std::size_t total = 0;
  for (unsigned s = 0; s < 2; ++s) total += echelon_basis(parts[s], a.field()).size();
  return total == w.dim;
}

std::string witness_text(const SuperAlgebra& a, const Matrix& basis) {
  std::string s = "(";
  for (std::size_t r = 0; r < basis.rows(); ++r) s += (r ? ", " : "") + a.element_to_string(basis.row(r));
  return s + ")";
}

// ---------------------------------------------------------------------------
// families

namespace {

using Terms = std::vector<std::pair<std::string, std::string>>;  // (coef, basis name)

std::vector<Terms> parse_vectors(const std::string& text) {
  std::vector<Terms> out;
  std::stringstream vs(text);
  std::string vec;
  while (std::getline(vs, vec, ',')) {
    Terms t;
    std::stringstream ts(vec);
    std::string term;
    while (ts >> term) {
      auto colon = term.rfind(':');
      if (colon == std::string::npos) throw Error(ErrorKind::Parse, "family term without ':' in " + text);
      t.emplace_back(term.substr(0, colon), term.substr(colon + 1));
    }
    out.push_back(std::move(t));
  }
  return out;
}

std::vector<std::string> symbol_list(const SubalgebraFamily& f) {
  std::vector<std::string> v{"a", "t"};
  for (const auto& p : f.params) v.push_back(p);
  return v;
}

SubalgebraFamily fam(std::string id, std::string kind, std::size_t dim, AlphaCase alpha, TCase t, std::string vectors,
                     std::vector<std::string> params = {}) {
  SubalgebraFamily f;
  f.id = std::move(id);
  f.kind = std::move(kind);
  f.dim = dim;
  f.alpha = alpha;
  f.t = t;
  f.vectors = std::move(vectors);
  f.params = std::move(params);
  return f;
}

std::vector<SubalgebraFamily> build_registry() {
  using A = AlphaCase;
  using T = TCase;
  std::vector<SubalgebraFamily> r;
  const std::vector<std::string> g1{"g1"}, g12{"g1", "g2"}, g123{"g1", "g2", "g3"};
  // K3(a)
  r.push_back(fam("k3/1/any", "k3", 1, A::Half, T::Any, "g1:e g2:z g3:w", g123));
  r.push_back(fam("k3/1/ez", "k3", 1, A::Generic, T::Any, "g1:e g2:z", g12));
  r.push_back(fam("k3/1/ew", "k3", 1, A::Generic, T::Any, "g1:e g2:w", g12));
  r.push_back(fam("k3/2/odd-line", "k3", 2, A::Half, T::Any, "1:e, g1:z g2:w", g12));
  r.push_back(fam("k3/2/ez", "k3", 2, A::Generic, T::Any, "1:e, 1:z"));
  r.push_back(fam("k3/2/ew", "k3", 2, A::Generic, T::Any, "1:e, 1:w"));
  // K3^{1/2}
  r.push_back(fam("k3h/1/ew", "k3h", 1, A::Half, T::Any, "g1:e g2:w", g12));
  r.push_back(fam("k3h/2/ew", "k3h", 2, A::Half, T::Any, "1:e, 1:w"));
  // D_t(a), one-dimensional
  for (auto [tc, tag] : {std::pair{T::NotMinusOne, "gen"}, std::pair{T::MinusOne, "m1"}}) {
    std::string p = std::string("dt/1/") + tag + "-";
    r.push_back(fam(p + "unit", "dt", 1, A::Generic, tc, "1:e1 1:e2"));
    r.push_back(fam(p + "e1x", "dt", 1, A::Generic, tc, "g1:e1 g2:x", g12));
    r.push_back(fam(p + "e2x", "dt", 1, A::Generic, tc, "g1:e2 g2:x", g12));
    r.push_back(fam(p + "e1y", "dt", 1, A::Generic, tc, "g1:e1 g2:y", g12));
    r.push_back(fam(p + "e2y", "dt", 1, A::Generic, tc, "g1:e2 g2:y", g12));
  }
  {
    auto f = fam("dt/1/m1-skew", "dt", 1, A::Generic, T::MinusOne, "g1:e1 g2:e2 g3:x g1*g2/(g3*(4*a-2)):y", g123);
    f.nonzero_params = true;
    r.push_back(f);
  }
  r.push_back(fam("dt/1/half-unit", "dt", 1, A::Half, T::Any, "1:e1 1:e2"));
  r.push_back(fam("dt/1/half-odd", "dt", 1, A::Half, T::Any, "g1:x g2:y", g12));
  r.push_back(fam("dt/1/half-e1", "dt", 1, A::Half, T::Any, "1:e1 g1:x g2:y", g12));
  r.push_back(fam("dt/1/half-e2", "dt", 1, A::Half, T::Any, "1:e2 g1:x g2:y", g12));
  // D_t(a), two-dimensional
  auto common2 = [&](const std::string& p, A a, T t) {
    r.push_back(fam(p + "e1e2", "dt", 2, a, t, "1:e1, 1:e2"));
    r.push_back(fam(p + "e1x", "dt", 2, a, t, "1:e1, 1:x"));
    r.push_back(fam(p + "e2x", "dt", 2, a, t, "1:e2, 1:x"));
    r.push_back(fam(p + "e1y", "dt", 2, a, t, "1:e1, 1:y"));
    r.push_back(fam(p + "e2y", "dt", 2, a, t, "1:e2, 1:y"));
  };
  common2("dt/2/gen-", A::Generic, T::NotMinusOne);
  r.push_back(fam("dt/2/gen-unit-x", "dt", 2, A::Generic, T::NotMinusOne, "1:e1 1:e2, 1:x"));
  r.push_back(fam("dt/2/gen-unit-y", "dt", 2, A::Generic, T::NotMinusOne, "1:e1 1:e2, 1:y"));
  r.push_back(fam("dt/2/gen-split-x", "dt", 2, A::Generic, T::NotMinusOne, "1:e1 g1:x, 1:e2 -g1:x", g1));
  r.push_back(fam("dt/2/gen-split-y", "dt", 2, A::Generic, T::NotMinusOne, "1:e1 g1:y, 1:e2 -g1:y", g1));
  common2("dt/2/half-", A::Half, T::NotMinusOne);
  r.push_back(fam("dt/2/half-unit-x", "dt", 2, A::Half, T::NotMinusOne, "1:e1 1:e2, 1:x"));
  r.push_back(fam("dt/2/half-unit-y", "dt", 2, A::Half, T::NotMinusOne, "1:e1 1:e2, 1:y"));
  r.push_back(fam("dt/2/half-split", "dt", 2, A::Half, T::NotMinusOne, "1:e1 g1:x g2:y, 1:e2 -g1:x -g2:y", g12));
  common2("dt/2/m1-", A::Generic, T::MinusOne);
  r.push_back(fam("dt/2/m1-split-y", "dt", 2, A::Generic, T::MinusOne, "1:e1 g1:y, 1:e2 -g1:y", g1));
  r.push_back(fam("dt/2/m1-split-x", "dt", 2, A::Generic, T::MinusOne, "1:e1 g1:x, 1:e2 -g1:x", g1));
  r.push_back(fam("dt/2/m1-unit-odd", "dt", 2, A::Generic, T::MinusOne, "1:e1 1:e2, g1:x g2:y", g12));
  // D_t(a), three-dimensional
  r.push_back(fam("dt/3/gen-x", "dt", 3, A::Generic, T::Any, "1:e1, 1:e2, 1:x"));
  r.push_back(fam("dt/3/gen-y", "dt", 3, A::Generic, T::Any, "1:e1, 1:e2, 1:y"));
  r.push_back(fam("dt/3/half-odd", "dt", 3, A::Half, T::NotOne, "1:e1, 1:e2, g1:x g2:y", g12));
  r.push_back(fam("dt/3/half-t1-unit", "dt", 3, A::Half, T::One, "1:e1 1:e2, g1:e2 1:x, g2:e2 1:y", g12));
  r.push_back(fam("dt/3/half-t1-odd", "dt", 3, A::Half, T::One, "1:e1, 1:e2, g1:x g2:y", g12));
  // D_t^{1/2}
  r.push_back(fam("dth/1/gen-unit", "dth", 1, A::Half, T::NotMinusOne, "1:e1 1:e2"));
  r.push_back(fam("dth/1/gen-e1y", "dth", 1, A::Half, T::NotMinusOne, "g1:e1 g2:y", g12));
  r.push_back(fam("dth/1/gen-e2y", "dth", 1, A::Half, T::NotMinusOne, "g1:e2 g2:y", g12));
  r.push_back(fam("dth/1/m1-unit", "dth", 1, A::Half, T::MinusOne, "1:e1 1:e2"));
  {
    auto f = fam("dth/1/m1-root", "dth", 1, A::Half, T::MinusOne, "g1:e1 g2:e2 s:x g3:y", {"g1", "g2", "s", "g3"});
    f.constraint = "s^2+g1*g2";
    f.eliminate = {{"g2", "-s^2/g1"}};
    r.push_back(f);
  }
  for (auto [tc, tag] : {std::pair{T::NotMinusOne, "gen"}, std::pair{T::MinusOne, "m1"}}) {
    std::string p = std::string("dth/2/") + tag + "-";
    r.push_back(fam(p + "e1y", "dth", 2, A::Half, tc, "1:e1, 1:y"));
    r.push_back(fam(p + "e2y", "dth", 2, A::Half, tc, "1:e2, 1:y"));
    r.push_back(fam(p + "split-y", "dth", 2, A::Half, tc, "1:e1 g1:y, 1:e2 -g1:y", g1));
  }
  r.push_back(fam("dth/2/m1-unit-odd", "dth", 2, A::Half, T::MinusOne, "1:e1 1:e2, g1:x g2:y", g12));
  r.push_back(fam("dth/3/gen-y", "dth", 3, A::Half, T::NotMinusOne, "1:e1, 1:e2, 1:y"));
  r.push_back(fam("dth/3/m1-y", "dth", 3, A::Half, T::MinusOne, "1:e1, 1:e2, 1:y"));
  {
    auto f = fam("dth/3/m1-root", "dth", 3, A::Half, T::MinusOne, "1:e1 1:e2, g1:e2 1:x, s:e2 1:y", {"g1", "s"});
    f.constraint = "s^2+4";
    f.finite_only = true;
    r.push_back(f);
  }
  return r;
}

bool alpha_matches(AlphaCase c, bool half) { return c == AlphaCase::Half ? half : !half; }

bool t_matches(TCase c, const FieldValue& t) {
  bool m1 = (t + 1).is_zero(), p1 = (t - 1).is_zero();
  switch (c) {
    case TCase::Any: return true;
    case TCase::NotMinusOne: return !m1;
    case TCase::MinusOne: return m1;
    case TCase::NotOne: return !p1;
    case TCase::One: return p1;
  }
  return false;
}

}  // namespace

std::string SubalgebraFamily::shape() const {
  std::string out = "(";
  bool first_vec = true;
  for (const auto& terms : parse_vectors(vectors)) {
    if (!first_vec) out += ", ";
    first_vec = false;
    bool first = true;
    for (const auto& [c, name] : terms) {
      if (c == "1") {
        out += (first ? "" : " + ") + name;
      } else if (c[0] == '-') {
        out += (first ? "-" : " - ") + (c == "-1" ? name : c.substr(1) + "*" + name);
      } else {
        out += (first ? "" : " + ") + c + "*" + name;
      }
      first = false;
    }
  }
  return out + ")";
}

const std::vector<SubalgebraFamily>& subalgebra_families() {
  static const std::vector<SubalgebraFamily> registry = build_registry();
  return registry;
}

const SubalgebraFamily& find_family(const std::string& id) {
  for (const auto& f : subalgebra_families())
    if (f.id == id) return f;
  throw Error(ErrorKind::UnknownFamily, id);
}

SuperAlgebra family_algebra(const std::string& kind, const FieldValue& alpha, const FieldValue& t) {
  Field F = joined(alpha.field(), t.field());
  FieldValue zero = F.zero(), half = F.parse("1/2");
  if (kind == "k3") return make_k3(F.embed(alpha), zero, zero);
  if (kind == "k3h") return make_k3(half, half, zero);
  if (kind == "dt") return make_dt(F.embed(t), F.embed(alpha), zero, zero);
  if (kind == "dth") return make_dt(F.embed(t), half, half, zero);
  throw Error(ErrorKind::UnknownFamily, "algebra kind " + kind);
}

std::optional<std::vector<Element>> family_instance(const SubalgebraFamily& f, const SuperAlgebra& a,
                                                    const std::map<std::string, FieldValue>& bindings) {
  Field sym = Field::rational_functions(symbol_list(f));
  const Field& target = a.field();
  try {
    if (!f.constraint.empty() && !sym.parse(f.constraint).substitute(target, bindings).is_zero()) return std::nullopt;
    std::vector<Element> out;
    for (const auto& terms : parse_vectors(f.vectors)) {
      Element v = a.zero();
      for (const auto& [c, name] : terms) v[a.index_of(name)] += sym.parse(c).substitute(target, bindings);
      out.push_back(std::move(v));
    }
    return out;
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::PoleAtPoint || e.kind() == ErrorKind::DivisionByZero) return std::nullopt;
    throw;
  }
}

FamilyClosureReport verify_family_closure(const std::string& id) {
  const SubalgebraFamily& f = find_family(id);
  FamilyClosureReport rep;
  rep.id = id;
  auto t_value = [&](const Field& F) -> FieldValue {
    switch (f.t) {
      case TCase::MinusOne: return F.from_int(-1);
      case TCase::One: return F.one();
      default: return F.has_variable("t") ? F.variable("t") : F.from_int(2);
    }
  };
  if (f.finite_only) {
    Field F = Field::prime(13);
    rep.method = "every parameter value over gf13";
    FieldValue alpha = f.alpha == AlphaCase::Half ? F.parse("1/2") : F.from_int(2);
    FieldValue t = t_value(F);
    SuperAlgebra a = family_algebra(f.kind, alpha, t);
    auto values = field_elements(F, f.nonzero_params);
    std::size_t instances = 0;
    std::vector<std::size_t> idx(f.params.size(), 0);
    while (true) {
      std::map<std::string, FieldValue> b{{"a", alpha}, {"t", t}};
      for (std::size_t k = 0; k < idx.size(); ++k) b[f.params[k]] = values[idx[k]];
      if (auto vecs = family_instance(f, a, b)) {
        ++instances;
        auto w = make_witness(a, *vecs);
        if (w.dim != f.dim || !is_subalgebra(a, w)) {
          rep.pass = false;
          if (rep.notes.size() < 4) rep.notes.push_back("not closed at " + witness_text(a, w.basis));
        }
      }
      std::size_t k = 0;
      while (k < idx.size() && ++idx[k] == values.size()) idx[k++] = 0;
      if (k == idx.size()) break;
    }
    if (instances == 0) {
      rep.pass = false;
      rep.notes.push_back("no parameter value satisfies the side condition");
    }
    rep.notes.push_back(std::to_string(instances) + " instances");
    return rep;
  }
  rep.method = "symbolic";
  Field F = Field::rational_functions(symbol_list(f));
  FieldValue alpha = f.alpha == AlphaCase::Half ? F.parse("1/2") : F.variable("a");
  FieldValue t = t_value(F);
  SuperAlgebra a = family_algebra(f.kind, alpha, t);
  std::map<std::string, FieldValue> b{{"a", alpha}, {"t", t}};
  for (const auto& p : f.params) b[p] = F.variable(p);
  for (const auto& [p, lit] : f.eliminate) b[p] = F.parse(lit);
  auto vecs = family_instance(f, a, b);
  if (!vecs) {
    rep.pass = false;
    rep.notes.push_back("generic instance undefined");
    return rep;
  }
  auto w = make_witness(a, *vecs);
  if (w.dim != f.dim) {
    rep.pass = false;
    rep.notes.push_back("span has dimension " + std::to_string(w.dim));
  }
  if (!is_subalgebra(a, w)) {
    rep.pass = false;
    rep.notes.push_back("not closed under the product");
  }
  return rep;
}

// ---------------------------------------------------------------------------
// enumeration

namespace {

void combinations(std::size_t n, std::size_t d, std::size_t start, std::vector<std::size_t>& cur,
                  std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == d) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    combinations(n, d, i + 1, cur, out);
    cur.pop_back();
  }
}

std::uint64_t checked_pow(std::uint64_t base, std::size_t e, std::uint64_t cap) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < e; ++i) {
    if (r > cap / base) return cap + 1;
    r *= base;
  }
  return r;
}

}  // namespace

std::vector<SubalgebraWitness> enumerate_subalgebras(const SuperAlgebra& a, std::size_t d, const SearchBudget& budget) {
  const Field& F = a.field();
  if (F.kind() != Field::Kind::Prime) throw Error(ErrorKind::InvalidArgument, "enumeration needs a prime field");
  const std::size_t n = a.dim();
  if (d == 0 || d > n) throw Error(ErrorKind::InvalidArgument, "subspace dimension out of range");
  const std::uint64_t p = F.modulus();
  std::vector<std::vector<std::size_t>> patterns;
  std::vector<std::size_t> cur;
  combinations(n, d, 0, cur, patterns);
  // free cells of each pattern: row r, columns after its pivot that are not pivots
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> cells(patterns.size());
  std::uint64_t total = 0;
  for (std::size_t k = 0; k < patterns.size(); ++k) {
    const auto& piv = patterns[k];
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = piv[r] + 1; c < n; ++c)
        if (std::find(piv.begin(), piv.end(), c) == piv.end()) cells[k].emplace_back(r, c);
    total += checked_pow(p, cells[k].size(), budget.max_candidates);
    if (total > budget.max_candidates)
      throw Error(ErrorKind::SearchTooLarge, "more than " + std::to_string(budget.max_candidates) + " subspaces");
  }
  auto values = field_elements(F, false);
  std::vector<std::vector<SubalgebraWitness>> found(patterns.size());
  parallel_for(patterns.size(), [&](std::size_t k) {
    const auto& piv = patterns[k];
    const auto& free = cells[k];
    Matrix m(d, n, F);
    for (std::size_t r = 0; r < d; ++r) m.set(r, piv[r], F.one());
    std::vector<std::size_t> idx(free.size(), 0);
    while (true) {
      for (std::size_t c = 0; c < free.size(); ++c) m.set(free[c].first, free[c].second, values[idx[c]]);
      if (closed(a, m, piv)) {
        SubalgebraWitness w;
        for (std::size_t r = 0; r < d; ++r) w.spanning.push_back(m.row(r));
        w.basis = m;
        w.dim = d;
        found[k].push_back(std::move(w));
      }
      std::size_t c = 0;
      while (c < idx.size() && ++idx[c] == values.size()) idx[c++] = 0;
      if (c == idx.size()) break;
    }
  });
  std::vector<SubalgebraWitness> out;
  for (auto& f : found)
    for (auto& w : f) out.push_back(std::move(w));
  return out;
}

FamilyMatchReport subalgebra_cross_check(const std::string& kind, const FieldValue& alpha, const FieldValue& t, std::size_t d,
                                         const SearchBudget& budget) {
  SuperAlgebra a = family_algebra(kind, alpha, t);
  const Field& F = a.field();
  FieldValue half = F.parse("1/2");
  bool is_half = kind == "k3h" || kind == "dth" || (F.embed(alpha) - half).is_zero();
  FamilyMatchReport rep;
  rep.dim = d;
  std::set<std::string> instances;
  for (const auto& f : subalgebra_families()) {
    if (f.kind != kind || f.dim != d || !alpha_matches(f.alpha, is_half)) continue;
    bool t_free = kind == "k3" || kind == "k3h";
    if (!t_free && !t_matches(f.t, F.embed(t))) continue;
    ++rep.applicable_families;
    auto values = field_elements(F, f.nonzero_params);
    std::vector<std::size_t> idx(f.params.size(), 0);
    while (true) {
      std::map<std::string, FieldValue> b{{"a", F.embed(alpha)}, {"t", F.embed(t)}};
      for (std::size_t k = 0; k < idx.size(); ++k) b[f.params[k]] = values[idx[k]];
      if (auto vecs = family_instance(f, a, b)) {
        auto w = make_witness(a, *vecs);
        if (w.dim == d) instances.insert(matrix_key(w.basis));
      }
      std::size_t k = 0;
      while (k < idx.size() && ++idx[k] == values.size()) idx[k++] = 0;
      if (k == idx.size()) break;
    }
  }
  auto found = enumerate_subalgebras(a, d, budget);
  rep.found = found.size();
  for (const auto& w : found) {
    if (instances.count(matrix_key(w.basis))) {
      ++rep.matched;
    } else {
      rep.unmatched.push_back(witness_text(a, w.basis));
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// isomorphisms

namespace {

std::vector<Vec> block_vectors(const SuperAlgebra& b, unsigned parity, const std::vector<FieldValue>& values) {
  std::vector<std::size_t> slots;
  for (std::size_t k = 0; k < b.dim(); ++k)
    if (b.parity(k) == parity) slots.push_back(k);
  std::vector<Vec> out;
  std::vector<std::size_t> idx(slots.size(), 0);
  while (true) {
    Vec v = b.zero();
    bool nonzero = false;
    for (std::size_t s = 0; s < slots.size(); ++s) {
      v[slots[s]] = values[idx[s]];
      nonzero |= !values[idx[s]].is_zero();
    }
    if (nonzero) out.push_back(std::move(v));
    std::size_t s = 0;
    while (s < idx.size() && ++idx[s] == values.size()) idx[s++] = 0;
    if (s == idx.size()) break;
  }
  return out;
}

struct IsoSearch {
  const SuperAlgebra& a;
  const SuperAlgebra& b;
  bool first_only;
  std::uint64_t budget;
  std::vector<std::vector<Vec>> candidates;                  // per basis index
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> checks;  // pairs ready at each level
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> stop{false};

  IsoSearch(const SuperAlgebra& a_, const SuperAlgebra& b_, bool first, std::uint64_t cap)
      : a(a_), b(b_), first_only(first), budget(cap) {
    auto values = field_elements(b.field(), false);
    std::vector<Vec> blocks[2] = {block_vectors(b, 0, values), block_vectors(b, 1, values)};
    for (std::size_t i = 0; i < a.dim(); ++i) candidates.push_back(blocks[a.parity(i)]);
    checks.resize(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
      for (std::size_t j = 0; j < a.dim(); ++j) {
        std::size_t ready = std::max(i, j);
        for (const auto& t : a.product(i, j)) ready = std::max(ready, t.index);
        checks[ready].emplace_back(i, j);
      }
  }

  bool consistent(const std::vector<Vec>& rows, std::size_t level) const {
    for (auto [i, j] : checks[level]) {
      Vec lhs = b.zero();
      for (const auto& t : a.product(i, j)) lhs = add(lhs, scale(t.coeff, rows[t.index]));
      if (!(b.multiply(rows[i], rows[j]) == lhs)) return false;
    }
    return true;
  }

  void descend(std::vector<Vec>& rows, std::size_t level, std::vector<LinearMap>& out) {
    if (stop.load(std::memory_order_relaxed)) return;
    if (level == a.dim()) {
      out.push_back({Matrix::from_rows(rows, b.field(), b.dim()), 0});
      if (first_only) stop = true;
      return;
    }
    for (const auto& v : candidates[level]) {
      if (nodes.fetch_add(1, std::memory_order_relaxed) >= budget)
        throw Error(ErrorKind::SearchTooLarge, "isomorphism search exceeded " + std::to_string(budget) + " nodes");
      rows[level] = v;
      if (!consistent(rows, level)) continue;
      std::vector<Vec> prefix(rows.begin(), rows.begin() + static_cast<long>(level) + 1);
      if (echelon_basis(prefix, b.field()).size() != level + 1) continue;
      descend(rows, level + 1, out);
      if (stop.load(std::memory_order_relaxed)) return;
    }
  }
};

}  // namespace

std::vector<LinearMap> enumerate_isomorphisms(const SuperAlgebra& a, const SuperAlgebra& b, bool first_only, const SearchBudget& budget) {
  if (a.field().kind() != Field::Kind::Prime || !(a.field() == b.field()))
    throw Error(ErrorKind::InvalidArgument, "isomorphism search needs both algebras over one prime field");
  if (a.dim() != b.dim()) return {};
  {
    auto pa = a.parities(), pb = b.parities();
    std::sort(pa.begin(), pa.end());
    std::sort(pb.begin(), pb.end());
    if (pa != pb) return {};
  }
  if (a.dim() == 0) return {LinearMap{Matrix(0, 0, a.field()), 0}};
  IsoSearch search(a, b, first_only, budget.max_candidates);
  const auto& first = search.candidates[0];
  std::vector<std::vector<LinearMap>> shards(first.size());
  parallel_for(first.size(), [&](std::size_t k) {
    if (search.stop.load()) return;
    std::vector<Vec> rows(a.dim());
    rows[0] = first[k];
    search.nodes.fetch_add(1, std::memory_order_relaxed);
    if (!search.consistent(rows, 0)) return;
    search.descend(rows, 1, shards[k]);
  });
  std::vector<LinearMap> out;
  for (auto& s : shards)
    for (auto& m : s) out.push_back(std::move(m));
  if (first_only && out.size() > 1) out.resize(1);
  return out;
}

std::vector<LinearMap> enumerate_automorphisms(const SuperAlgebra& a, const SearchBudget& budget) {
  return enumerate_isomorphisms(a, a, false, budget);
}

IsoSearchResult isomorphism_search(const SuperAlgebra& a, const SuperAlgebra& b, const SearchBudget& budget) {
  IsoSearchResult r;
  r.dims_a = derivation_space(a).dims();
  r.dims_b = derivation_space(b).dims();
  if (r.dims_a != r.dims_b) {
    r.invariant_shortcut = true;
    return r;
  }
  auto maps = enumerate_isomorphisms(a, b, true, budget);
  if (!maps.empty()) r.map = maps.front();
  return r;
}

bool is_group(const std::vector<LinearMap>& maps) {
  std::set<std::string> keys;
  for (const auto& m : maps) keys.insert(matrix_key(m.matrix));
  for (const auto& m : maps) {
    auto inv = inverse(m.matrix);
    if (!inv || !keys.count(matrix_key(*inv))) return false;
    for (const auto& n : maps)
      if (!keys.count(matrix_key(m.matrix * n.matrix))) return false;
  }
  return true;
}

bool automorphism_in_family(const std::string& kind, bool alpha_half, const LinearMap& phi) {
  const Matrix& m = phi.matrix;
  const Field& F = m.field();
  bool k3 = kind == "k3" || kind == "k3h";
  std::size_t evens = k3 ? 1 : 2;
  std::size_t z = evens, w = evens + 1;
  // even basis vectors fixed
  for (std::size_t i = 0; i < evens; ++i)
    for (std::size_t k = 0; k < m.cols(); ++k)
      if (!(m.at(i, k) == (i == k ? F.one() : F.zero()))) return false;
  FieldValue a = m.at(z, z), b = m.at(z, w), c = m.at(w, z), d = m.at(w, w);
  if (kind == "k3h" || kind == "dth") {
    bool sign = (a - F.one()).is_zero() || (a + F.one()).is_zero();
    return sign && c.is_zero() && d == a;
  }
  if (alpha_half) return (a * d - b * c - F.one()).is_zero();
  return b.is_zero() && c.is_zero() && !a.is_zero() && (a * d - F.one()).is_zero();
}

std::optional<SuperAlgebra> k3_normal_form(const FieldValue& alpha, const FieldValue& beta, const FieldValue& gamma) {
  Field F = joined(joined(alpha.field(), beta.field()), gamma.field());
  FieldValue al = F.embed(alpha), be = F.embed(beta), ga = F.embed(gamma);
  FieldValue one = F.one(), two = F.from_int(2);
  FieldValue disc = (one - two * al) * (one - two * al) + F.from_int(4) * be * ga;
  FieldValue half = F.parse("1/2");
  if (disc.is_zero()) {
    if (be.is_zero() && ga.is_zero()) return make_k3(al, F.zero(), F.zero());
    // e z - z/2 is a multiple of the eigenvector; the e-coefficient of
    // z (e z - z/2) is fixed up to squares, so the target needs a root of
    // its ratio to the same number in K3(1/2,1/2,0).
    auto invariant = [&](const SuperAlgebra& k) {
      for (std::size_t i : {1U, 2U}) {
        Element v = k.basis(i);
        Element nv = sub(k.multiply(k.basis(0), v), scale(half, v));
        if (!is_zero(nv)) return k.multiply(v, nv)[0];
      }
      return F.zero();
    };
    SuperAlgebra target = make_k3(half, half, F.zero());
    if (!field_sqrt(invariant(make_k3(al, be, ga)) / invariant(target))) return std::nullopt;
    return target;
  }
  auto root = field_sqrt(disc);
  if (!root) return std::nullopt;
  return make_k3((one + *root) / two, F.zero(), F.zero());
}

}  // namespace ncj
