#include "ncj/superalgebra.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "ncj/parallel.hpp"

namespace ncj {

SuperAlgebra::SuperAlgebra(Field field, std::vector<unsigned> parity, std::vector<std::string> names)
    : field_(std::move(field)), parity_(std::move(parity)), names_(std::move(names)) {
  for (auto& p : parity_) {
    if (p > 1) throw Error(ErrorKind::InvalidArgument, "parity must be 0 or 1");
  }
  if (names_.empty()) {
    for (std::size_t i = 0; i < parity_.size(); ++i) names_.push_back("b" + std::to_string(i));
  }
  if (names_.size() != parity_.size()) throw Error(ErrorKind::SizeMismatch, "names vs parity length");
  table_.assign(parity_.size() * parity_.size(), {});
}

void SuperAlgebra::check_index(std::size_t i) const {
  if (i >= dim()) throw Error(ErrorKind::SizeMismatch, "basis index " + std::to_string(i) + " out of range");
}

std::size_t SuperAlgebra::index_of(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) throw Error(ErrorKind::InvalidArgument, "no basis vector named " + std::string(name));
  return static_cast<std::size_t>(it - names_.begin());
}

void SuperAlgebra::add(std::size_t i, std::size_t j, std::size_t k, const FieldValue& c) {
  check_index(i);
  check_index(j);
  check_index(k);
  FieldValue v = field_.embed(c);
  if (v.is_zero()) return;
  auto& terms = table_[i * dim() + j];
  auto it = std::lower_bound(terms.begin(), terms.end(), k, [](const Term& t, std::size_t x) { return t.index < x; });
  if (it != terms.end() && it->index == k) {
    it->coeff = it->coeff + v;
    if (it->coeff.is_zero()) terms.erase(it);
  } else {
    terms.insert(it, Term{k, std::move(v)});
  }
}

void SuperAlgebra::set_product(std::size_t i, std::size_t j, const Element& value) {
  check_index(i);
  check_index(j);
  if (value.size() != dim()) throw Error(ErrorKind::AlgebraMismatch, "product vector length");
  auto& terms = table_[i * dim() + j];
  terms.clear();
  for (std::size_t k = 0; k < dim(); ++k)
    if (!value[k].is_zero()) terms.push_back(Term{k, field_.embed(value[k])});
}

FieldValue SuperAlgebra::coeff(std::size_t i, std::size_t j, std::size_t k) const {
  for (const auto& t : product(i, j))
    if (t.index == k) return t.coeff;
  return field_.zero();
}

Element SuperAlgebra::basis(std::size_t i) const {
  check_index(i);
  Element e = zero();
  e[i] = field_.one();
  return e;
}

Element SuperAlgebra::zero() const { return Element(dim(), field_.zero()); }

Element SuperAlgebra::element(const std::vector<std::pair<std::size_t, FieldValue>>& terms) const {
  Element e = zero();
  for (const auto& [i, c] : terms) {
    check_index(i);
    e[i] = e[i] + field_.embed(c);
  }
  return e;
}

Element SuperAlgebra::multiply(const Element& x, const Element& y) const {
  if (x.size() != dim() || y.size() != dim()) throw Error(ErrorKind::AlgebraMismatch, "element length does not match algebra");
  Element out = zero();
  for (std::size_t i = 0; i < dim(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim(); ++j) {
      if (y[j].is_zero()) continue;
      const auto& terms = product(i, j);
      if (terms.empty()) continue;
      FieldValue s = x[i] * y[j];
      for (const auto& t : terms) out[t.index] += s * t.coeff;
    }
  }
  return out;
}

std::optional<unsigned> SuperAlgebra::parity_of(const Element& x) const {
  if (x.size() != dim()) throw Error(ErrorKind::AlgebraMismatch, "element length does not match algebra");
  std::optional<unsigned> p;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (x[i].is_zero()) continue;
    if (p && *p != parity_[i]) return std::nullopt;
    p = parity_[i];
  }
  return p.value_or(0);
}

std::vector<std::array<std::size_t, 3>> SuperAlgebra::grading_violations() const {
  std::vector<std::array<std::size_t, 3>> out;
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = 0; j < dim(); ++j)
      for (const auto& t : product(i, j))
        if (parity_[t.index] != ((parity_[i] + parity_[j]) & 1U)) out.push_back({i, j, t.index});
  return out;
}

bool SuperAlgebra::is_supercommutative() const {
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      const auto& a = product(i, j);
      const auto& b = product(j, i);
      if (a.size() != b.size()) return false;
      int s = sign_of(parity_[i] * parity_[j]);
      for (std::size_t n = 0; n < a.size(); ++n)
        if (a[n].index != b[n].index || !(a[n].coeff == (s == 1 ? b[n].coeff : -b[n].coeff))) return false;
    }
  for (std::size_t i = 0; i < dim(); ++i)
    if (parity_[i] == 1 && !product(i, i).empty()) return false;
  return true;
}

bool SuperAlgebra::is_zero_product() const {
  return std::all_of(table_.begin(), table_.end(), [](const auto& t) { return t.empty(); });
}

SuperAlgebra SuperAlgebra::change_field(const Field& target, const std::map<std::string, FieldValue>& bindings) const {
  SuperAlgebra out(target, parity_, names_);
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = 0; j < dim(); ++j)
      for (const auto& t : product(i, j)) out.add(i, j, t.index, t.coeff.substitute(target, bindings));
  return out;
}

SuperAlgebra SuperAlgebra::with_names(std::vector<std::string> names) const {
  SuperAlgebra out = *this;
  if (names.size() != dim()) throw Error(ErrorKind::SizeMismatch, "names length");
  out.names_ = std::move(names);
  return out;
}

std::string SuperAlgebra::element_to_string(const Element& x) const {
  std::string out;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero()) continue;
    std::string c = x[i].to_string();
    bool needs_paren = c.find_first_of("+-", 1) != std::string::npos || c.find('/') != std::string::npos;
    if (!out.empty()) out += " + ";
    if (x[i].is_one()) {
      out += names_[i];
    } else {
      out += (needs_paren ? "(" + c + ")" : c) + "*" + names_[i];
    }
  }
  return out.empty() ? "0" : out;
}

bool operator==(const SuperAlgebra& a, const SuperAlgebra& b) {
  if (a.parity_ != b.parity_) return false;
  for (std::size_t n = 0; n < a.table_.size(); ++n) {
    const auto& x = a.table_[n];
    const auto& y = b.table_[n];
    if (x.size() != y.size()) return false;
    for (std::size_t m = 0; m < x.size(); ++m)
      if (x[m].index != y[m].index || !(x[m].coeff == y[m].coeff)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// maps

LinearMap zero_map(const SuperAlgebra& a, unsigned parity) { return {Matrix(a.dim(), a.dim(), a.field()), parity}; }

LinearMap identity_map(const SuperAlgebra& a) { return {Matrix::identity(a.dim(), a.field()), 0}; }

LinearMap super_bracket(const LinearMap& p, const LinearMap& q) {
  Matrix pq = p.matrix * q.matrix;
  Matrix qp = q.matrix * p.matrix;
  Matrix m = (p.parity & q.parity) ? pq + qp : pq - qp;
  return {m, (p.parity + q.parity) & 1U};
}

bool respects_parity(const SuperAlgebra& a, const LinearMap& m) {
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (!m.matrix.at(i, j).is_zero() && a.parity(j) != ((a.parity(i) + m.parity) & 1U)) return false;
  return true;
}

std::pair<LinearMap, LinearMap> mult_operators(const SuperAlgebra& a, const Element& x) {
  auto px = a.parity_of(x);
  if (!px) throw Error(ErrorKind::NonHomogeneous, "operator of a mixed-parity element");
  LinearMap left{Matrix(a.dim(), a.dim(), a.field()), *px};
  LinearMap right{Matrix(a.dim(), a.dim(), a.field()), *px};
  for (std::size_t i = 0; i < a.dim(); ++i) {
    Element b = a.basis(i);
    Element r = a.multiply(b, x);
    Element l = a.multiply(x, b);
    bool flip = (*px & a.parity(i)) != 0;
    for (std::size_t k = 0; k < a.dim(); ++k) {
      right.matrix.set(i, k, r[k]);
      left.matrix.set(i, k, flip ? -l[k] : l[k]);
    }
  }
  return {left, right};
}

namespace {

// Splits an element into its even and odd parts.
std::pair<Element, Element> split(const SuperAlgebra& a, const Element& x) {
  Element e = a.zero(), o = a.zero();
  for (std::size_t i = 0; i < a.dim(); ++i) (a.parity(i) ? o : e)[i] = x[i];
  return {e, o};
}

Element signed_combo(const SuperAlgebra& a, const Element& x, const Element& y, bool symmetric) {
  Element out = a.zero();
  auto [xe, xo] = split(a, x);
  auto [ye, yo] = split(a, y);
  for (int px = 0; px < 2; ++px)
    for (int py = 0; py < 2; ++py) {
      const Element& u = px ? xo : xe;
      const Element& v = py ? yo : ye;
      if (is_zero(u) || is_zero(v)) continue;
      bool plus = symmetric == ((px & py) == 0);
      Element uv = a.multiply(u, v);
      Element vu = a.multiply(v, u);
      out = add(out, plus ? add(uv, vu) : sub(uv, vu));
    }
  return out;
}

}  // namespace

Element sym_product(const SuperAlgebra& a, const Element& x, const Element& y) { return signed_combo(a, x, y, true); }

Element super_commutator(const SuperAlgebra& a, const Element& x, const Element& y) { return signed_combo(a, x, y, false); }

namespace {

void require_odd_characteristic(const Field& f) {
  if (f.characteristic() == 2) throw Error(ErrorKind::CharacteristicTwo, "1/2 is needed");
}

}  // namespace

SuperAlgebra plus_algebra(const SuperAlgebra& a) {
  require_odd_characteristic(a.field());
  SuperAlgebra out(a.field(), a.parities(), a.names());
  FieldValue half = a.field().from_rational(mpq_class(1, 2));
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      int s = sign_of(a.parity(i) * a.parity(j));
      for (const auto& t : a.product(i, j)) out.add(i, j, t.index, half * t.coeff);
      for (const auto& t : a.product(j, i)) out.add(i, j, t.index, s == 1 ? half * t.coeff : -(half * t.coeff));
    }
  return out;
}

SuperAlgebra commutator_bracket(const SuperAlgebra& a) {
  SuperAlgebra out(a.field(), a.parities(), a.names());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      int s = sign_of(a.parity(i) * a.parity(j));
      for (const auto& t : a.product(i, j)) out.add(i, j, t.index, t.coeff);
      for (const auto& t : a.product(j, i)) out.add(i, j, t.index, s == 1 ? -t.coeff : t.coeff);
    }
  return out;
}

SuperAlgebra reconstruct(const SuperAlgebra& p, const SuperAlgebra& bracket) {
  require_odd_characteristic(p.field());
  if (p.parities() != bracket.parities()) throw Error(ErrorKind::AlgebraMismatch, "bracket lives on another space");
  SuperAlgebra out(p.field().join(bracket.field()), p.parities(), p.names());
  FieldValue half = out.field().from_rational(mpq_class(1, 2));
  for (std::size_t i = 0; i < p.dim(); ++i)
    for (std::size_t j = 0; j < p.dim(); ++j) {
      for (const auto& t : p.product(i, j)) out.add(i, j, t.index, t.coeff);
      for (const auto& t : bracket.product(i, j)) out.add(i, j, t.index, half * t.coeff);
    }
  return out;
}

// ---------------------------------------------------------------------------
// identity checks

namespace {

constexpr std::size_t kMaxListedFailures = 8;

// Sparse vectors (sorted, no zero entries) keep the identity loops cheap on
// algebras whose basis products have few terms.
using Sparse = std::vector<std::pair<std::size_t, FieldValue>>;

Sparse sp_basis(const SuperAlgebra& a, std::size_t i) { return {{i, a.field().one()}}; }

Sparse sp_from(const Element& x) {
  Sparse out;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero()) out.emplace_back(i, x[i]);
  return out;
}

Element sp_dense(const SuperAlgebra& a, const Sparse& x) {
  Element out = a.zero();
  for (const auto& [i, c] : x) out[i] = c;
  return out;
}

Sparse sp_mul(const SuperAlgebra& a, const Sparse& x, const Sparse& y) {
  std::map<std::size_t, FieldValue> acc;
  for (const auto& [i, xi] : x)
    for (const auto& [j, yj] : y) {
      const auto& terms = a.product(i, j);
      if (terms.empty()) continue;
      FieldValue s = xi * yj;
      for (const auto& t : terms) {
        auto it = acc.find(t.index);
        if (it == acc.end()) {
          acc.emplace(t.index, s * t.coeff);
        } else {
          it->second += s * t.coeff;
        }
      }
    }
  Sparse out;
  for (auto& [k, c] : acc)
    if (!c.is_zero()) out.emplace_back(k, std::move(c));
  return out;
}

// x + y, or x - y when `minus`
Sparse sp_comb(const Sparse& x, const Sparse& y, bool minus) {
  Sparse out;
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
      out.push_back(x[i++]);
    } else if (i == x.size() || y[j].first < x[i].first) {
      out.emplace_back(y[j].first, minus ? -y[j].second : y[j].second);
      ++j;
    } else {
      FieldValue c = minus ? x[i].second - y[j].second : x[i].second + y[j].second;
      if (!c.is_zero()) out.emplace_back(x[i].first, std::move(c));
      ++i;
      ++j;
    }
  }
  return out;
}

Sparse sp_neg(Sparse x) {
  for (auto& [i, c] : x) c = -c;
  return x;
}

// Operator applications on homogeneous vectors.  u has parity pu.
struct Ops {
  const SuperAlgebra& a;
  Sparse R(const Sparse& x, const Sparse& u) const { return sp_mul(a, u, x); }
  Sparse L(const Sparse& x, unsigned px, const Sparse& u, unsigned pu) const {
    Sparse v = sp_mul(a, x, u);
    return (px & pu) ? sp_neg(std::move(v)) : v;
  }
};

void record(IdentityReport& report, std::vector<std::size_t> idx, const SuperAlgebra& a, const Element& residual) {
  report.pass = false;
  ++report.failure_count;
  if (report.failures.size() < kMaxListedFailures) report.failures.push_back({std::move(idx), a.element_to_string(residual)});
}

// Runs fn(i) in parallel, each returning local failures, merged in index order.
template <typename Fn>
void run_indexed(IdentityReport& report, std::size_t n, const SuperAlgebra& a, Fn fn) {
  std::vector<std::vector<std::pair<std::vector<std::size_t>, Element>>> local(n);
  std::vector<std::size_t> counts(n, 0);
  parallel_for(n, [&](std::size_t i) { counts[i] = fn(i, local[i]); });
  for (std::size_t i = 0; i < n; ++i) {
    report.checked += counts[i];
    for (auto& [idx, res] : local[i]) record(report, std::move(idx), a, res);
  }
}

}  // namespace

IdentityReport check_flexible(const SuperAlgebra& a) {
  IdentityReport report{"flexible"};
  Ops op{a};
  const std::size_t n = a.dim();
  run_indexed(report, n, a, [&](std::size_t x, auto& out) {
    std::size_t count = 0;
    Sparse bx = sp_basis(a, x);
    unsigned px = a.parity(x);
    for (std::size_t y = 0; y < n; ++y) {
      Sparse by = sp_basis(a, y);
      unsigned py = a.parity(y);
      bool minus = (px & py) == 0;
      for (std::size_t u = 0; u < n; ++u) {
        Sparse bu = sp_basis(a, u);
        unsigned pu = a.parity(u);
        // [R_x, L_y] - [L_x, R_y] applied to u
        Sparse t1 = op.L(by, py, op.R(bx, bu), (pu + px) & 1U);
        Sparse t2 = op.R(bx, op.L(by, py, bu, pu));
        Sparse t3 = op.R(by, op.L(bx, px, bu, pu));
        Sparse t4 = op.L(bx, px, op.R(by, bu), (pu + py) & 1U);
        Sparse res = sp_comb(sp_comb(t1, t2, minus), sp_comb(t3, t4, minus), true);
        ++count;
        if (!res.empty()) out.emplace_back(std::vector<std::size_t>{x, y, u}, sp_dense(a, res));
      }
    }
    return count;
  });
  return report;
}

IdentityReport check_noncomm_jordan(const SuperAlgebra& a) {
  IdentityReport report = check_flexible(a);
  report.identity = "noncommutative Jordan";
  Ops op{a};
  const std::size_t n = a.dim();
  std::vector<Sparse> sym(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) sym[i * n + j] = sp_from(sym_product(a, a.basis(i), a.basis(j)));
  // [R_s, L_z] applied to u, with s of parity ps
  auto bracket_RL = [&](const Sparse& s, unsigned ps, std::size_t z, std::size_t u) {
    if (s.empty()) return Sparse{};
    Sparse bz = sp_basis(a, z), bu = sp_basis(a, u);
    unsigned pz = a.parity(z), pu = a.parity(u);
    Sparse t1 = op.L(bz, pz, op.R(s, bu), (pu + ps) & 1U);
    Sparse t2 = op.R(s, op.L(bz, pz, bu, pu));
    return sp_comb(t1, t2, !(ps & pz));
  };
  run_indexed(report, n, a, [&](std::size_t x, auto& out) {
    std::size_t count = 0;
    unsigned px = a.parity(x);
    for (std::size_t y = 0; y < n; ++y) {
      unsigned py = a.parity(y);
      for (std::size_t z = 0; z < n; ++z) {
        unsigned pz = a.parity(z);
        const Sparse& sxy = sym[x * n + y];
        const Sparse& syz = sym[y * n + z];
        const Sparse& szx = sym[z * n + x];
        if (sxy.empty() && syz.empty() && szx.empty()) {
          count += n;
          continue;
        }
        bool neg2 = (px * (py + pz)) & 1U;
        bool neg3 = (pz * (px + py)) & 1U;
        for (std::size_t u = 0; u < n; ++u) {
          Sparse r = bracket_RL(sxy, (px + py) & 1U, z, u);
          r = sp_comb(r, bracket_RL(syz, (py + pz) & 1U, x, u), neg2);
          r = sp_comb(r, bracket_RL(szx, (pz + px) & 1U, y, u), neg3);
          ++count;
          if (!r.empty()) out.emplace_back(std::vector<std::size_t>{x, y, z, u}, sp_dense(a, r));
        }
      }
    }
    return count;
  });
  return report;
}

IdentityReport check_jordan_super(const SuperAlgebra& a) {
  if (!a.is_supercommutative()) throw Error(ErrorKind::NotSupercommutative, "Jordan superidentity needs a supercommutative algebra");
  IdentityReport report{"Jordan"};
  const std::size_t n = a.dim();
  auto mul = [&](const Sparse& x, const Sparse& y) { return sp_mul(a, x, y); };
  std::vector<Sparse> basis(n), prod(n * n);
  for (std::size_t i = 0; i < n; ++i) basis[i] = sp_basis(a, i);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) prod[i * n + j] = mul(basis[i], basis[j]);
  run_indexed(report, n, a, [&](std::size_t ia, auto& out) {
    std::size_t count = 0;
    const Sparse& A = basis[ia];
    unsigned pa = a.parity(ia);
    for (std::size_t ib = 0; ib < n; ++ib) {
      const Sparse& B = basis[ib];
      unsigned pb = a.parity(ib);
      const Sparse& ab = prod[ia * n + ib];
      for (std::size_t ic = 0; ic < n; ++ic) {
        const Sparse& C = basis[ic];
        unsigned pc = a.parity(ic);
        const Sparse& bc = prod[ib * n + ic];
        const Sparse& ac = prod[ia * n + ic];
        Sparse acb = mul(ac, B);
        bool s_neg = (pa * pb + pa * pc + pb * pc) & 1U;
        bool bc_neg = (pb * pc) & 1U;
        bool ab_neg = (pa * pb) & 1U;
        bool r2_neg = (pa * pc + pb * pc) & 1U;
        for (std::size_t iu = 0; iu < n; ++iu) {
          const Sparse& U = basis[iu];
          const Sparse& ua = prod[iu * n + ia];
          const Sparse& uc = prod[iu * n + ic];
          const Sparse& ub = prod[iu * n + ib];
          Sparse lhs = sp_comb(sp_comb(mul(mul(ua, B), C), mul(mul(uc, B), A), s_neg), mul(U, acb), bc_neg);
          Sparse rhs = sp_comb(sp_comb(mul(ua, bc), mul(uc, ab), r2_neg), mul(ub, ac), ab_neg);
          Sparse res = sp_comb(lhs, rhs, true);
          ++count;
          if (!res.empty()) out.emplace_back(std::vector<std::size_t>{ia, ib, ic, iu}, sp_dense(a, res));
        }
      }
    }
    return count;
  });
  return report;
}

bool is_superanticommutative(const SuperAlgebra& bracket) {
  for (std::size_t i = 0; i < bracket.dim(); ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      Element x = bracket.multiply(bracket.basis(i), bracket.basis(j));
      Element y = bracket.multiply(bracket.basis(j), bracket.basis(i));
      // {a,b} = -(-1)^{ab}{b,a}
      Element res = (bracket.parity(i) & bracket.parity(j)) ? sub(x, y) : add(x, y);
      if (!is_zero(res)) return false;
    }
  return true;
}

IdentityReport check_poisson_bracket(const SuperAlgebra& p, const SuperAlgebra& bracket) {
  if (p.parities() != bracket.parities()) throw Error(ErrorKind::AlgebraMismatch, "bracket lives on another space");
  IdentityReport report{"Poisson"};
  const std::size_t n = p.dim();
  auto br = [&](const Element& x, const Element& y) { return bracket.multiply(x, y); };
  run_indexed(report, n, p, [&](std::size_t ia, auto& out) {
    std::size_t count = 0;
    Element A = p.basis(ia);
    for (std::size_t ib = 0; ib < n; ++ib) {
      Element B = p.basis(ib);
      Element ab = p.multiply(A, B);
      for (std::size_t ic = 0; ic < n; ++ic) {
        Element C = p.basis(ic);
        Element lhs = br(ab, C);
        Element t1 = p.multiply(br(A, C), B);
        Element t2 = p.multiply(A, br(B, C));
        if ((p.parity(ib) & p.parity(ic)) != 0) t1 = scale(FieldValue(-1L), t1);
        Element res = sub(lhs, add(t1, t2));
        ++count;
        if (!is_zero(res)) out.emplace_back(std::vector<std::size_t>{ia, ib, ic}, res);
      }
    }
    return count;
  });
  report.notes.push_back(is_superanticommutative(bracket) ? "superanticommutative" : "not superanticommutative");
  return report;
}

}  // namespace ncj
