#include "ncj/catalog.hpp"

namespace ncj {

namespace {

Field join_all(std::initializer_list<const FieldValue*> values) {
  Field f = Field::rationals();
  for (const FieldValue* v : values) f = f.join(v->field());
  return f;
}

}  // namespace

SuperAlgebra make_k3(const FieldValue& alpha, const FieldValue& beta, const FieldValue& gamma) {
  Field F = join_all({&alpha, &beta, &gamma});
  FieldValue a = F.embed(alpha), b = F.embed(beta), g = F.embed(gamma);
  FieldValue one = F.one(), two = F.from_int(2);
  SuperAlgebra k(F, {0, 1, 1}, {"e", "z", "w"});
  enum { e, z, w };
  k.add(e, e, e, one);
  k.add(e, z, z, a);
  k.add(e, z, w, b);
  k.add(e, w, z, g);
  k.add(e, w, w, one - a);
  k.add(z, e, z, one - a);
  k.add(z, e, w, -b);
  k.add(z, z, e, -(two * b));
  k.add(z, w, e, two * a);
  k.add(w, e, w, a);
  k.add(w, e, z, -g);
  k.add(w, z, e, -(two * (one - a)));
  k.add(w, w, e, two * g);
  return k;
}

SuperAlgebra make_dt(const FieldValue& t, const FieldValue& alpha, const FieldValue& beta, const FieldValue& gamma) {
  Field F = join_all({&t, &alpha, &beta, &gamma});
  FieldValue T = F.embed(t), a = F.embed(alpha), b = F.embed(beta), g = F.embed(gamma);
  FieldValue one = F.one(), two = F.from_int(2);
  SuperAlgebra d(F, {0, 0, 1, 1}, {"e1", "e2", "x", "y"});
  enum { e1, e2, x, y };
  d.add(e1, e1, e1, one);
  d.add(e1, x, x, a);
  d.add(e1, x, y, b);
  d.add(e1, y, x, g);
  d.add(e1, y, y, one - a);
  d.add(e2, e2, e2, one);
  d.add(e2, x, x, one - a);
  d.add(e2, x, y, -b);
  d.add(e2, y, x, -g);
  d.add(e2, y, y, a);
  d.add(x, e1, x, one - a);
  d.add(x, e1, y, -b);
  d.add(x, e2, x, a);
  d.add(x, e2, y, b);
  d.add(x, x, e1, -(two * b));
  d.add(x, x, e2, two * b * T);
  d.add(x, y, e1, two * a);
  d.add(x, y, e2, two * (one - a) * T);
  d.add(y, e1, x, -g);
  d.add(y, e1, y, a);
  d.add(y, e2, x, g);
  d.add(y, e2, y, one - a);
  d.add(y, x, e1, -(two * (one - a)));
  d.add(y, x, e2, -(two * a * T));
  d.add(y, y, e1, two * g);
  d.add(y, y, e2, -(two * g * T));
  return d;
}

// ---------------------------------------------------------------------------

UvfData uvf_with_zero_star(const Field& field, std::vector<unsigned> parity, const Matrix& form, std::vector<std::string> names) {
  if (names.empty())
    for (std::size_t i = 0; i < parity.size(); ++i) names.push_back("v" + std::to_string(i + 1));
  SuperAlgebra star(field, parity, names);
  return UvfData{std::move(parity), std::move(names), form, std::move(star)};
}

SuperAlgebra make_uvf(const UvfData& data) {
  const std::size_t m = data.parity.size();
  if (data.form.rows() != m || data.form.cols() != m) throw Error(ErrorKind::SizeMismatch, "form size");
  if (data.star.dim() != m || data.star.parities() != data.parity) throw Error(ErrorKind::SizeMismatch, "star product space");
  Field F = data.form.field().join(data.star.field());
  const Matrix& f = data.form;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      const FieldValue& v = f.at(i, j);
      if (data.parity[i] != data.parity[j]) {
        if (!v.is_zero()) throw Error(ErrorKind::FormNotSupersymmetric, "even and odd parts are not orthogonal");
      } else if (data.parity[i] == 0 ? !(v == f.at(j, i)) : !(v == -f.at(j, i))) {
        throw Error(ErrorKind::FormNotSupersymmetric, "form is not symmetric on V0 and skew on V1");
      }
    }
  if (m > 0 && determinant(f).is_zero()) throw Error(ErrorKind::FormDegenerate, "form is degenerate");
  const SuperAlgebra& s = data.star;
  if (!s.grading_violations().empty()) throw Error(ErrorKind::StarNotAnticommutative, "star product is not graded");
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      Element xy = s.multiply(s.basis(i), s.basis(j));
      Element yx = s.multiply(s.basis(j), s.basis(i));
      Element res = (data.parity[i] & data.parity[j]) ? sub(xy, yx) : add(xy, yx);
      if (!is_zero(res)) throw Error(ErrorKind::StarNotAnticommutative, "star product is not superanticommutative");
    }
  auto form_value = [&](const Element& x, std::size_t k) {
    FieldValue acc = F.zero();
    for (std::size_t i = 0; i < m; ++i)
      if (!x[i].is_zero()) acc += x[i] * f.at(i, k);
    return acc;
  };
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      Element xy = s.multiply(s.basis(i), s.basis(j));
      for (std::size_t k = 0; k < m; ++k) {
        Element yz = s.multiply(s.basis(j), s.basis(k));
        FieldValue rhs = F.zero();
        for (std::size_t l = 0; l < m; ++l)
          if (!yz[l].is_zero()) rhs += f.at(i, l) * yz[l];
        if (!(form_value(xy, k) == rhs)) throw Error(ErrorKind::StarNotCompatible, "f(x*y, z) != f(x, y*z)");
      }
    }
  std::vector<unsigned> parity{0};
  parity.insert(parity.end(), data.parity.begin(), data.parity.end());
  std::vector<std::string> names{"1"};
  names.insert(names.end(), data.names.begin(), data.names.end());
  SuperAlgebra u(F, parity, names);
  u.add(0, 0, 0, F.one());
  for (std::size_t i = 0; i < m; ++i) {
    u.add(0, i + 1, i + 1, F.one());
    u.add(i + 1, 0, i + 1, F.one());
    for (std::size_t j = 0; j < m; ++j) {
      u.add(i + 1, j + 1, 0, f.at(i, j));
      for (const auto& t : s.product(i, j)) u.add(i + 1, j + 1, t.index + 1, t.coeff);
    }
  }
  return u;
}

// ---------------------------------------------------------------------------

namespace {

std::string mono_name(Mask m) {
  if (m == 0) return "1";
  std::string s;
  for (unsigned i = 0; i < 32; ++i)
    if (m >> i & 1U) s += (s.empty() ? "x" : "^x") + std::to_string(i + 1);
  return s;
}

SuperAlgebra grassmann_shell(std::size_t n, const Field& field) {
  std::vector<unsigned> parity;
  std::vector<std::string> names;
  for (Mask m : monomial_order(n)) {
    parity.push_back(mask_parity(m));
    names.push_back(mono_name(m));
  }
  return SuperAlgebra(field, parity, names);
}

void put(SuperAlgebra& alg, std::size_t i, std::size_t j, const GrassmannElement& g, std::size_t offset) {
  for (const auto& [m, c] : g.terms()) alg.add(i, j, offset + monomial_position(g.n(), m), c);
}

}  // namespace

SuperAlgebra make_grassmann(std::size_t n, const Field& field) {
  SuperAlgebra g = grassmann_shell(n, field);
  const auto& order = monomial_order(n);
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t j = 0; j < order.size(); ++j) {
      int s = merge_sign(order[i], order[j]);
      if (s) g.add(i, j, monomial_position(n, order[i] | order[j]), field.from_int(s));
    }
  return g;
}

SuperAlgebra grassmann_bracket(std::size_t n, const Field& field) {
  SuperAlgebra g = grassmann_shell(n, field);
  const auto& order = monomial_order(n);
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t j = 0; j < order.size(); ++j) {
      auto a = GrassmannElement::monomial(n, order[i], field.one(), field);
      auto b = GrassmannElement::monomial(n, order[j], field.one(), field);
      put(g, i, j, poisson_grassmann(a, b), 0);
    }
  return g;
}

std::size_t jgamma_index(std::size_t n, Mask m, bool barred) {
  return monomial_position(n, m) + (barred ? (std::size_t(1) << n) : 0);
}

SuperAlgebra make_j_gamma_A(std::size_t n, const GrassmannElement& A) {
  if (A.n() != n) throw Error(ErrorKind::SizeMismatch, "A lives in another Grassmann algebra");
  auto pa = A.parity();
  if (!pa || *pa != 0) throw Error(ErrorKind::AOdd, "A must be even");
  const Field& F = A.field();
  const auto& order = monomial_order(n);
  const std::size_t half = order.size();
  std::vector<unsigned> parity;
  std::vector<std::string> names;
  for (Mask m : order) {
    parity.push_back(mask_parity(m));
    names.push_back(mono_name(m));
  }
  for (Mask m : order) {
    parity.push_back(mask_parity(m) ^ 1U);
    names.push_back("bar(" + mono_name(m) + ")");
  }
  SuperAlgebra j(F, parity, names);
  for (std::size_t ia = 0; ia < half; ++ia)
    for (std::size_t ib = 0; ib < half; ++ib) {
      auto a = GrassmannElement::monomial(n, order[ia], F.one(), F);
      auto b = GrassmannElement::monomial(n, order[ib], F.one(), F);
      GrassmannElement ab = gr_mul(a, b);
      bool b_odd = mask_parity(order[ib]) != 0;
      GrassmannElement signed_ab = b_odd ? -ab : ab;
      put(j, ia, ib, ab, 0);
      put(j, half + ia, ib, signed_ab, half);
      put(j, ia, half + ib, ab, half);
      GrassmannElement br = poisson_grassmann(a, b);
      put(j, half + ia, half + ib, b_odd ? -br : br, 0);
      if (!A.is_zero()) put(j, half + ia, half + ib, gr_mul(signed_ab, A), 0);
    }
  return j;
}

SuperAlgebra make_j_gamma(std::size_t n, const Field& field) { return make_j_gamma_A(n, GrassmannElement(n, field)); }

// ---------------------------------------------------------------------------

std::vector<std::vector<GrassmannElement>> diagonal_matrix(const std::vector<GrassmannElement>& diag) {
  if (diag.empty()) return {};
  std::size_t n = diag.size();
  std::vector<std::vector<GrassmannElement>> a(n, std::vector<GrassmannElement>(n, GrassmannElement(n, diag.front().field())));
  for (std::size_t i = 0; i < n; ++i) a[i][i] = diag[i];
  return a;
}

SuperAlgebra gamma_nd_bracket(std::size_t n, const std::vector<std::vector<GrassmannElement>>& a) {
  if (a.size() != n) throw Error(ErrorKind::SizeMismatch, "coefficient matrix size");
  Field F = Field::rationals();
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != n) throw Error(ErrorKind::SizeMismatch, "coefficient matrix size");
    for (std::size_t j = 0; j < n; ++j) {
      const auto& e = a[i][j];
      if (e.n() != n) throw Error(ErrorKind::SizeMismatch, "coefficient rank");
      auto p = e.parity();
      if (!p || *p != 0) throw Error(ErrorKind::BracketNotPoisson, "coefficient a_" + std::to_string(i + 1) + std::to_string(j + 1) + " is not even");
      if (!(e == a[j][i])) throw Error(ErrorKind::BracketNotPoisson, "coefficient matrix is not symmetric");
      F = F.join(e.field());
    }
  }
  SuperAlgebra g = grassmann_shell(n, F);
  const auto& order = monomial_order(n);
  for (std::size_t ia = 0; ia < order.size(); ++ia)
    for (std::size_t ib = 0; ib < order.size(); ++ib) {
      auto f = GrassmannElement::monomial(n, order[ia], F.one(), F);
      auto h = GrassmannElement::monomial(n, order[ib], F.one(), F);
      GrassmannElement sum(n, F);
      for (std::size_t i = 0; i < n; ++i) {
        GrassmannElement fi = right_partial(i, f);
        if (fi.is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) {
          if (a[i][j].is_zero()) continue;
          sum = sum + gr_mul(gr_mul(fi, right_partial(j, h)), a[i][j]);
        }
      }
      // (-1)^{p(g)+1}
      put(g, ia, ib, mask_parity(order[ib]) ? sum : -sum, 0);
    }
  return g;
}

SuperAlgebra make_gamma_nd(std::size_t n, const std::vector<std::vector<GrassmannElement>>& a) {
  SuperAlgebra bracket = gamma_nd_bracket(n, a);
  const Field& F = bracket.field();
  SuperAlgebra grass = make_grassmann(n, F);
  if (!is_superanticommutative(bracket)) throw Error(ErrorKind::BracketNotPoisson, "bracket is not superanticommutative");
  IdentityReport rep = check_poisson_bracket(grass, bracket);
  if (!rep.pass) throw Error(ErrorKind::BracketNotPoisson, "Leibniz rule fails for the extended bracket");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Element v = bracket.multiply(bracket.basis(monomial_position(n, Mask(1) << i)), bracket.basis(monomial_position(n, Mask(1) << j)));
      if (!(GrassmannElement::from_vector(n, v, F) == a[i][j])) throw Error(ErrorKind::BracketNotPoisson, "bracket does not restrict to a_ij on generators");
    }
  SuperAlgebra out = grass;
  for (std::size_t i = 0; i < grass.dim(); ++i)
    for (std::size_t j = 0; j < grass.dim(); ++j)
      for (const auto& t : bracket.product(i, j)) out.add(i, j, t.index, t.coeff);
  return out;
}

}  // namespace ncj
