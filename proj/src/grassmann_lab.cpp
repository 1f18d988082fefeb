#include "ncj/grassmann_lab.hpp"

#include "ncj/parallel.hpp"

namespace ncj {

namespace {

const Field& field_of(const WnDerivation& d) { return d.f.front().field(); }

Element jgamma_vector(const GrassmannElement& plain, const GrassmannElement& barred) {
  const std::size_t n = plain.n();
  Element v(std::size_t(2) << n, plain.field().zero());
  for (const auto& [m, c] : plain.terms()) v[jgamma_index(n, m, false)] = c;
  for (const auto& [m, c] : barred.terms()) v[jgamma_index(n, m, true)] = c;
  return v;
}

}  // namespace

LinearMap wn_to_map(const WnDerivation& d) {
  const Field& F = field_of(d);
  const auto& order = monomial_order(d.n);
  std::vector<Vec> rows;
  for (Mask m : order) rows.push_back(wn_apply(d, GrassmannElement::monomial(d.n, m, F.one(), F)).to_vector());
  return {Matrix::from_rows(rows, F), d.parity};
}

WnDerivation map_to_wn(std::size_t n, const LinearMap& m) {
  const Field& F = m.matrix.field();
  std::vector<GrassmannElement> f;
  for (std::size_t i = 0; i < n; ++i)
    f.push_back(GrassmannElement::from_vector(n, m.matrix.row(monomial_position(n, Mask(1) << i)), F));
  return WnDerivation::make(std::move(f), m.parity);
}

LinearMap jgamma_d1(const WnDerivation& d) {
  if (!is_bracket_derivation(d)) throw Error(ErrorKind::NotPoissonDerivation, "derivation does not preserve the Poisson-Grassmann bracket");
  const Field& F = field_of(d);
  const std::size_t n = d.n;
  std::vector<Vec> rows(std::size_t(2) << n);
  GrassmannElement zero(n, F);
  FieldValue sign = d.parity ? F.from_int(-1) : F.one();
  for (Mask m : monomial_order(n)) {
    GrassmannElement image = wn_apply(d, GrassmannElement::monomial(n, m, F.one(), F));
    rows[jgamma_index(n, m, false)] = jgamma_vector(image, zero);
    rows[jgamma_index(n, m, true)] = jgamma_vector(zero, sign * image);
  }
  return {Matrix::from_rows(rows, F), d.parity};
}

LinearMap jgamma_d2(const GrassmannElement& x) {
  auto p = x.parity();
  if (!p) throw Error(ErrorKind::NonHomogeneous, "D2 needs a homogeneous element");
  const Field& F = x.field();
  const std::size_t n = x.n();
  std::vector<Vec> rows(std::size_t(2) << n);
  GrassmannElement zero(n, F);
  for (Mask m : monomial_order(n)) {
    GrassmannElement a = GrassmannElement::monomial(n, m, F.one(), F);
    rows[jgamma_index(n, m, false)] = jgamma_vector(zero, zero);
    rows[jgamma_index(n, m, true)] = jgamma_vector(gr_mul(a, x), zero);
  }
  return {Matrix::from_rows(rows, F), (*p + 1) & 1U};
}

bool jgammaA_d1_criterion(const WnDerivation& d, const GrassmannElement& A) { return wn_apply(d, A).is_zero(); }

bool jgammaA_d1_direct(const WnDerivation& d, const GrassmannElement& A) {
  return is_derivation(make_j_gamma_A(d.n, A), jgamma_d1(d));
}

std::vector<WnDerivation> wn_kernel(std::size_t n, unsigned s, const Field& field,
                                    const std::function<std::vector<GrassmannElement>(const WnDerivation&)>& residual) {
  // unknowns: coefficient of monomial m (parity s+1) in f_k
  std::vector<std::pair<std::size_t, Mask>> unknowns;
  for (std::size_t k = 0; k < n; ++k)
    for (Mask m : monomial_order(n))
      if (mask_parity(m) == ((s + 1) & 1U)) unknowns.emplace_back(k, m);
  std::vector<Vec> columns(unknowns.size());
  parallel_for(unknowns.size(), [&](std::size_t u) {
    WnDerivation d = WnDerivation::zero(n, s, field);
    d.f[unknowns[u].first] = GrassmannElement::monomial(n, unknowns[u].second, field.one(), field);
    Vec col;
    for (const auto& g : residual(d)) {
      Vec v = g.to_vector();
      col.insert(col.end(), v.begin(), v.end());
    }
    columns[u] = std::move(col);
  });
  std::size_t rows = columns.empty() ? 0 : columns.front().size();
  Matrix sys(rows, unknowns.size(), field);
  for (std::size_t c = 0; c < unknowns.size(); ++c)
    for (std::size_t r = 0; r < rows; ++r)
      if (!columns[c][r].is_zero()) sys.set(r, c, columns[c][r]);
  std::vector<WnDerivation> out;
  for (const auto& v : kernel_basis(sys)) {
    WnDerivation d = WnDerivation::zero(n, s, field);
    for (std::size_t u = 0; u < unknowns.size(); ++u)
      if (!v[u].is_zero()) d.f[unknowns[u].first].add_term(unknowns[u].second, v[u]);
    out.push_back(std::move(d));
  }
  return out;
}

std::vector<WnDerivation> hn_space(std::size_t n, unsigned s, const Field& field) {
  return wn_kernel(n, s, field, [n](const WnDerivation& d) {
    std::vector<GrassmannElement> out;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) out.push_back(right_partial(j, d.f[i]) + right_partial(i, d.f[j]));
    return out;
  });
}

GrasDerResult gras_der_solve(std::size_t n, const CoeffMatrix& a, unsigned s) {
  SuperAlgebra full = make_gamma_nd(n, a);
  const Field& F = full.field();
  CoeffMatrix coeffs = a;
  for (auto& row : coeffs)
    for (auto& g : row) g = GrassmannElement::from_vector(n, g.to_vector(), F);
  FieldValue sign = s ? F.from_int(-1) : F.one();
  GrasDerResult out;
  out.basis = wn_kernel(n, s, F, [&](const WnDerivation& d) {
    std::vector<GrassmannElement> res;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) {
        GrassmannElement lhs(n, F), rhs(n, F);
        for (std::size_t k = 0; k < n; ++k) {
          lhs = lhs + gr_mul(right_partial(k, coeffs[i][j]), d.f[k]);
          rhs = rhs + gr_mul(right_partial(k, d.f[i]), coeffs[j][k]) + gr_mul(right_partial(k, d.f[j]), coeffs[i][k]);
        }
        res.push_back(lhs - sign * rhs);
      }
    return res;
  });
  for (const auto& d : out.basis)
    if (!is_derivation(full, wn_to_map(d))) out.verified = false;
  return out;
}

CentAnnReport cent_ann_inclusion_check(std::size_t n, const CoeffMatrix& a) {
  CentAnnReport out;
  SuperAlgebra full = make_gamma_nd(n, a);
  const Field& F = full.field();
  CoeffMatrix coeffs = a;
  for (auto& row : coeffs)
    for (auto& g : row) g = GrassmannElement::from_vector(n, g.to_vector(), F);
  std::vector<WnDerivation> ds;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<GrassmannElement> f;
    for (std::size_t j = 0; j < n; ++j) f.push_back(coeffs[i][j]);
    ds.push_back(WnDerivation::make(std::move(f), 1));
  }
  std::size_t dims[2], der[2];
  for (unsigned s = 0; s < 2; ++s) {
    auto left = wn_kernel(n, s, F, [&](const WnDerivation& d) {
      std::vector<GrassmannElement> res;
      for (const auto& di : ds)
        for (const auto& c : wn_bracket(di, d).f) res.push_back(c);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) res.push_back(wn_apply(d, coeffs[i][j]));
      return res;
    });
    auto solved = gras_der_solve(n, coeffs, s);
    dims[s] = left.size();
    der[s] = solved.basis.size();
    if (!solved.verified) {
      out.pass = false;
      out.notes.push_back("a solution is not a derivation of the full product");
    }
    std::vector<LinearMap> lm, sm;
    for (const auto& d : left) lm.push_back(wn_to_map(d));
    for (const auto& d : solved.basis) sm.push_back(wn_to_map(d));
    if (!span_contains(sm, lm, F)) {
      out.pass = false;
      out.notes.push_back(std::string(s ? "odd" : "even") + " part of Cent/Ann is not contained in Der");
    }
    for (const auto& m : lm)
      if (!is_derivation(full, m)) {
        out.pass = false;
        out.notes.push_back("a Cent/Ann member is not a derivation");
        break;
      }
  }
  out.cent_ann_dims = {dims[0], dims[1]};
  out.der_dims = {der[0], der[1]};
  return out;
}

}  // namespace ncj
