#include "ncj/derivations.hpp"

#include <map>

#include "ncj/parallel.hpp"

namespace ncj {

std::vector<std::pair<std::size_t, std::size_t>> parity_cells(const std::vector<unsigned>& parity, unsigned s) {
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t i = 0; i < parity.size(); ++i)
    for (std::size_t k = 0; k < parity.size(); ++k)
      if (parity[k] == ((parity[i] + s) & 1U)) cells.emplace_back(i, k);
  return cells;
}

LinearMap unpack_map(const std::vector<unsigned>& parity, unsigned s, const Vec& values, const Field& field) {
  auto cells = parity_cells(parity, s);
  if (values.size() != cells.size()) throw Error(ErrorKind::SizeMismatch, "map coordinates");
  LinearMap m{Matrix(parity.size(), parity.size(), field), s & 1U};
  for (std::size_t c = 0; c < cells.size(); ++c) m.matrix.set(cells[c].first, cells[c].second, values[c]);
  return m;
}

Vec pack_map(const std::vector<unsigned>& parity, const LinearMap& m) {
  Vec out;
  for (const auto& [i, k] : parity_cells(parity, m.parity)) out.push_back(m.matrix.at(i, k));
  return out;
}

Matrix derivation_system(const SuperAlgebra& a, unsigned s) {
  const std::size_t n = a.dim();
  auto cells = parity_cells(a.parities(), s);
  std::vector<long> idx(n * n, -1);
  for (std::size_t c = 0; c < cells.size(); ++c) idx[cells[c].first * n + cells[c].second] = static_cast<long>(c);
  const Field& F = a.field();
  std::vector<std::vector<Vec>> blocks(n * n);
  parallel_for(n * n, [&](std::size_t pair) {
    std::size_t i = pair / n, j = pair % n;
    std::vector<Vec> rows(n, Vec(cells.size(), F.zero()));
    std::vector<bool> touched(n, false);
    // (b_i b_j) d
    for (const auto& t : a.product(i, j))
      for (std::size_t k = 0; k < n; ++k)
        if (long col = idx[t.index * n + k]; col >= 0) {
          rows[k][static_cast<std::size_t>(col)] += t.coeff;
          touched[k] = true;
        }
    // - (-1)^{s p(j)} (b_i d) b_j
    bool flip = (s & a.parity(j)) != 0;
    for (std::size_t m = 0; m < n; ++m) {
      long col = idx[i * n + m];
      if (col < 0) continue;
      for (const auto& t : a.product(m, j)) {
        auto& e = rows[t.index][static_cast<std::size_t>(col)];
        e = flip ? e + t.coeff : e - t.coeff;
        touched[t.index] = true;
      }
    }
    // - b_i (b_j d)
    for (std::size_t m = 0; m < n; ++m) {
      long col = idx[j * n + m];
      if (col < 0) continue;
      for (const auto& t : a.product(i, m)) {
        auto& e = rows[t.index][static_cast<std::size_t>(col)];
        e = e - t.coeff;
        touched[t.index] = true;
      }
    }
    for (std::size_t k = 0; k < n; ++k)
      if (touched[k] && !is_zero(rows[k])) blocks[pair].push_back(std::move(rows[k]));
  });
  Matrix system(0, cells.size(), F);
  for (const auto& b : blocks)
    for (const auto& r : b) system.append_row(r);
  return system;
}

bool is_derivation(const SuperAlgebra& a, const LinearMap& d) {
  if (d.matrix.rows() != a.dim() || d.matrix.cols() != a.dim()) throw Error(ErrorKind::SizeMismatch, "map size");
  if (!respects_parity(a, d)) return false;
  std::vector<Element> images(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) images[i] = d.apply(a.basis(i));
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      Element lhs = d.apply(a.multiply(a.basis(i), a.basis(j)));
      Element t1 = a.multiply(images[i], a.basis(j));
      Element t2 = a.multiply(a.basis(i), images[j]);
      Element rhs = (d.parity & a.parity(j)) ? sub(t2, t1) : add(t1, t2);
      if (!is_zero(sub(lhs, rhs))) return false;
    }
  return true;
}

DerivationSpace derivation_space(const SuperAlgebra& a) {
  DerivationSpace out{a, {}, {}};
  for (unsigned s = 0; s < 2; ++s) {
    auto kernel = kernel_basis(derivation_system(a, s));
    auto& target = s ? out.odd : out.even;
    for (const auto& v : kernel) target.push_back(unpack_map(a.parities(), s, v, a.field()));
  }
  return out;
}

LinearMap der_bracket(const SuperAlgebra& a, const LinearMap& d1, const LinearMap& d2) {
  if (!is_derivation(a, d1) || !is_derivation(a, d2)) throw Error(ErrorKind::NotDerivation, "bracket argument is not a derivation");
  return super_bracket(d1, d2);
}

namespace {

Vec flatten(const LinearMap& m) {
  Vec v;
  v.reserve(m.matrix.rows() * m.matrix.cols());
  for (std::size_t i = 0; i < m.matrix.rows(); ++i)
    for (std::size_t j = 0; j < m.matrix.cols(); ++j) v.push_back(m.matrix.at(i, j));
  return v;
}

std::size_t span_rank(const std::vector<LinearMap>& maps, const Field& field) {
  std::vector<Vec> rows;
  for (const auto& m : maps) rows.push_back(flatten(m));
  return echelon_basis(rows, field).size();
}

}  // namespace

std::optional<Vec> map_coordinates(const std::vector<LinearMap>& basis, const LinearMap& m, const Field& field) {
  std::vector<Vec> span;
  for (const auto& b : basis) span.push_back(flatten(b));
  return coordinates_in_span(span, flatten(m), field);
}

bool span_contains(const std::vector<LinearMap>& b, const std::vector<LinearMap>& a, const Field& field) {
  for (const auto& m : a)
    if (!map_coordinates(b, m, field)) return false;
  return true;
}

bool same_span(const std::vector<LinearMap>& a, const std::vector<LinearMap>& b, const Field& field) {
  std::size_t ra = span_rank(a, field), rb = span_rank(b, field);
  if (ra != rb) return false;
  std::vector<LinearMap> both = a;
  both.insert(both.end(), b.begin(), b.end());
  return span_rank(both, field) == ra;
}

ClosureReport closure_check(const DerivationSpace& d) {
  const SuperAlgebra& a = d.algebra;
  const Field& F = a.field();
  std::vector<LinearMap> all = d.even;
  all.insert(all.end(), d.odd.begin(), d.odd.end());
  std::vector<unsigned> parity(d.even.size(), 0);
  parity.resize(all.size(), 1);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < all.size(); ++i) names.push_back((i < d.even.size() ? "D" : "O") + std::to_string(i < d.even.size() ? i + 1 : i - d.even.size() + 1));
  ClosureReport report;
  report.structure = SuperAlgebra(F, parity, names);
  for (const auto& m : all)
    if (!is_derivation(a, m)) {
      report.closed = false;
      report.notes.push_back("basis map is not a derivation");
      return report;
    }
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = 0; j < all.size(); ++j) {
      LinearMap br = super_bracket(all[i], all[j]);
      unsigned p = br.parity;
      if (!is_derivation(a, br)) {
        report.closed = false;
        report.notes.push_back("bracket of " + names[i] + " and " + names[j] + " is not a derivation");
        continue;
      }
      auto coords = map_coordinates(d.part(p), br, F);
      if (!coords) {
        report.closed = false;
        report.notes.push_back("bracket of " + names[i] + " and " + names[j] + " leaves the span");
        continue;
      }
      std::size_t offset = p ? d.even.size() : 0;
      for (std::size_t k = 0; k < coords->size(); ++k) report.structure.add(i, j, offset + k, (*coords)[k]);
    }
  // super Jacobi: [a,[b,c]] = [[a,b],c] + (-1)^{ab}[b,[a,c]]
  const SuperAlgebra& L = report.structure;
  for (std::size_t i = 0; i < L.dim(); ++i)
    for (std::size_t j = 0; j < L.dim(); ++j)
      for (std::size_t k = 0; k < L.dim(); ++k) {
        Element x = L.basis(i), y = L.basis(j), z = L.basis(k);
        Element lhs = L.multiply(x, L.multiply(y, z));
        Element t1 = L.multiply(L.multiply(x, y), z);
        Element t2 = L.multiply(y, L.multiply(x, z));
        Element rhs = (L.parity(i) & L.parity(j)) ? sub(t1, t2) : add(t1, t2);
        if (!is_zero(sub(lhs, rhs))) {
          report.jacobi = false;
        }
      }
  if (!is_superanticommutative(L)) {
    report.jacobi = false;
    report.notes.push_back("bracket is not superanticommutative");
  }
  return report;
}

namespace {

LinearMap combination(const std::vector<LinearMap>& basis, const Vec& coeffs, const Field& F) {
  LinearMap out{Matrix(basis.front().matrix.rows(), basis.front().matrix.cols(), F), basis.front().parity};
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (!coeffs[i].is_zero()) out.matrix = out.matrix + coeffs[i] * basis[i].matrix;
  return out;
}

}  // namespace

std::optional<Sl2Triple> find_sl2_triple(const SuperAlgebra& a, const std::vector<LinearMap>& even_part) {
  if (even_part.size() != 3) throw Error(ErrorKind::WrongDimension, "need a 3-dimensional even part, got " + std::to_string(even_part.size()));
  const Field& F = a.field();
  // ad of basis element i: row j holds the coordinates of [D_i, D_j]
  std::vector<Matrix> ad(3, Matrix(3, 3, F));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      auto c = map_coordinates(even_part, super_bracket(even_part[i], even_part[j]), F);
      if (!c) return std::nullopt;
      for (std::size_t k = 0; k < 3; ++k) ad[i].set(j, k, (*c)[k]);
    }
  std::vector<Vec> candidates;
  for (int total = 1; total <= 6; ++total)
    for (int c0 = -2; c0 <= 2; ++c0)
      for (int c1 = -2; c1 <= 2; ++c1)
        for (int c2 = -2; c2 <= 2; ++c2)
          if (std::abs(c0) + std::abs(c1) + std::abs(c2) == total) candidates.push_back({F.from_int(c0), F.from_int(c1), F.from_int(c2)});
  for (const auto& c : candidates) {
    Matrix M = c[0] * ad[0] + c[1] * ad[1] + c[2] * ad[2];
    FieldValue tr = M.at(0, 0) + M.at(1, 1) + M.at(2, 2);
    if (!tr.is_zero() || !determinant(M).is_zero()) continue;
    FieldValue minors = M.at(0, 0) * M.at(1, 1) - M.at(0, 1) * M.at(1, 0) + M.at(0, 0) * M.at(2, 2) - M.at(0, 2) * M.at(2, 0) +
                        M.at(1, 1) * M.at(2, 2) - M.at(1, 2) * M.at(2, 1);
    FieldValue mu2 = -minors;
    if (mu2.is_zero()) continue;
    auto mu = field_sqrt(mu2);
    if (!mu) continue;
    FieldValue scale_h = F.from_int(2) / *mu;
    Matrix H = scale_h * M;  // ad of h, rows are images
    auto eigen = [&](long lambda) {
      Matrix shifted = H.transpose() - F.from_int(lambda) * Matrix::identity(3, F);
      return kernel_basis(shifted);
    };
    auto ev = eigen(2), fv = eigen(-2);
    if (ev.size() != 1 || fv.size() != 1) continue;
    Vec hc = {scale_h * c[0], scale_h * c[1], scale_h * c[2]};
    LinearMap h = combination(even_part, hc, F);
    LinearMap e = combination(even_part, ev[0], F);
    LinearMap f = combination(even_part, fv[0], F);
    auto kappa = map_coordinates({h}, super_bracket(e, f), F);
    if (!kappa || (*kappa)[0].is_zero()) continue;
    f.matrix = (*kappa)[0].inv() * f.matrix;
    if (!(super_bracket(h, e).matrix == F.from_int(2) * e.matrix)) continue;
    if (!(super_bracket(h, f).matrix == F.from_int(-2) * f.matrix)) continue;
    if (!(super_bracket(e, f).matrix == h.matrix)) continue;
    return Sl2Triple{e, h, f};
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------

namespace {

// Rows of the form condition f(wd, v) + (-1)^{s (p(w)+1)} f(w, vd) = 0, i.e.
// f(wd,v) = -f(w,vd) for even d; for odd d the sign is (-1)^{p(w)}.
Matrix lieosp_system(const Field& F, const std::vector<unsigned>& vp, const Matrix& form, unsigned s) {
  auto cells = parity_cells(vp, s);
  const std::size_t m = vp.size();
  Matrix sys(0, cells.size(), F);
  for (std::size_t w = 0; w < m; ++w)
    for (std::size_t v = 0; v < m; ++v) {
      Vec row(cells.size(), F.zero());
      bool flip = (s & (vp[w] ^ 1U)) != 0;
      for (std::size_t c = 0; c < cells.size(); ++c) {
        auto [i, l] = cells[c];
        if (i == w) row[c] += form.at(l, v);
        if (i == v) row[c] = flip ? row[c] - form.at(w, l) : row[c] + form.at(w, l);
      }
      if (!is_zero(row)) sys.append_row(row);
    }
  return sys;
}

std::vector<LinearMap> kernel_maps(const Matrix& sys, const std::vector<unsigned>& parity, unsigned s, const Field& F) {
  std::vector<LinearMap> out;
  for (const auto& v : kernel_basis(sys)) out.push_back(unpack_map(parity, s, v, F));
  return out;
}

// V-block of maps on F + V; records whether each kills the unit and preserves V.
std::vector<LinearMap> restrict_to_v(const std::vector<LinearMap>& maps, bool& clean) {
  std::vector<LinearMap> out;
  for (const auto& d : maps) {
    std::size_t n = d.matrix.rows();
    LinearMap r{Matrix(n - 1, n - 1, d.matrix.field()), d.parity};
    for (std::size_t i = 0; i < n; ++i) {
      if (!d.matrix.at(0, i).is_zero() || !d.matrix.at(i, 0).is_zero()) clean = false;
    }
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t j = 1; j < n; ++j) r.matrix.set(i - 1, j - 1, d.matrix.at(i, j));
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

LinearMap extend_by_unit(const LinearMap& m) {
  std::size_t n = m.matrix.rows() + 1;
  LinearMap out{Matrix(n, n, m.matrix.field()), m.parity};
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = 1; j < n; ++j) out.matrix.set(i, j, m.matrix.at(i - 1, j - 1));
  return out;
}

std::vector<LinearMap> lieosp_solutions(const Field& field, const std::vector<unsigned>& v_parity, const Matrix& form, unsigned s) {
  return kernel_maps(lieosp_system(field, v_parity, form, s), v_parity, s, field);
}

SpaceComparison lieosp_check(const Field& field, const std::vector<unsigned>& v_parity, const Matrix& form) {
  SpaceComparison out;
  SuperAlgebra j = make_uvf(uvf_with_zero_star(field, v_parity, form));
  DerivationSpace d = derivation_space(j);
  out.left_dims = d.dims();
  std::size_t right[2];
  for (unsigned s = 0; s < 2; ++s) {
    bool clean = true;
    auto restricted = restrict_to_v(d.part(s), clean);
    if (!clean) {
      out.pass = false;
      out.notes.push_back("a derivation moves the unit or leaves V");
    }
    auto sol = lieosp_solutions(field, v_parity, form, s);
    right[s] = sol.size();
    if (!same_span(restricted, sol, field)) {
      out.pass = false;
      out.notes.push_back(std::string(s ? "odd" : "even") + " parts differ");
    }
    for (const auto& m : sol)
      if (!is_derivation(j, extend_by_unit(m))) {
        out.pass = false;
        out.notes.push_back("a form-compatible map is not a derivation");
        break;
      }
  }
  out.right_dims = {right[0], right[1]};
  return out;
}

SpaceComparison uvfstar_der_check(const UvfData& data) {
  SpaceComparison out;
  SuperAlgebra u = make_uvf(data);
  const Field& F = u.field();
  DerivationSpace d = derivation_space(u);
  out.left_dims = d.dims();
  std::size_t right[2];
  for (unsigned s = 0; s < 2; ++s) {
    bool clean = true;
    auto restricted = restrict_to_v(d.part(s), clean);
    if (!clean) {
      out.pass = false;
      out.notes.push_back("a derivation moves the unit or leaves V");
    }
    Matrix sys = lieosp_system(F, data.parity, data.form, s);
    Matrix star_sys = derivation_system(data.star.change_field(F), s);
    for (std::size_t r = 0; r < star_sys.rows(); ++r) sys.append_row(star_sys.row(r));
    auto inter = kernel_maps(sys, data.parity, s, F);
    right[s] = inter.size();
    if (!same_span(restricted, inter, F)) {
      out.pass = false;
      out.notes.push_back(std::string(s ? "odd" : "even") + " parts differ");
    }
    if (!span_contains(lieosp_solutions(F, data.parity, data.form, s), restricted, F)) {
      out.pass = false;
      out.notes.push_back("a derivation is not form-compatible");
    }
  }
  out.right_dims = {right[0], right[1]};
  return out;
}

}  // namespace ncj
