#include "doctest.h"
#include "ncj/catalog.hpp"
#include "ncj/derivations.hpp"

using namespace ncj;

namespace {

// Map given by the images of the basis vectors (row i = image of b_i).
LinearMap map_rows(const SuperAlgebra& a, unsigned parity, const std::vector<Element>& images) {
  return {Matrix::from_rows(images, a.field()), parity};
}

bool in_space(const DerivationSpace& d, const LinearMap& m) {
  return map_coordinates(d.part(m.parity), m, d.algebra.field()).has_value();
}

}  // namespace

TEST_CASE("derivations of K3") {
  Field q = Field::rationals();
  SuperAlgebra k = make_k3(q.parse("1/2"), q.zero(), q.zero());
  auto d = derivation_space(k);
  CHECK(d.dims() == std::pair<std::size_t, std::size_t>{3, 2});
  for (unsigned s : {0U, 1U})
    for (const auto& m : d.part(s)) {
      CHECK(is_derivation(k, m));
      CHECK(respects_parity(k, m));
    }
  CHECK(kernel_basis(derivation_system(k, 0)).size() == 3);
  CHECK(kernel_basis(derivation_system(k, 1)).size() == 2);

  // the generators from the classification, one parameter at a time
  Element e = k.basis(0), z = k.basis(1), w = k.basis(2), o = k.zero();
  FieldValue two = q.from_int(2);
  CHECK(in_space(d, map_rows(k, 0, {o, z, scale(q.from_int(-1), w)})));
  CHECK(in_space(d, map_rows(k, 0, {o, w, o})));
  CHECK(in_space(d, map_rows(k, 0, {o, o, z})));
  CHECK(in_space(d, map_rows(k, 1, {z, o, scale(two, e)})));
  CHECK(in_space(d, map_rows(k, 1, {w, scale(-two, e), o})));
  // a non-derivation
  CHECK(!is_derivation(k, map_rows(k, 0, {e, o, o})));
}

TEST_CASE("derivations of K3(a) and K3^{1/2}") {
  Field F = Field::rational_functions({"a"});
  SuperAlgebra k = make_k3(F.variable("a"), F.zero(), F.zero());
  auto d = derivation_space(k);
  CHECK(d.dims() == std::pair<std::size_t, std::size_t>{1, 0});
  CHECK(in_space(d, map_rows(k, 0, {k.zero(), k.basis(1), scale(F.from_int(-1), k.basis(2))})));

  // specializations away from 1/2 agree with the generic answer
  for (const char* v : {"2", "-3", "1/3", "7/5", "0"}) {
    Field q = Field::rationals();
    auto ds = derivation_space(make_k3(q.parse(v), q.zero(), q.zero()));
    CHECK(ds.dims() == d.dims());
  }

  Field q = Field::rationals();
  SuperAlgebra h = make_k3(q.parse("1/2"), q.parse("1/2"), q.zero());
  auto dh = derivation_space(h);
  CHECK(dh.dims() == std::pair<std::size_t, std::size_t>{1, 0});
  // the listed map w -> w is not a derivation; z -> w is
  CHECK(!is_derivation(h, map_rows(h, 0, {h.zero(), h.zero(), h.basis(2)})));
  CHECK(in_space(dh, map_rows(h, 0, {h.zero(), h.basis(2), h.zero()})));
}

TEST_CASE("derivations of D_t") {
  Field F = Field::rational_functions({"t"});
  FieldValue t = F.variable("t");
  SuperAlgebra d = make_dt(t, F.parse("1/2"), F.zero(), F.zero());
  auto ds = derivation_space(d);
  CHECK(ds.dims() == std::pair<std::size_t, std::size_t>{3, 2});
  Element e1 = d.basis(0), e2 = d.basis(1), x = d.basis(2), y = d.basis(3), o = d.zero();
  FieldValue two = F.from_int(2);
  CHECK(in_space(ds, map_rows(d, 0, {o, o, x, scale(F.from_int(-1), y)})));
  CHECK(in_space(ds, map_rows(d, 0, {o, o, y, o})));
  CHECK(in_space(ds, map_rows(d, 0, {o, o, o, x})));
  // odd generators, the last row read as the image of y
  CHECK(in_space(ds, map_rows(d, 1, {x, scale(F.from_int(-1), x), o, add(scale(two, e1), scale(-two * t, e2))})));
  CHECK(in_space(ds, map_rows(d, 1, {y, scale(F.from_int(-1), y), add(scale(-two, e1), scale(two * t, e2)), o})));

  Field G = Field::rational_functions({"a", "t"});
  auto da = derivation_space(make_dt(G.variable("t"), G.variable("a"), G.zero(), G.zero()));
  CHECK(da.dims() == std::pair<std::size_t, std::size_t>{1, 0});

  SuperAlgebra h = make_dt(t, F.parse("1/2"), F.parse("1/2"), F.zero());
  auto dh = derivation_space(h);
  CHECK(dh.dims() == std::pair<std::size_t, std::size_t>{1, 0});
  CHECK(!is_derivation(h, map_rows(h, 0, {o, o, o, y})));
  CHECK(in_space(dh, map_rows(h, 0, {o, o, y, o})));
}

TEST_CASE("closure and sl2") {
  Field q = Field::rationals();
  auto d = derivation_space(make_k3(q.parse("1/2"), q.zero(), q.zero()));
  auto c = closure_check(d);
  CHECK(c.closed);
  CHECK(c.jacobi);
  CHECK(c.structure.dim() == 5);
  for (const auto& a : d.odd)
    for (const auto& b : d.odd) CHECK(der_bracket(d.algebra, a, b).parity == 0);

  auto tr = find_sl2_triple(d.algebra, d.even);
  REQUIRE(tr);
  CHECK(super_bracket(tr->h, tr->e).matrix == q.from_int(2) * (tr->e.matrix));
  CHECK(super_bracket(tr->h, tr->f).matrix == q.from_int(-2) * (tr->f.matrix));
  CHECK(super_bracket(tr->e, tr->f).matrix == tr->h.matrix);

  auto dt = derivation_space(make_dt(q.from_int(3), q.parse("1/2"), q.zero(), q.zero()));
  CHECK(find_sl2_triple(dt.algebra, dt.even));
  CHECK(closure_check(dt).closed);

  // abelian: three commuting diagonal maps on a zero-product algebra
  SuperAlgebra zero(q, {0, 0, 0});
  std::vector<LinearMap> diag;
  for (std::size_t i = 0; i < 3; ++i) {
    Matrix m(3, 3, q);
    m.set(i, i, q.one());
    diag.push_back({m, 0});
  }
  CHECK(!find_sl2_triple(zero, diag));
  CHECK_THROWS_AS(find_sl2_triple(zero, {diag[0]}), Error);
}

TEST_CASE("odd derivations of the Kantor double bracket to even maps") {
  Field q = Field::rationals();
  auto d = derivation_space(make_j_gamma(2, q));
  CHECK(!d.odd.empty());
  for (const auto& m : d.odd) CHECK(der_bracket(d.algebra, m, m).parity == 0);
  CHECK(closure_check(d).closed);
}

TEST_CASE("Lieosp characterization") {
  Field q = Field::rationals();
  auto gram = [&](std::vector<std::vector<long>> rows) {
    Matrix m(rows.size(), rows.size(), q);
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < rows.size(); ++j) m.set(i, j, q.from_int(rows[i][j]));
    return m;
  };
  auto r10 = lieosp_check(q, {0}, gram({{1}}));
  CHECK(r10.pass);
  CHECK(r10.left_dims == std::pair<std::size_t, std::size_t>{0, 0});
  auto r20 = lieosp_check(q, {0, 0}, gram({{1, 0}, {0, 1}}));
  CHECK(r20.pass);
  CHECK(r20.left_dims == std::pair<std::size_t, std::size_t>{1, 0});
  auto r02 = lieosp_check(q, {1, 1}, gram({{0, 1}, {-1, 0}}));
  CHECK(r02.pass);
  CHECK(r02.left_dims == std::pair<std::size_t, std::size_t>{3, 0});
  auto r22 = lieosp_check(q, {0, 0, 1, 1}, gram({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}, {0, 0, -1, 0}}));
  CHECK(r22.pass);
  CHECK(r22.left_dims == std::pair<std::size_t, std::size_t>{4, 4});
  CHECK(r22.right_dims == r22.left_dims);
}

TEST_CASE("derivations of U(V,f,*)") {
  Field q = Field::rationals();
  Matrix f = Matrix::identity(1, q);
  auto zero_star = uvf_with_zero_star(q, {0}, f);
  auto rep = uvfstar_der_check(zero_star);
  CHECK(rep.pass);
  CHECK(rep.left_dims == std::pair<std::size_t, std::size_t>{0, 0});

  // V0 = span(u1,u2,u3) with the dot product and the cross product as star
  Matrix f3 = Matrix::identity(3, q);
  SuperAlgebra cross(q, {0, 0, 0}, {"u1", "u2", "u3"});
  cross.add(0, 1, 2, q.one());
  cross.add(1, 0, 2, q.from_int(-1));
  cross.add(1, 2, 0, q.one());
  cross.add(2, 1, 0, q.from_int(-1));
  cross.add(2, 0, 1, q.one());
  cross.add(0, 2, 1, q.from_int(-1));
  UvfData data{{0, 0, 0}, {"u1", "u2", "u3"}, f3, cross};
  SuperAlgebra u = make_uvf(data);
  CHECK(check_noncomm_jordan(u).pass);
  CHECK(check_jordan_super(plus_algebra(u)).pass);
  auto r = uvfstar_der_check(data);
  CHECK(r.pass);
  CHECK(r.left_dims == std::pair<std::size_t, std::size_t>{3, 0});
  auto lieosp = lieosp_check(q, {0, 0, 0}, f3);
  CHECK(lieosp.left_dims.first == 3);
}
