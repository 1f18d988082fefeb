#include "doctest.h"
#include "ncj/catalog.hpp"
#include "ncj/superalgebra.hpp"

using namespace ncj;

namespace {

Field abg() { return Field::rational_functions({"a", "b", "g", "t"}); }

}  // namespace

TEST_CASE("K3 products") {
  Field F = abg();
  FieldValue a = F.variable("a"), b = F.variable("b"), g = F.variable("g");
  SuperAlgebra k = make_k3(a, b, g);
  CHECK(k.multiply(k.basis(1), k.basis(2)) == k.element({{0, F.from_int(2) * a}}));
  CHECK(k.multiply(k.basis(0), k.basis(0)) == k.basis(0));
  CHECK(k.multiply(k.basis(2), k.basis(1)) == k.element({{0, F.from_int(-2) * (F.one() - a)}}));
  CHECK(k.grading_violations().empty());
}

TEST_CASE("D_t products") {
  Field F = abg();
  FieldValue a = F.variable("a"), b = F.variable("b"), g = F.variable("g"), t = F.variable("t");
  SuperAlgebra d = make_dt(t, a, b, g);
  FieldValue two = F.from_int(2), one = F.one();
  CHECK(d.multiply(d.basis(3), d.basis(2)) == d.element({{0, -(two * (one - a))}, {1, -(two * a * t)}}));
  CHECK(d.multiply(d.basis(2), d.basis(3)) == d.element({{0, two * a}, {1, two * (one - a) * t}}));
  CHECK(d.grading_violations().empty());
}

TEST_CASE("multiplication operators") {
  Field F = abg();
  FieldValue a = F.variable("a"), b = F.variable("b"), g = F.variable("g");
  SuperAlgebra k = make_k3(a, b, g);
  auto [L, R] = mult_operators(k, k.basis(0));
  CHECK(R.apply(k.basis(1)) == k.element({{1, F.one() - a}, {2, -b}}));
  CHECK(L.apply(k.basis(1)) == k.element({{1, a}, {2, b}}));
  auto [L0, R0] = mult_operators(k, k.zero());
  CHECK(R0.matrix.is_zero());
  CHECK(L0.matrix.is_zero());
  CHECK_THROWS_AS(mult_operators(k, add(k.basis(0), k.basis(1))), Error);
}

TEST_CASE("symmetrized product and supercommutator in K3(a)") {
  Field F = Field::rational_functions({"a"});
  FieldValue a = F.variable("a");
  SuperAlgebra k = make_k3(a, F.zero(), F.zero());
  CHECK(super_commutator(k, k.basis(1), k.basis(2)) == k.element({{0, F.from_int(4) * a - 2}}));
  CHECK(sym_product(k, k.basis(1), k.basis(2)) == k.element({{0, F.from_int(2)}}));
  CHECK(is_zero(super_commutator(k, k.basis(0), k.basis(0))));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      Element sum = add(sym_product(k, k.basis(i), k.basis(j)), super_commutator(k, k.basis(i), k.basis(j)));
      CHECK(k.multiply(k.basis(i), k.basis(j)) == scale(F.parse("1/2"), sum));
    }
}

TEST_CASE("plus algebra of K3") {
  Field F = abg();
  SuperAlgebra k = make_k3(F.variable("a"), F.variable("b"), F.variable("g"));
  SuperAlgebra p = plus_algebra(k);
  CHECK(p.multiply(p.basis(0), p.basis(0)) == p.basis(0));
  CHECK(p.multiply(p.basis(1), p.basis(2)) == p.basis(0));
  CHECK(p.multiply(p.basis(0), p.basis(1)) == p.element({{1, F.parse("1/2")}}));
  CHECK(p.is_supercommutative());
  // independent of the parameters: equal to the plus algebra at (1/2, 0, 0)
  CHECK(p == plus_algebra(make_k3(F.parse("1/2"), F.zero(), F.zero())));
  CHECK(plus_algebra(p) == p);
}

TEST_CASE("identity checks on catalog algebras") {
  Field F = abg();
  FieldValue a = F.variable("a"), b = F.variable("b"), g = F.variable("g"), t = F.variable("t");
  SuperAlgebra k = make_k3(a, b, g);
  CHECK(check_flexible(k).pass);
  CHECK(check_noncomm_jordan(k).pass);
  SuperAlgebra d = make_dt(t, a, b, g);
  CHECK(check_noncomm_jordan(d).pass);
  CHECK(check_jordan_super(plus_algebra(k)).pass);
  CHECK(check_jordan_super(plus_algebra(d)).pass);
  CHECK(check_poisson_bracket(plus_algebra(k), commutator_bracket(k)).pass);
  CHECK(reconstruct(plus_algebra(k), commutator_bracket(k)) == k);
  CHECK(reconstruct(plus_algebra(d), commutator_bracket(d)) == d);
  CHECK_THROWS_AS(check_jordan_super(k), Error);
}

TEST_CASE("non-flexible toy algebra") {
  Field q = Field::rationals();
  SuperAlgebra t(q, {0, 0}, {"e", "f"});
  t.add(0, 1, 0, q.one());
  auto rep = check_flexible(t);
  CHECK(!rep.pass);
  CHECK(rep.failure_count > 0);
}

TEST_CASE("random algebra over GF(5) fails the noncommutative Jordan identity") {
  Field f = Field::prime(5);
  SuperAlgebra r(f, {0, 1});
  r.add(0, 0, 0, f.from_int(2));
  r.add(0, 1, 1, f.from_int(3));
  r.add(1, 0, 1, f.from_int(1));
  r.add(1, 1, 0, f.from_int(4));
  CHECK(!check_noncomm_jordan(r).pass);
}

TEST_CASE("Grassmann algebra is Jordan and its bracket is Poisson") {
  Field q = Field::rationals();
  SuperAlgebra g3 = make_grassmann(3, q);
  CHECK(g3.is_supercommutative());
  CHECK(check_jordan_super(g3).pass);
  CHECK(check_poisson_bracket(g3, grassmann_bracket(3, q)).pass);
  SuperAlgebra zero(q, g3.parities());
  CHECK(check_poisson_bracket(g3, zero).pass);
  CHECK(reconstruct(g3, zero) == g3);
}

TEST_CASE("D_t(1/2,0,0) has unit e1+e2") {
  Field F = Field::rational_functions({"t"});
  SuperAlgebra d = make_dt(F.variable("t"), F.parse("1/2"), F.zero(), F.zero());
  Element u = add(d.basis(0), d.basis(1));
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(d.multiply(u, d.basis(i)) == d.basis(i));
    CHECK(d.multiply(d.basis(i), u) == d.basis(i));
  }
}

TEST_CASE("D_0 contains K3 on (e1, x, y)") {
  Field F = abg();
  FieldValue a = F.variable("a"), b = F.variable("b"), g = F.variable("g");
  SuperAlgebra d = make_dt(F.zero(), a, b, g);
  SuperAlgebra k = make_k3(a, b, g);
  std::size_t map[3] = {0, 2, 3};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      Element kd = k.multiply(k.basis(i), k.basis(j));
      Element dd = d.multiply(d.basis(map[i]), d.basis(map[j]));
      Element lifted = d.zero();
      for (std::size_t m = 0; m < 3; ++m) lifted[map[m]] = kd[m];
      CHECK(dd == lifted);
    }
}
