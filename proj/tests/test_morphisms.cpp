#include <random>

#include "doctest.h"
#include "ncj/derivations.hpp"
#include "ncj/morphisms.hpp"

using namespace ncj;

namespace {

LinearMap rows(const SuperAlgebra& a, const std::vector<Element>& images) { return {Matrix::from_rows(images, a.field()), 0}; }

Element vec(const SuperAlgebra& a, std::vector<std::pair<std::string, FieldValue>> terms) {
  Element v = a.zero();
  for (auto& [name, c] : terms) v[a.index_of(name)] += c;
  return v;
}

std::size_t count_dim(const SuperAlgebra& a, std::size_t d) { return enumerate_subalgebras(a, d).size(); }

}  // namespace

TEST_CASE("homomorphism checks on K3(a)") {
  Field f = Field::rational_functions({"a", "g"});
  FieldValue g = f.variable("g"), one = f.one();
  SuperAlgebra k = make_k3(f.variable("a"), f.zero(), f.zero());
  CHECK(is_automorphism(k, identity_map(k)).pass);
  auto scaled = rows(k, {vec(k, {{"e", one}}), vec(k, {{"z", g}}), vec(k, {{"w", one / g}})});
  CHECK(is_automorphism(k, scaled).pass);
  auto bad = rows(k, {vec(k, {{"e", one}}), vec(k, {{"z", g}}), vec(k, {{"w", g}})});
  auto rep = is_homomorphism(k, k, bad);
  CHECK_FALSE(rep.pass);
  CHECK_FALSE(rep.residuals.empty());
  CHECK_FALSE(is_automorphism(k, zero_map(k, 0)).pass);
  auto mixed = rows(k, {vec(k, {{"z", one}}), vec(k, {{"e", one}}), vec(k, {{"w", one}})});
  CHECK_THROWS_AS(is_homomorphism(k, k, mixed), Error);
}

TEST_CASE("automorphism families with a side condition") {
  Field f = Field::rational_functions({"k", "g1", "g2", "g3", "g4"});
  FieldValue one = f.one(), k = f.variable("k");
  SuperAlgebra kh = make_k3(f.parse("1/2"), f.parse("1/2"), f.zero());
  for (long s : {1L, -1L}) {
    FieldValue sv = f.from_int(s);
    auto phi = rows(kh, {vec(kh, {{"e", one}}), vec(kh, {{"z", sv}, {"w", k}}), vec(kh, {{"w", sv}})});
    CHECK(is_automorphism(kh, phi).pass);
  }
  SuperAlgebra d = make_dt(f.from_int(2), f.parse("1/2"), f.zero(), f.zero());
  FieldValue g1 = f.variable("g1"), g2 = f.variable("g2"), g3 = f.variable("g3"), g4 = f.variable("g4");
  ParametricMap pm{Matrix::from_rows({vec(d, {{"e1", one}}), vec(d, {{"e2", one}}), vec(d, {{"x", g1}, {"y", g2}}),
                                      vec(d, {{"x", g3}, {"y", g4}})},
                                     f),
                   {{"g4", (one + g2 * g3) / g1}}};
  CHECK(is_automorphism(d, pm.resolved()).pass);
  CHECK_FALSE(is_automorphism(d, LinearMap{pm.matrix, 0}).pass);
}

TEST_CASE("subalgebra membership") {
  Field f = Field::rational_functions({"a"});
  FieldValue one = f.one();
  SuperAlgebra k = make_k3(f.variable("a"), f.zero(), f.zero());
  CHECK(is_subalgebra(k, make_witness(k, {vec(k, {{"e", one}}), vec(k, {{"z", one}})})));
  CHECK_FALSE(is_subalgebra(k, make_witness(k, {vec(k, {{"e", one}}), vec(k, {{"z", one}, {"w", one}})})));
  SuperAlgebra d = make_dt(f.from_int(3), f.variable("a"), f.zero(), f.zero());
  auto unit = make_witness(d, {vec(d, {{"e1", one}, {"e2", one}})});
  CHECK(is_subalgebra(d, unit));
  CHECK(is_graded(d, unit));
  CHECK_FALSE(is_graded(d, make_witness(d, {vec(d, {{"e1", one}, {"x", one}})})));
}

TEST_CASE("every registered family is closed") {
  for (const auto& fam : subalgebra_families()) {
    CAPTURE(fam.id);
    auto rep = verify_family_closure(fam.id);
    CHECK(rep.pass);
  }
  CHECK_THROWS_AS(find_family("nope"), Error);
  CHECK(find_family("k3/2/odd-line").shape() == "(e, g1*z + g2*w)");
}

TEST_CASE("subalgebra counts over GF(5)") {
  Field f = Field::prime(5);
  SuperAlgebra k2 = make_k3(f.from_int(2), f.zero(), f.zero());
  SuperAlgebra k3 = make_k3(f.from_int(3), f.zero(), f.zero());
  SuperAlgebra kh = make_k3(f.from_int(3), f.from_int(3), f.zero());
  CHECK(count_dim(k2, 1) == 11);
  CHECK(count_dim(k2, 2) == 2);
  CHECK(count_dim(k3, 1) == 31);
  CHECK(count_dim(k3, 2) == 6);
  CHECK(count_dim(kh, 1) == 6);
  CHECK(count_dim(kh, 2) == 1);
  SuperAlgebra d = make_dt(f.from_int(2), f.from_int(2), f.zero(), f.zero());
  CHECK(count_dim(d, 1) == 21);
  CHECK(count_dim(d, 2) == 15);
  CHECK(count_dim(d, 3) == 2);
  for (std::size_t dim : {1U, 2U, 3U})
    for (const auto& w : enumerate_subalgebras(d, dim)) CHECK(is_subalgebra(d, w));
  CHECK_THROWS_AS(enumerate_subalgebras(d, 2, SearchBudget{10}), Error);
}

TEST_CASE("enumerated K3 subalgebras match the families") {
  Field f = Field::prime(5);
  for (long alpha : {2L, 3L})
    for (std::size_t d : {1U, 2U}) {
      auto rep = subalgebra_cross_check("k3", f.from_int(alpha), f.zero(), d);
      CAPTURE(alpha);
      CAPTURE(d);
      CHECK(rep.matched == rep.found);
    }
  auto rep = subalgebra_cross_check("k3h", f.from_int(3), f.zero(), 1);
  CHECK(rep.matched == rep.found);
}

TEST_CASE("D_t at one half has the unit line and its odd partners") {
  Field f = Field::prime(5);
  SuperAlgebra d = make_dt(f.from_int(2), f.from_int(3), f.zero(), f.zero());
  auto unit = make_witness(d, {vec(d, {{"e1", f.one()}, {"e2", f.one()}})});
  CHECK(is_subalgebra(d, unit));
  auto rep = subalgebra_cross_check("dt", f.from_int(3), f.from_int(2), 1);
  CHECK(rep.found > 0);
}

TEST_CASE("automorphism counts over GF(5)") {
  Field f = Field::prime(5);
  struct Case {
    std::string kind;
    long alpha, t;
    std::size_t count;
  };
  for (const auto& c : std::vector<Case>{{"k3", 2, 0, 4}, {"k3", 3, 0, 120}, {"k3h", 3, 0, 10}, {"dt", 2, 2, 4}, {"dt", 3, 2, 120},
                                         {"dth", 3, 2, 10}}) {
    CAPTURE(c.kind);
    CAPTURE(c.alpha);
    SuperAlgebra a = family_algebra(c.kind, f.from_int(c.alpha), f.from_int(c.t));
    auto maps = enumerate_automorphisms(a);
    CHECK(maps.size() == c.count);
    CHECK(is_group(maps));
    for (const auto& m : maps) {
      CHECK(is_automorphism(a, m).pass);
      CHECK(automorphism_in_family(c.kind, c.alpha == 3, m));
    }
  }
}

TEST_CASE("D_t at t = -1 has swaps outside the fixed-idempotent shape") {
  Field f = Field::prime(5);
  SuperAlgebra a = family_algebra("dt", f.from_int(2), f.from_int(-1));
  auto maps = enumerate_automorphisms(a);
  CHECK(maps.size() == 8);
  CHECK(is_group(maps));
  std::size_t inside = 0;
  for (const auto& m : maps) inside += automorphism_in_family("dt", false, m);
  CHECK(inside == 4);
}

TEST_CASE("isomorphism search") {
  Field f = Field::prime(5);
  SuperAlgebra k2 = make_k3(f.from_int(2), f.zero(), f.zero());
  auto self = isomorphism_search(k2, k2);
  REQUIRE(self.map);
  CHECK(is_automorphism(k2, *self.map).pass);
  auto apart = isomorphism_search(k2, make_k3(f.from_int(3), f.zero(), f.zero()));
  CHECK(apart.invariant_shortcut);
  CHECK_FALSE(apart.map);
  CHECK(apart.dims_a != apart.dims_b);
  std::size_t checked = 0;
  for (long al = 0; al < 5; ++al)
    for (long be = 0; be < 5; ++be)
      for (long ga = 0; ga < 5; ga += 2) {
        FieldValue a = f.from_int(al), b = f.from_int(be), g = f.from_int(ga);
        auto nf = k3_normal_form(a, b, g);
        if (!nf) continue;
        SuperAlgebra src = make_k3(a, b, g);
        auto r = isomorphism_search(src, *nf);
        CAPTURE(al);
        CAPTURE(be);
        CAPTURE(ga);
        REQUIRE(r.map);
        CHECK(is_homomorphism(src, *nf, *r.map).pass);
        CHECK(r.dims_a == r.dims_b);
        ++checked;
      }
  CHECK(checked > 20);
  // discriminant zero with a non-square scale class: no normal form over GF(5)
  SuperAlgebra odd_class = make_k3(f.zero(), f.from_int(4), f.from_int(4));
  CHECK_FALSE(k3_normal_form(f.zero(), f.from_int(4), f.from_int(4)));
  CHECK_FALSE(isomorphism_search(odd_class, make_k3(f.from_int(3), f.from_int(3), f.zero())).map);
}

TEST_CASE("random basis changes give isomorphic algebras with equal derivation dims") {
  Field f = Field::prime(5);
  std::mt19937_64 rng(11);
  auto rnd = [&] { return f.from_int(static_cast<long>(rng() % 5)); };
  for (int trial = 0; trial < 8; ++trial) {
    SuperAlgebra a = make_k3(rnd(), rnd(), rnd());
    // even change of basis: nonzero scalar on e, invertible odd block
    Matrix p(3, 3, f);
    p.set(0, 0, f.from_int(1 + static_cast<long>(rng() % 4)));
    do {
      for (std::size_t i : {1U, 2U})
        for (std::size_t j : {1U, 2U}) p.set(i, j, rnd());
    } while (determinant(p).is_zero());
    auto inv = inverse(p);
    REQUIRE(inv);
    SuperAlgebra b(f, a.parities(), a.names());
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) b.set_product(i, j, a.multiply(p.row(i), p.row(j)) * *inv);
    CHECK(is_homomorphism(b, a, LinearMap{p, 0}).pass);
    auto r = isomorphism_search(a, b);
    REQUIRE(r.map);
    CHECK(is_homomorphism(a, b, *r.map).pass);
    CHECK(r.dims_a == r.dims_b);
  }
}
