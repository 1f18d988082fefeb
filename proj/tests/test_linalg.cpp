#include <random>

#include "doctest.h"
#include "ncj/linalg.hpp"

using namespace ncj;

namespace {

Matrix from_ints(const std::vector<std::vector<long>>& rows, const Field& f) {
  std::vector<Vec> vs;
  for (const auto& r : rows) {
    Vec v;
    for (long x : r) v.push_back(f.from_int(x));
    vs.push_back(v);
  }
  return Matrix::from_rows(vs, f);
}

}  // namespace

TEST_CASE("rref of small matrices") {
  Field q = Field::rationals();
  auto id = rref(Matrix::identity(3, q));
  CHECK(id.rank == 3);
  CHECK(id.pivots == std::vector<std::size_t>{0, 1, 2});
  CHECK(id.reduced == Matrix::identity(3, q));
  auto r = rref(from_ints({{1, 1}, {2, 2}}, q));
  CHECK(r.rank == 1);
  CHECK(r.pivots == std::vector<std::size_t>{0});
  CHECK(r.reduced == from_ints({{1, 1}, {0, 0}}, q));
}

TEST_CASE("kernel basis") {
  Field q = Field::rationals();
  auto k = kernel_basis(from_ints({{1, 1}, {0, 0}}, q));
  REQUIRE(k.size() == 1);
  CHECK(k[0][0] == q.one());
  CHECK(k[0][1] == q.from_int(-1));
  CHECK(kernel_basis(from_ints({{2, 1}, {1, 1}}, q)).empty());
}

TEST_CASE("random matrices over GF(5): rank-nullity and projection") {
  Field f = Field::prime(5);
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> d(0, 4);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t rows = 1 + trial % 5, cols = 1 + (trial * 7) % 6;
    Matrix m(rows, cols, f);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) m.set(i, j, f.from_int(d(rng)));
    auto r = rref(m);
    auto k = kernel_basis(m);
    CHECK(r.rank + k.size() == cols);
    CHECK(rref(r.reduced).reduced == r.reduced);
    for (const auto& v : k) {
      Vec col = v * m.transpose();
      CHECK(is_zero(col));
    }
  }
}

TEST_CASE("symbolic rank agrees with specializations") {
  Field f = Field::rational_functions({"a"});
  FieldValue a = f.variable("a");
  Matrix m(3, 3, f);
  m.set(0, 0, a);
  m.set(0, 1, f.one());
  m.set(1, 0, f.one());
  m.set(1, 1, a);
  m.set(2, 0, a + 1);
  m.set(2, 1, a + 1);
  m.set(2, 2, a * a - 1);
  std::size_t generic = rank(m);
  CHECK(generic == 3);
  for (long v : {2L, 3L, 7L}) CHECK(rank(m.substitute(Field::rationals(), {{"a", FieldValue(v)}})) == generic);
  CHECK(rank(m.substitute(Field::rationals(), {{"a", FieldValue(1L)}})) < generic);
}

TEST_CASE("solve, determinant, inverse") {
  Field q = Field::rationals();
  Matrix m = from_ints({{2, 1}, {1, 1}}, q);
  auto x = solve(m, {q.from_int(3), q.from_int(2)});
  REQUIRE(x);
  CHECK((*x)[0] == q.one());
  CHECK((*x)[1] == q.one());
  CHECK(determinant(m) == q.one());
  auto inv = inverse(m);
  REQUIRE(inv);
  CHECK(m * *inv == Matrix::identity(2, q));
  CHECK(!inverse(from_ints({{1, 2}, {2, 4}}, q)));
  CHECK(!solve(from_ints({{1, 1}, {1, 1}}, q), {q.one(), q.zero()}));
}
