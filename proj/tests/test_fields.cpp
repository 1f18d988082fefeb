#include <random>

#include "doctest.h"
#include "ncj/field.hpp"

using namespace ncj;

namespace {

FieldValue q(long n, long d = 1) { return FieldValue(mpq_class(n, d)); }

FieldValue random_value(const Field& f, std::mt19937& rng) {
  std::uniform_int_distribution<int> small(-3, 3);
  if (f.kind() != Field::Kind::RationalFunction) {
    int d = small(rng);
    if (d == 0) d = 1;
    return f.from_rational(mpq_class(small(rng), std::abs(d)));
  }
  FieldValue num = f.zero();
  FieldValue den = f.one();
  for (const auto& v : f.variables()) {
    num = num + f.from_int(small(rng)) * f.variable(v) * f.variable(v);
    num = num + f.from_int(small(rng)) * f.variable(v);
    den = den + f.from_int(small(rng)) * f.variable(v);
  }
  num = num + f.from_int(small(rng));
  if (den.is_zero()) den = f.one();
  return num / den;
}

}  // namespace

TEST_CASE("rational arithmetic") {
  CHECK(q(1, 2) + q(1, 3) == q(5, 6));
  CHECK((q(1, 2) + q(1, 3)).to_string() == "5/6");
  CHECK_THROWS_AS(q(1).inv() * q(0).inv(), Error);
}

TEST_CASE("prime field") {
  Field f = Field::prime(5);
  CHECK(f.from_int(2).inv() == f.from_int(3));
  CHECK(f.from_rational(mpq_class(1, 2)) == f.from_int(3));
  CHECK(f.from_int(-1).to_string() == "4");
  CHECK_THROWS_AS(Field::prime(6), Error);
  try {
    (void)(f.from_int(1) + Field::prime(7).from_int(1));
    FAIL("expected mismatch");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::FieldMismatch);
  }
}

TEST_CASE("rational function cancellation") {
  Field f = Field::rational_functions({"a"});
  FieldValue a = f.variable("a");
  FieldValue r = (a * a - 1) / (a - 1);
  CHECK(r == a + 1);
  CHECK(r.to_string() == "a+1");
  CHECK(f.parse("(a^2-1)/(a-1)") == a + 1);
  CHECK(f.parse("(4*a-2)/(2*a-1)") == f.from_int(2));
}

TEST_CASE("multivariate gcd") {
  Field f = Field::rational_functions({"a", "b", "t"});
  FieldValue a = f.variable("a"), b = f.variable("b"), t = f.variable("t");
  FieldValue p = (a * b - t) * (a + b * t + 1);
  FieldValue s = (a * b - t) * (t * t - a);
  FieldValue r = p / s;
  CHECK(r == (a + b * t + 1) / (t * t - a));
  CHECK(r.fraction_rep().den.terms().size() == 2);
  Poly g = gcd(p.fraction_rep().num, s.fraction_rep().num);
  CHECK(g == (a * b - t).fraction_rep().num.monic());
}

TEST_CASE("evaluate") {
  Field f = Field::rational_functions({"a"});
  FieldValue v = f.parse("4*a-2");
  CHECK(v.evaluate({{"a", mpq_class(1, 2)}}) == q(0));
  CHECK(f.parse("a+1").evaluate({{"a", mpq_class(2)}}) == q(3));
  try {
    (void)f.parse("1/(a-1/2)").evaluate({{"a", mpq_class(1, 2)}});
    FAIL("expected pole");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::PoleAtPoint);
  }
  try {
    (void)v.evaluate({});
    FAIL("expected unbound");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnboundVariable);
  }
}

TEST_CASE("substitute into prime field and other variables") {
  Field f = Field::rational_functions({"g1", "g2", "g3", "g4"});
  FieldValue g4 = f.variable("g4");
  Field small = Field::rational_functions({"g1", "g2", "g3"});
  FieldValue sub = (small.from_int(1) + small.variable("g2") * small.variable("g3")) / small.variable("g1");
  FieldValue r = (f.variable("g1") * g4).substitute(small, {{"g4", sub}});
  CHECK(r == small.from_int(1) + small.variable("g2") * small.variable("g3"));
  FieldValue m = f.parse("(g1+3)/(g2-1)").substitute(Field::prime(5), {{"g1", FieldValue(2L)}, {"g2", FieldValue(3L)}});
  CHECK(m == Field::prime(5).from_int(0));
}

TEST_CASE("literal round trip") {
  Field f = Field::rational_functions({"a", "t"});
  for (const char* s : {"(4*a-2)/(t+1)", "-1/2", "a^2*t-3*a+7/3", "2*a/t", "(a+t)/(a*t-1)"}) {
    FieldValue v = f.parse(s);
    CHECK(f.parse(v.to_string()) == v);
  }
  CHECK_THROWS_AS(f.parse("a+"), Error);
  CHECK_THROWS_AS(f.parse("x"), Error);
}

TEST_CASE("field axioms on random triples") {
  std::mt19937 rng(7);
  for (const Field& f : {Field::rationals(), Field::prime(5), Field::prime(13), Field::rational_functions({"a", "b"})}) {
    for (int trial = 0; trial < 25; ++trial) {
      FieldValue x = random_value(f, rng), y = random_value(f, rng), z = random_value(f, rng);
      CHECK((x + y) + z == x + (y + z));
      CHECK((x * y) * z == x * (y * z));
      CHECK(x * (y + z) == x * y + x * z);
      CHECK(x * y == y * x);
      if (!x.is_zero()) CHECK((x * x.inv()).is_one());
      CHECK((x - x).is_zero());
      if (f.kind() == Field::Kind::RationalFunction) {
        // canonical form is a fixed point
        const auto& fr = x.fraction_rep();
        FieldValue again = FieldValue::fraction(fr.num, fr.den, fr.vars);
        CHECK(again.fraction_rep().num == fr.num);
        CHECK(again.fraction_rep().den == fr.den);
        if (!fr.den.is_zero()) CHECK(fr.den.leading_coeff() == 1);
      }
    }
  }
}

TEST_CASE("evaluate is a ring homomorphism") {
  std::mt19937 rng(11);
  Field f = Field::rational_functions({"a", "b"});
  std::map<std::string, mpq_class> pt{{"a", mpq_class(3, 7)}, {"b", mpq_class(-5, 2)}};
  for (int trial = 0; trial < 20; ++trial) {
    FieldValue x = random_value(f, rng), y = random_value(f, rng);
    try {
      CHECK((x * y).evaluate(pt) == x.evaluate(pt) * y.evaluate(pt));
      CHECK((x + y).evaluate(pt) == x.evaluate(pt) + y.evaluate(pt));
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::PoleAtPoint);
    }
  }
}

TEST_CASE("field spec parsing and joins") {
  CHECK(Field::from_string("gf13").modulus() == 13);
  CHECK(Field::from_string("ratfunc:a,b").variables().size() == 2);
  CHECK(Field::from_string("q") == Field::rationals());
  Field ab = Field::rational_functions({"a", "b"});
  Field bt = Field::rational_functions({"b", "t"});
  Field j = ab.join(bt);
  CHECK(j.variables() == std::vector<std::string>{"a", "b", "t"});
  CHECK(j.embed(bt.variable("t")) == j.variable("t"));
  CHECK_THROWS_AS(Field::prime(5).join(Field::prime(7)), Error);
}
