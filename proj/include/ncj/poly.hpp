#pragma once

#include <gmpxx.h>

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace ncj {

inline constexpr std::size_t kMaxVars = 16;

/// Exponent vector over a fixed-capacity variable list.
struct Monomial {
  std::array<std::uint16_t, kMaxVars> exp{};

  unsigned degree() const;
  bool divides(const Monomial& other) const;
  bool is_one() const { return degree() == 0; }

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// Requires b.divides(a).
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) = default;
};

/// Graded lexicographic comparison; variable 0 is the most significant.
std::strong_ordering grlex(const Monomial& a, const Monomial& b);

/// Sparse multivariate polynomial over Q.  Terms are kept sorted by
/// decreasing grlex order with no zero coefficients, so structural equality
/// is polynomial equality.
class Poly {
 public:
  using Term = std::pair<Monomial, mpq_class>;

  Poly() = default;
  explicit Poly(const mpq_class& c);
  static Poly variable(std::size_t index, unsigned power = 1);
  static Poly from_terms(std::vector<Term> terms);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  mpq_class constant_value() const;  // coefficient of 1
  const std::vector<Term>& terms() const { return terms_; }
  const Term& leading() const { return terms_.front(); }
  const mpq_class& leading_coeff() const { return terms_.front().second; }
  unsigned total_degree() const;
  unsigned degree_in(std::size_t var) const;
  /// One past the largest variable index that occurs.
  std::size_t var_span() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const mpq_class& c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const mpq_class& c) { return a *= c; }
  friend bool operator==(const Poly& a, const Poly& b) = default;

  Poly mul_term(const Monomial& m, const mpq_class& c) const;
  Poly monic() const;

  /// Coefficients of var^0, var^1, ... as polynomials in the other variables.
  std::vector<Poly> coefficients_in(std::size_t var) const;
  static Poly from_coefficients_in(std::size_t var, const std::vector<Poly>& coeffs);

  std::string to_string(const std::vector<std::string>& names) const;

 private:
  void normalize();
  std::vector<Term> terms_;
};

/// Exact quotient; throws Error(InvalidArgument) when b does not divide a.
Poly exact_div(const Poly& a, const Poly& b);
/// Monic gcd (grlex leading coefficient 1); gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);

}  // namespace ncj
