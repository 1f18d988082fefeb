#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ncj/error.hpp"
#include "ncj/poly.hpp"

namespace ncj {

class FieldValue;

using VarList = std::shared_ptr<const std::vector<std::string>>;

/// Descriptor of a coefficient domain: Q, GF(p), or Q(v1, ..., vk).
///
/// Rational constants embed into every field (they are the prime-subfield
/// elements), so mixing Q with another field is allowed; mixing two distinct
/// moduli, or two distinct variable lists, is a FieldMismatch.
class Field {
 public:
  enum class Kind { Rational, Prime, RationalFunction };

  static Field rationals();
  static Field prime(std::uint64_t p);
  static Field rational_functions(std::vector<std::string> vars);
  /// Shares an existing variable list (no validation).
  static Field rational_functions(VarList vars);
  /// Parses "q", "gf5", "gf13" or "ratfunc:a,b,t".
  static Field from_string(std::string_view spec);

  Kind kind() const { return kind_; }
  std::uint64_t modulus() const { return p_; }
  std::uint64_t characteristic() const { return kind_ == Kind::Prime ? p_ : 0; }
  const std::vector<std::string>& variables() const;
  const VarList& var_list() const { return vars_; }
  std::size_t variable_index(std::string_view name) const;  // throws UnboundVariable
  bool has_variable(std::string_view name) const;

  FieldValue zero() const;
  FieldValue one() const;
  FieldValue from_int(long v) const;
  FieldValue from_rational(const mpq_class& q) const;
  FieldValue variable(std::string_view name) const;
  /// Brings a value from Q, or from a rational-function field whose variables
  /// are a subset of ours, into this field.
  FieldValue embed(const FieldValue& v) const;
  /// Smallest field containing both (Q joins with anything).
  Field join(const Field& other) const;
  /// Parses an arithmetic literal such as "3", "-1/2" or "(4*a-2)/(t+1)".
  FieldValue parse(std::string_view text) const;

  std::string to_string() const;
  friend bool operator==(const Field& a, const Field& b);

 private:
  Kind kind_ = Kind::Rational;
  std::uint64_t p_ = 0;
  VarList vars_;
};

/// An exact scalar.  Values are immutable once built and always canonical:
/// reduced fraction for Q, residue in [0, p) for GF(p), and for rational
/// functions a coprime numerator/denominator pair with a monic denominator
/// (grlex leading coefficient 1).
class FieldValue {
 public:
  struct Residue {
    std::uint64_t value;
    std::uint64_t modulus;
  };
  struct Fraction {
    Poly num;
    Poly den;
    VarList vars;
  };

  FieldValue() : rep_(mpq_class(0)) {}
  FieldValue(long v) : rep_(mpq_class(v)) {}  // NOLINT: integers are field constants
  FieldValue(int v) : rep_(mpq_class(v)) {}   // NOLINT
  explicit FieldValue(mpq_class q);
  static FieldValue residue(std::int64_t v, std::uint64_t p);
  static FieldValue fraction(Poly num, Poly den, VarList vars);

  Field field() const;
  bool is_rational() const { return rep_.index() == 0; }
  bool is_residue() const { return rep_.index() == 1; }
  bool is_fraction() const { return rep_.index() == 2; }
  const mpq_class& rational() const { return std::get<0>(rep_); }
  const Residue& residue_rep() const { return std::get<1>(rep_); }
  const Fraction& fraction_rep() const { return std::get<2>(rep_); }

  bool is_zero() const;
  bool is_one() const;
  /// True when the value lies in the prime subfield (no variables).
  bool is_constant() const;
  /// The constant as a rational (requires is_constant() and not a residue).
  mpq_class constant() const;

  FieldValue operator-() const;
  FieldValue inv() const;
  friend FieldValue operator+(const FieldValue& a, const FieldValue& b);
  friend FieldValue operator-(const FieldValue& a, const FieldValue& b);
  friend FieldValue operator*(const FieldValue& a, const FieldValue& b);
  friend FieldValue operator/(const FieldValue& a, const FieldValue& b);
  FieldValue& operator+=(const FieldValue& o) { return *this = *this + o; }
  FieldValue& operator-=(const FieldValue& o) { return *this = *this - o; }
  FieldValue& operator*=(const FieldValue& o) { return *this = *this * o; }
  FieldValue& operator/=(const FieldValue& o) { return *this = *this / o; }
  friend bool operator==(const FieldValue& a, const FieldValue& b);

  /// Pivot-selection weight: total degree of the numerator, then term count.
  std::pair<unsigned, std::size_t> complexity() const;

  /// Exact value at a rational point; bindings must cover every variable.
  FieldValue evaluate(const std::map<std::string, mpq_class>& bindings) const;
  /// Substitutes each bound variable by a value of `target` and maps the
  /// rest by name.  Covers specialization into Q or GF(p), enlargement of
  /// the variable list, and constraint elimination such as g4 := (1+g2*g3)/g1.
  FieldValue substitute(const Field& target, const std::map<std::string, FieldValue>& bindings) const;

  std::string to_string() const;

 private:
  std::variant<mpq_class, Residue, Fraction> rep_;
};

FieldValue pow(const FieldValue& base, unsigned exponent);
/// Square root inside the same field: any residue, or a constant rational
/// that is a perfect square; none otherwise.
std::optional<FieldValue> field_sqrt(const FieldValue& v);

inline int sign_of(unsigned parity_sum) { return (parity_sum & 1U) ? -1 : 1; }

/// Euclid-style helpers on small moduli.
std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p);
bool is_prime(std::uint64_t p);

}  // namespace ncj
