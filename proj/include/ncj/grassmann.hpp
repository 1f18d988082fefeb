#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ncj/field.hpp"
#include "ncj/linalg.hpp"

namespace ncj {

/// Bit i set means generator x_{i+1} occurs.
using Mask = std::uint32_t;

inline unsigned mask_parity(Mask m) { return static_cast<unsigned>(__builtin_popcount(m)) & 1U; }

/// All subsets of {x1..xn} ordered by size, then lexicographically by index
/// list: 1, x1, x2, ..., x1x2, x1x3, ...
const std::vector<Mask>& monomial_order(std::size_t n);
/// Position of a mask inside monomial_order(n).
std::size_t monomial_position(std::size_t n, Mask m);

/// Element of the Grassmann algebra on n odd generators.
class GrassmannElement {
 public:
  GrassmannElement() = default;
  GrassmannElement(std::size_t n, Field field);
  static GrassmannElement monomial(std::size_t n, Mask m, const FieldValue& c, const Field& field);
  static GrassmannElement constant(std::size_t n, const FieldValue& c, const Field& field);
  /// The generator x_{i+1} (0-based index).
  static GrassmannElement generator(std::size_t n, std::size_t i, const Field& field);
  /// Parses "1 + 2*x1^x2 - x1^x3"; coefficients may be any field literal.
  static GrassmannElement parse(std::string_view text, std::size_t n, const Field& field);

  std::size_t n() const { return n_; }
  const Field& field() const { return field_; }
  const std::map<Mask, FieldValue>& terms() const { return terms_; }
  FieldValue coeff(Mask m) const;
  void add_term(Mask m, const FieldValue& c);

  bool is_zero() const { return terms_.empty(); }
  /// Parity if homogeneous (zero is even), none if mixed.
  std::optional<unsigned> parity() const;
  GrassmannElement part(unsigned parity) const;

  GrassmannElement operator-() const;
  friend GrassmannElement operator+(const GrassmannElement& a, const GrassmannElement& b);
  friend GrassmannElement operator-(const GrassmannElement& a, const GrassmannElement& b);
  friend GrassmannElement operator*(const FieldValue& s, const GrassmannElement& a);
  friend bool operator==(const GrassmannElement& a, const GrassmannElement& b);

  /// Coordinates in monomial_order(n).
  Vec to_vector() const;
  static GrassmannElement from_vector(std::size_t n, const Vec& v, const Field& field);

  std::string to_string() const;

 private:
  std::size_t n_ = 0;
  Field field_;
  std::map<Mask, FieldValue> terms_;
};

/// Sign of merging two disjoint index lists (0 if they overlap).
int merge_sign(Mask a, Mask b);

GrassmannElement gr_mul(const GrassmannElement& f, const GrassmannElement& g);
/// Signed deletion of x_{j+1}, sign (-1)^{k-1} with k the position counted
/// from the left.  This is the derivative used in the Poisson-Grassmann bracket.
GrassmannElement partial(std::size_t j, const GrassmannElement& f);
/// f d_j in the right-action calculus: deletion with sign counted from the
/// right.  On homogeneous f it equals (-1)^{p(f)+1} partial(j, f).
GrassmannElement right_partial(std::size_t j, const GrassmannElement& f);
/// {f,g} = (-1)^f sum_j partial(j,f) partial(j,g), extended linearly in f.
GrassmannElement poisson_grassmann(const GrassmannElement& f, const GrassmannElement& g);

/// Derivation of the Grassmann algebra fixed by x_i -> f_i.  Acts on the right:
/// (g)d = sum_i (g d_i) f_i with the right partial, which is the unique
/// extension satisfying (gh)d = (-1)^{p(d)p(h)} (gd)h + g(hd).
struct WnDerivation {
  std::size_t n = 0;
  std::vector<GrassmannElement> f;
  unsigned parity = 0;

  /// Validates component parities (each f_i of parity s+1, zero allowed).
  static WnDerivation make(std::vector<GrassmannElement> f, unsigned parity);
  static WnDerivation zero(std::size_t n, unsigned parity, const Field& field);
};

GrassmannElement wn_apply(const WnDerivation& d, const GrassmannElement& g);
/// Re-checks the Leibniz rule on all monomial pairs.
bool wn_is_derivation(const WnDerivation& d);
/// Hamiltonian condition f_i d_j + f_j d_i = 0 for all i, j (right partials).
bool is_hn(const WnDerivation& d);
/// f_i = f d_i.  The parity is that of f (f must be homogeneous).
WnDerivation hn_from_potential(const GrassmannElement& f);
/// Whether d is a derivation of the Poisson-Grassmann bracket.
bool is_bracket_derivation(const WnDerivation& d);
/// Supercommutator of two Wn derivations, evaluated on generators.
WnDerivation wn_bracket(const WnDerivation& a, const WnDerivation& b);

}  // namespace ncj
