#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ncj/field.hpp"
#include "ncj/linalg.hpp"

namespace ncj {

using Element = Vec;

/// Finite-dimensional superalgebra given by structure constants:
/// b_i b_j = sum_k c[i][j][k] b_k, each basis vector carrying a parity.
class SuperAlgebra {
 public:
  struct Term {
    std::size_t index;
    FieldValue coeff;
  };

  SuperAlgebra() = default;
  SuperAlgebra(Field field, std::vector<unsigned> parity, std::vector<std::string> names = {});

  const Field& field() const { return field_; }
  std::size_t dim() const { return parity_.size(); }
  unsigned parity(std::size_t i) const { return parity_[i]; }
  const std::vector<unsigned>& parities() const { return parity_; }
  const std::vector<std::string>& names() const { return names_; }
  std::size_t index_of(std::string_view name) const;

  /// Adds c * b_k to the product b_i b_j.
  void add(std::size_t i, std::size_t j, std::size_t k, const FieldValue& c);
  void set_product(std::size_t i, std::size_t j, const Element& value);
  /// Sparse product of two basis vectors.
  const std::vector<Term>& product(std::size_t i, std::size_t j) const { return table_[i * dim() + j]; }
  FieldValue coeff(std::size_t i, std::size_t j, std::size_t k) const;

  Element basis(std::size_t i) const;
  Element zero() const;
  Element element(const std::vector<std::pair<std::size_t, FieldValue>>& terms) const;
  Element multiply(const Element& x, const Element& y) const;
  /// Parity of a homogeneous element (zero counts as even), none if mixed.
  std::optional<unsigned> parity_of(const Element& x) const;

  /// Indices (i, j, k) where the tensor violates the grading.
  std::vector<std::array<std::size_t, 3>> grading_violations() const;
  bool is_supercommutative() const;
  bool is_zero_product() const;

  /// Same tensor with every coefficient mapped into `target`.
  SuperAlgebra change_field(const Field& target, const std::map<std::string, FieldValue>& bindings = {}) const;
  SuperAlgebra with_names(std::vector<std::string> names) const;

  std::string element_to_string(const Element& x) const;

  friend bool operator==(const SuperAlgebra& a, const SuperAlgebra& b);

 private:
  void check_index(std::size_t i) const;
  Field field_;
  std::vector<unsigned> parity_;
  std::vector<std::string> names_;
  std::vector<std::vector<Term>> table_;
};

/// Endomorphism (or map between algebras) acting on the right: row i is the
/// image of basis vector i, so (x)phi = x * matrix.
struct LinearMap {
  Matrix matrix;
  unsigned parity = 0;

  Element apply(const Element& x) const { return x * matrix; }
  /// Composition "first this, then other": u(PQ) = (uP)Q.
  LinearMap then(const LinearMap& other) const { return {matrix * other.matrix, (parity + other.parity) & 1U}; }
};

LinearMap zero_map(const SuperAlgebra& a, unsigned parity);
LinearMap identity_map(const SuperAlgebra& a);
/// Supercommutator PQ - (-1)^{pq} QP.
LinearMap super_bracket(const LinearMap& p, const LinearMap& q);
/// Whether a parity-s map sends each parity-r basis vector into parity r+s.
bool respects_parity(const SuperAlgebra& a, const LinearMap& m);

/// (L_x, R_x) with (y)R_x = yx and (y)L_x = (-1)^{p(x)p(y)} xy.
std::pair<LinearMap, LinearMap> mult_operators(const SuperAlgebra& a, const Element& x);

/// xy + (-1)^{xy} yx for homogeneous arguments, extended bilinearly.
Element sym_product(const SuperAlgebra& a, const Element& x, const Element& y);
/// xy - (-1)^{xy} yx for homogeneous arguments, extended bilinearly.
Element super_commutator(const SuperAlgebra& a, const Element& x, const Element& y);

/// The halved supersymmetrized product a o b = (ab + (-1)^{ab} ba)/2.
SuperAlgebra plus_algebra(const SuperAlgebra& a);
/// Structure constants of the supercommutator, packaged as an algebra.
SuperAlgebra commutator_bracket(const SuperAlgebra& a);
/// Product a o b + B(a,b)/2.
SuperAlgebra reconstruct(const SuperAlgebra& p, const SuperAlgebra& bracket);

struct IdentityFailure {
  std::vector<std::size_t> indices;  // basis indices of the arguments
  std::string residual;
};

struct IdentityReport {
  std::string identity;
  bool pass = true;
  std::size_t checked = 0;
  std::size_t failure_count = 0;
  std::vector<IdentityFailure> failures;  // first few only
  std::vector<std::string> notes;
};

/// [R_x, L_y] = [L_x, R_y] on basis pairs.
IdentityReport check_flexible(const SuperAlgebra& a);
/// Cyclic sum [R_{x.y}, L_z] + (-1)^{x(y+z)}[R_{y.z}, L_x] + (-1)^{z(x+y)}[R_{z.x}, L_y] = 0
/// on basis triples, with x.y the supersymmetrized product; includes flexibility.
IdentityReport check_noncomm_jordan(const SuperAlgebra& a);
/// Jordan superidentity in operator form on basis triples; throws NotSupercommutative.
IdentityReport check_jordan_super(const SuperAlgebra& a);
/// {ab, c} = (-1)^{bc}{a,c}b + a{b,c} on basis triples; notes superanticommutativity.
IdentityReport check_poisson_bracket(const SuperAlgebra& p, const SuperAlgebra& bracket);
bool is_superanticommutative(const SuperAlgebra& bracket);

}  // namespace ncj
