#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ncj/catalog.hpp"
#include "ncj/superalgebra.hpp"

namespace ncj {

struct MorphismReport {
  bool pass = true;
  /// "(i,j): residual" for the first few failing basis pairs.
  std::vector<std::string> residuals;
  std::string note;
};

/// phi(b_i b_j) = phi(b_i) phi(b_j) on all basis pairs.  Throws
/// ParityViolation unless phi is even and respects the grading.
MorphismReport is_homomorphism(const SuperAlgebra& a, const SuperAlgebra& b, const LinearMap& phi);
/// Homomorphism plus nonzero determinant.
MorphismReport is_automorphism(const SuperAlgebra& a, const LinearMap& phi);

/// Map with symbolic entries and eliminations such as g4 := (1+g2*g3)/g1.
struct ParametricMap {
  Matrix matrix;
  std::map<std::string, FieldValue> constraints;

  LinearMap resolved() const;
};

struct SubalgebraWitness {
  std::vector<Element> spanning;
  Matrix basis;  // reduced echelon form
  std::size_t dim = 0;
};

SubalgebraWitness make_witness(const SuperAlgebra& a, const std::vector<Element>& spanning);
bool is_subalgebra(const SuperAlgebra& a, const SubalgebraWitness& w);
/// Whether the span is the sum of its even and odd parts.
bool is_graded(const SuperAlgebra& a, const SubalgebraWitness& w);

// ---------------------------------------------------------------------------
// Subalgebra families

enum class AlphaCase { Generic, Half };
enum class TCase { Any, NotMinusOne, MinusOne, NotOne, One };

/// Algebra kinds: "k3" = K3(a,0,0), "k3h" = K3(1/2,1/2,0), "dt" = D_t(a,0,0),
/// "dth" = D_t(1/2,1/2,0).
///
/// Spanning vectors are written as "coef:name" terms separated by spaces and
/// vectors separated by commas, e.g. "1:e1 g1:x, 1:e2 -g1:x".  Coefficients
/// are literals in a, t and the listed parameters.
struct SubalgebraFamily {
  std::string id;
  std::string kind;
  std::size_t dim = 0;
  AlphaCase alpha = AlphaCase::Generic;
  TCase t = TCase::Any;
  std::string vectors;
  std::vector<std::string> params;
  bool nonzero_params = false;
  /// Polynomial in the parameters that must vanish (finite instances).
  std::string constraint;
  /// Symbolic check: parameter := literal, solving the constraint.
  std::map<std::string, std::string> eliminate;
  /// Needs a root the rationals lack; checked on every instance over GF(13).
  bool finite_only = false;

  /// Human-readable list of the spanning vectors.
  std::string shape() const;
};

/// Spanning vectors of one instance; none when a coefficient has a pole or the
/// constraint fails.  `bindings` gives a, t and every parameter.
std::optional<std::vector<Element>> family_instance(const SubalgebraFamily& f, const SuperAlgebra& a,
                                                    const std::map<std::string, FieldValue>& bindings);

const std::vector<SubalgebraFamily>& subalgebra_families();
const SubalgebraFamily& find_family(const std::string& id);  // throws UnknownFamily

SuperAlgebra family_algebra(const std::string& kind, const FieldValue& alpha, const FieldValue& t);

struct FamilyClosureReport {
  std::string id;
  bool pass = true;
  std::string method;
  std::vector<std::string> notes;
};

/// Builds the family with symbolic parameters over Q(a, t, g...) under its
/// hypotheses and checks closure and dimension; finite_only items are
/// checked for every parameter value over GF(13).
FamilyClosureReport verify_family_closure(const std::string& id);

// ---------------------------------------------------------------------------
// Finite-field oracles

struct SearchBudget {
  std::uint64_t max_candidates = 5'000'000;
};

/// All d-dimensional multiplicatively closed subspaces, one per subspace,
/// ordered by pivot pattern then by free entries.  Throws SearchTooLarge.
std::vector<SubalgebraWitness> enumerate_subalgebras(const SuperAlgebra& a, std::size_t d, const SearchBudget& budget = {});

struct FamilyMatchReport {
  std::size_t dim = 0;
  std::size_t found = 0;
  std::size_t matched = 0;
  std::size_t applicable_families = 0;
  std::vector<std::string> unmatched;  // witness bases as text
};

/// Enumerates the subalgebras of family_algebra(kind, alpha, t) over GF(p)
/// and matches each against every family whose hypotheses hold there.
FamilyMatchReport subalgebra_cross_check(const std::string& kind, const FieldValue& alpha, const FieldValue& t, std::size_t d,
                                         const SearchBudget& budget = {});

/// Even bijective maps A -> B preserving the product, by backtracking over
/// images of basis vectors.  With first_only the search stops at one hit.
std::vector<LinearMap> enumerate_isomorphisms(const SuperAlgebra& a, const SuperAlgebra& b, bool first_only,
                                              const SearchBudget& budget = {});
std::vector<LinearMap> enumerate_automorphisms(const SuperAlgebra& a, const SearchBudget& budget = {});

struct IsoSearchResult {
  std::optional<LinearMap> map;
  /// Set when differing derivation dimensions settled the question.
  bool invariant_shortcut = false;
  std::pair<std::size_t, std::size_t> dims_a, dims_b;
};
IsoSearchResult isomorphism_search(const SuperAlgebra& a, const SuperAlgebra& b, const SearchBudget& budget = {});

/// Closed under composition and inverses.
bool is_group(const std::vector<LinearMap>& maps);

/// Shape predicates for the automorphism families of each kind.
/// k3: diag(1, g, 1/g); k3 at 1/2: e fixed, odd block of determinant 1;
/// k3h: e fixed, z -> s z + k w, w -> s w with s = +-1; dt and dth likewise
/// with e1, e2 fixed.
bool automorphism_in_family(const std::string& kind, bool alpha_half, const LinearMap& phi);

/// Normal form predicted for K3(a,b,g): with D = (1-2a)^2 + 4bg a square,
/// K3(l) with l = (1 + sqrt D)/2; D = 0 with (b,g) != 0 gives K3^{1/2} once a
/// second square root exists (the odd block's scale class).  None when a
/// needed root is missing from the field.
std::optional<SuperAlgebra> k3_normal_form(const FieldValue& alpha, const FieldValue& beta, const FieldValue& gamma);

}  // namespace ncj
