#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ncj/catalog.hpp"
#include "ncj/superalgebra.hpp"

namespace ncj {

/// Matrix cells (row i = image of b_i, column k) allowed for a parity-s map.
std::vector<std::pair<std::size_t, std::size_t>> parity_cells(const std::vector<unsigned>& parity, unsigned s);
/// Packs a solution vector over parity_cells into a square map.
LinearMap unpack_map(const std::vector<unsigned>& parity, unsigned s, const Vec& values, const Field& field);
Vec pack_map(const std::vector<unsigned>& parity, const LinearMap& m);

/// Linear system in the entries of a parity-s map d whose solutions are the
/// maps with (b_i b_j)d = (-1)^{s p(b_j)} (b_i d) b_j + b_i (b_j d).
/// Columns follow parity_cells(A.parities(), s); zero rows are dropped.
Matrix derivation_system(const SuperAlgebra& a, unsigned s);

/// Direct check of the Leibniz rule on all basis pairs.
bool is_derivation(const SuperAlgebra& a, const LinearMap& d);

struct DerivationSpace {
  SuperAlgebra algebra;
  std::vector<LinearMap> even;
  std::vector<LinearMap> odd;
  std::pair<std::size_t, std::size_t> dims() const { return {even.size(), odd.size()}; }
  const std::vector<LinearMap>& part(unsigned s) const { return s ? odd : even; }
};

/// Kernels of both parity systems; basis maps come from kernel_basis.  Over a
/// function field this is the generic answer.
DerivationSpace derivation_space(const SuperAlgebra& a);

/// Supercommutator of two derivations; throws NotDerivation if an input fails.
LinearMap der_bracket(const SuperAlgebra& a, const LinearMap& d1, const LinearMap& d2);

/// Coordinates of m in the span of `basis` (all maps of one parity), or none.
std::optional<Vec> map_coordinates(const std::vector<LinearMap>& basis, const LinearMap& m, const Field& field);

struct ClosureReport {
  bool closed = true;
  bool jacobi = true;
  /// Lie superalgebra on the basis even..., odd... with the bracket as product.
  SuperAlgebra structure;
  std::vector<std::string> notes;
};

ClosureReport closure_check(const DerivationSpace& d);

struct Sl2Triple {
  LinearMap e, h, f;
};

/// Looks for e, h, f in the span of three even maps with [h,e]=2e,
/// [h,f]=-2f, [e,f]=h.  Candidates for h run over small integer
/// combinations; a candidate qualifies when ad h has eigenvalues 0, +-mu with
/// mu in the field.  Throws WrongDimension unless exactly three maps are given.
std::optional<Sl2Triple> find_sl2_triple(const SuperAlgebra& a, const std::vector<LinearMap>& even_part);

struct SpaceComparison {
  bool pass = true;
  std::pair<std::size_t, std::size_t> left_dims, right_dims;
  std::vector<std::string> notes;
};

/// Derivations of J(V,f) against the maps d of V with
/// f(wd, v) = -(-1)^{s (p(w)+1)} f(w, vd); also checks that derivations kill the
/// unit and preserve V.
SpaceComparison lieosp_check(const Field& field, const std::vector<unsigned>& v_parity, const Matrix& form);
/// Maps of V (parity s) satisfying the form condition above.
std::vector<LinearMap> lieosp_solutions(const Field& field, const std::vector<unsigned>& v_parity, const Matrix& form, unsigned s);
/// Der(U) against Lieosp(V,f) intersected with Der(V,*).
SpaceComparison uvfstar_der_check(const UvfData& data);

/// Whether two families of maps span the same subspace.
bool same_span(const std::vector<LinearMap>& a, const std::vector<LinearMap>& b, const Field& field);
/// Whether every map of `a` lies in the span of `b`.
bool span_contains(const std::vector<LinearMap>& b, const std::vector<LinearMap>& a, const Field& field);

/// Embeds a map of V into the algebra F + V (unit row and column zero).
LinearMap extend_by_unit(const LinearMap& m);

}  // namespace ncj
