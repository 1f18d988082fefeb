#pragma once

#include <vector>

#include "ncj/grassmann.hpp"
#include "ncj/superalgebra.hpp"

namespace ncj {

/// Basis (e, z, w), parities (0, 1, 1).
SuperAlgebra make_k3(const FieldValue& alpha, const FieldValue& beta, const FieldValue& gamma);
/// Basis (e1, e2, x, y), parities (0, 0, 1, 1).
SuperAlgebra make_dt(const FieldValue& t, const FieldValue& alpha, const FieldValue& beta, const FieldValue& gamma);

/// Data of U(V, f, *): a graded space V, a supersymmetric nondegenerate form
/// f on V (Gram matrix), and a superanticommutative product * on V given as
/// an algebra on V's basis.
struct UvfData {
  std::vector<unsigned> parity;
  std::vector<std::string> names;
  Matrix form;
  SuperAlgebra star;
};

/// Algebra on F + V with (a + x)(b + y) = (ab + f(x,y)) + (ay + bx + x*y);
/// basis (1, v_1, ..., v_m).
SuperAlgebra make_uvf(const UvfData& data);
/// Same data with a zero star product.
UvfData uvf_with_zero_star(const Field& field, std::vector<unsigned> parity, const Matrix& form, std::vector<std::string> names = {});

/// Grassmann algebra on n odd generators, basis in monomial_order(n).
SuperAlgebra make_grassmann(std::size_t n, const Field& field);
/// The Poisson-Grassmann bracket on the same basis, packaged as an algebra.
SuperAlgebra grassmann_bracket(std::size_t n, const Field& field);

/// Basis: Grassmann monomials in monomial_order(n), then their barred copies.
SuperAlgebra make_j_gamma(std::size_t n, const Field& field);
SuperAlgebra make_j_gamma_A(std::size_t n, const GrassmannElement& A);
/// Index of a (barred) monomial in the J(Gamma_n) basis.
std::size_t jgamma_index(std::size_t n, Mask m, bool barred);

/// Bracket [f,g] = (-1)^{p(g)+1} sum_{i,j} (f d_i)(g d_j) a_ij on the
/// Grassmann basis; a must be symmetric with even entries.
SuperAlgebra gamma_nd_bracket(std::size_t n, const std::vector<std::vector<GrassmannElement>>& a);
/// Product f*g = fg + [f,g]; throws BracketNotPoisson if validation fails.
SuperAlgebra make_gamma_nd(std::size_t n, const std::vector<std::vector<GrassmannElement>>& a);
/// Diagonal coefficient matrix from a list of entries.
std::vector<std::vector<GrassmannElement>> diagonal_matrix(const std::vector<GrassmannElement>& diag);

}  // namespace ncj
