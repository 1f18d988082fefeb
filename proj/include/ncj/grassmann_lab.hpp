#pragma once

#include <functional>
#include <string>
#include <vector>

#include "ncj/catalog.hpp"
#include "ncj/derivations.hpp"
#include "ncj/grassmann.hpp"

namespace ncj {

using CoeffMatrix = std::vector<std::vector<GrassmannElement>>;

/// Matrix of a Wn derivation on the Grassmann basis (monomial_order).
LinearMap wn_to_map(const WnDerivation& d);
/// Reads f_i off the images of the generators; the map must be homogeneous.
WnDerivation map_to_wn(std::size_t n, const LinearMap& m);

/// Lift of a derivation of (Gamma_n, ., {,}) to J(Gamma_n): a -> ad and
/// bar(a) -> (-1)^d bar(ad).  Throws NotPoissonDerivation when d does not
/// preserve the bracket.
LinearMap jgamma_d1(const WnDerivation& d);
/// a -> 0, bar(a) -> ax for homogeneous x; parity p(x)+1.
LinearMap jgamma_d2(const GrassmannElement& x);

/// (A)d = 0.
bool jgammaA_d1_criterion(const WnDerivation& d, const GrassmannElement& A);
/// The same question answered by checking the lifted map on J(Gamma_n, A).
bool jgammaA_d1_direct(const WnDerivation& d, const GrassmannElement& A);

/// Basis of the parity-s Wn derivations cut out by `residual`, which must be
/// linear in d and return a list of Grassmann elements that vanish exactly on
/// the wanted maps.
std::vector<WnDerivation> wn_kernel(std::size_t n, unsigned s, const Field& field,
                                    const std::function<std::vector<GrassmannElement>(const WnDerivation&)>& residual);

/// All parity-s d with f_i d_j + f_j d_i = 0 (right partials).
std::vector<WnDerivation> hn_space(std::size_t n, unsigned s, const Field& field);

struct GrasDerResult {
  std::vector<WnDerivation> basis;
  /// Every basis element is a derivation of the full product.
  bool verified = true;
};

/// Solves sum_k (a_ij d_k) f_k = (-1)^s sum_k ((f_i d_k) a_jk + (f_j d_k) a_ik)
/// for i <= j, with right partials; throws BracketNotPoisson on bad data.
GrasDerResult gras_der_solve(std::size_t n, const CoeffMatrix& a, unsigned s);

struct CentAnnReport {
  bool pass = true;
  std::pair<std::size_t, std::size_t> cent_ann_dims;
  std::pair<std::size_t, std::size_t> der_dims;
  std::vector<std::string> notes;
};

/// The d_i are the odd Wn derivations with x_j d_i = a_ij.  Computes the maps
/// supercommuting with every d_i and killing every a_ij, and checks each lies
/// in the solution space of gras_der_solve.
CentAnnReport cent_ann_inclusion_check(std::size_t n, const CoeffMatrix& a);

}  // namespace ncj
