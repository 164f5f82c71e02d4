#ifndef NILREP_REGULAR_ACTION_HPP
#define NILREP_REGULAR_ACTION_HPP

#include "nilrep/bch.hpp"
#include "nilrep/lie_algebra.hpp"
#include "nilrep/polynomial.hpp"

namespace nilrep {

/// The left-translation action (lambda(x) phi)(y) = phi((-x) * y).
PolyFun translate_poly(const LieAlgebra& g, const LieElement& x, const PolyFun& phi);

/// The Lie derivative: the t-linear coefficient of t -> phi((-t x) * y),
/// computed symbolically through the translation jet. Linear in x and phi,
/// and a derivation in phi.
PolyFun lie_derivative(const LieAlgebra& g, const LieElement& x, const PolyFun& phi);

/// Prepared-operator form for repeated application with a fixed x.
PolyFun lie_derivative(const TranslationJet& jet, const PolyFun& phi);

/// Independent route for cross-checks: composes phi with the full
/// translation map in an extra formal variable t and extracts the
/// t-linear slice, with no derivative machinery at all.
PolyFun lie_derivative_composed(const LieAlgebra& g, const LieElement& x,
                                const PolyFun& phi);

/// Redundant closed form sum_j c_j phi'_y((ad y)^j x) with the universal
/// series coefficients; kept as a verification formula, never the
/// implementation path.
PolyFun lie_derivative_bch_formula(const LieAlgebra& g, const LieElement& x,
                                   const PolyFun& phi);

/// The symbolic words (ad y)^j x for j = 0..max_power, each an n-tuple of
/// polynomials in y.
std::vector<std::vector<PolyFun>> ad_y_powers(const LieAlgebra& g, const LieElement& x,
                                              int max_power);

}  // namespace nilrep

#endif
