#include "nilrep/regular_action.hpp"

namespace nilrep {

PolyFun translate_poly(const LieAlgebra& g, const LieElement& x, const PolyFun& phi) {
  if (phi.vars() != g.dim())
    throw DimensionMismatch("polynomial variable count does not match the algebra");
  return compose(phi, left_translation(g, x));
}

PolyFun lie_derivative(const TranslationJet& jet, const PolyFun& phi) {
  // phi(J_0 + t J_1 + ...) has t-linear slice phi'_y(J_1) since J_0 = id.
  return directional_derivative(phi, jet.linear_part());
}

PolyFun lie_derivative(const LieAlgebra& g, const LieElement& x, const PolyFun& phi) {
  if (phi.vars() != g.dim())
    throw DimensionMismatch("polynomial variable count does not match the algebra");
  return lie_derivative(translation_jet(g, x), phi);
}

PolyFun lie_derivative_composed(const LieAlgebra& g, const LieElement& x,
                                const PolyFun& phi) {
  if (phi.vars() != g.dim())
    throw DimensionMismatch("polynomial variable count does not match the algebra");
  const int n = g.dim();
  const TranslationJet jet = translation_jet(g, x);
  // Lift the jet to n+1 variables with t in slot 0: M_i(t, y) = sum_k t^k J_k,i(y).
  PolyMap lifted = PolyMap::zero(n, n + 1);
  for (size_t k = 0; k < jet.t_power.size(); ++k) {
    for (int i = 0; i < n; ++i) {
      for (const auto& [e, c] : jet.t_power[k].components[i].terms()) {
        Exponents lifted_e(n + 1, 0);
        lifted_e[0] = static_cast<int>(k);
        for (int v = 0; v < n; ++v) lifted_e[v + 1] = e[v];
        lifted.components[i].add_term(lifted_e, c);
      }
    }
  }
  const PolyFun composed = compose(phi, lifted);
  PolyFun out(n);
  for (const auto& [e, c] : composed.terms()) {
    if (e[0] != 1) continue;
    Exponents dropped(e.begin() + 1, e.end());
    out.add_term(dropped, c);
  }
  return out;
}

std::vector<std::vector<PolyFun>> ad_y_powers(const LieAlgebra& g, const LieElement& x,
                                              int max_power) {
  const int n = g.dim();
  std::vector<PolyFun> y_sym, current;
  for (int i = 0; i < n; ++i) {
    y_sym.push_back(PolyFun::variable(n, i));
    current.push_back(PolyFun::constant(n, x[i]));
  }
  const PolyFun zero(n);
  std::vector<std::vector<PolyFun>> powers;
  powers.push_back(current);
  for (int j = 1; j <= max_power; ++j) {
    current = bracket_in<PolyFun>(g, y_sym, current, zero);
    powers.push_back(current);
  }
  return powers;
}

PolyFun lie_derivative_bch_formula(const LieAlgebra& g, const LieElement& x,
                                   const PolyFun& phi) {
  if (phi.vars() != g.dim())
    throw DimensionMismatch("polynomial variable count does not match the algebra");
  const int N = g.nilpotency_degree();
  const std::vector<Rational> coeffs = bch_derivative_coeffs(N);
  const auto words = ad_y_powers(g, x, N);
  PolyFun out(g.dim());
  for (int j = 0; j <= N; ++j) {
    if (coeffs[j].is_zero()) continue;
    PolyMap direction;
    direction.components = words[j];
    out += directional_derivative(phi, direction) * coeffs[j];
  }
  return out;
}

}  // namespace nilrep
