#include "nilrep/sampling.hpp"

namespace nilrep {

Rational Sampler::rational() {
  const long num = static_cast<long>(rng_.bounded(2 * height_ + 1)) - height_;
  const long den = static_cast<long>(rng_.bounded(height_)) + 1;
  return Rational(num, den);
}

Rational Sampler::nonzero_rational() {
  for (;;) {
    Rational r = rational();
    if (!r.is_zero()) return r;
  }
}

Vec Sampler::element(int dim) {
  Vec v(dim);
  for (auto& c : v) c = rational();
  return v;
}

Vec Sampler::nonzero_element(int dim) {
  for (;;) {
    Vec v = element(dim);
    if (!is_zero_vec(v)) return v;
  }
}

Exponents Sampler::random_monomial(int vars, int degree_exact) {
  Exponents e(vars, 0);
  for (int d = 0; d < degree_exact; ++d) e[index(vars)] += 1;
  return e;
}

PolyFun Sampler::poly_of_degree(int vars, int degree) {
  PolyFun p(vars);
  // A few random terms of lower degree plus one forced top-degree term.
  const int extra = 3;
  for (int t = 0; t < extra; ++t) {
    const int d = degree > 0 ? index(degree) : 0;
    p.add_term(random_monomial(vars, d), rational());
  }
  Exponents top = random_monomial(vars, degree);
  p.add_term(top, -p.coefficient(top) + nonzero_rational());
  return p;
}

PolyFun Sampler::poly_up_to_degree(int vars, int degree) {
  PolyFun p(vars);
  const int terms = 3;
  for (int t = 0; t < terms; ++t)
    p.add_term(random_monomial(vars, index(degree + 1)), rational());
  return p;
}

}  // namespace nilrep
