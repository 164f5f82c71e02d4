#include "nilrep/representation.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "nilrep/regular_action.hpp"
#include "nilrep/sampling.hpp"

namespace nilrep {

namespace {

std::map<Exponents, int, GrlexLess> index_of(const std::vector<Exponents>& monomials) {
  std::map<Exponents, int, GrlexLess> index;
  for (size_t i = 0; i < monomials.size(); ++i) index.emplace(monomials[i], i);
  return index;
}

}  // namespace

int representation_index_bound(const LieAlgebra& g) {
  const int N = g.nilpotency_degree();
  return (1 << (N - 1)) * N + 1;
}

int functional_family_bound(const LieAlgebra& g) {
  return (1 << (g.nilpotency_degree() - 1)) + 1;
}

std::optional<Vec> RepSpace::ambient_coords(const PolyFun& phi) const {
  if (phi.vars() != algebra.dim()) return std::nullopt;
  Vec coords_vec(monomials.size());
  const auto index = index_of(monomials);
  for (const auto& [e, c] : phi.terms()) {
    const auto it = index.find(e);
    if (it == index.end()) return std::nullopt;
    coords_vec[it->second] = c;
  }
  return coords_vec;
}

bool RepSpace::contains(const PolyFun& phi) const {
  const auto v = ambient_coords(phi);
  return v && coords.contains(*v);
}

std::optional<Vec> RepSpace::coordinates(const PolyFun& phi) const {
  const auto v = ambient_coords(phi);
  if (!v) return std::nullopt;
  return coords.coordinates(*v);
}

RepSpace derivative_closure(const LieAlgebra& g, const std::vector<PolyFun>& seeds,
                            int degree_cap, bool adjoin_constants) {
  const int n = g.dim();
  std::vector<Exponents> monomials = monomials_up_to(n, degree_cap);
  const int ambient = static_cast<int>(monomials.size());
  RepSpace space{g,      degree_cap, std::move(monomials), EchelonBasis(ambient),
                 {},     PolyFun::kZeroDegree};
  const auto index = index_of(space.monomials);

  const auto to_coords = [&](const PolyFun& phi) {
    return poly_to_coords(phi, index, ambient);
  };

  std::vector<TranslationJet> jets;
  jets.reserve(n);
  for (int i = 0; i < n; ++i) jets.push_back(translation_jet(g, g.basis_element(i)));

  std::vector<PolyFun> wave;
  for (const auto& seed : seeds) {
    if (seed.vars() != n)
      throw DimensionMismatch("seed polynomial does not match the algebra dimension");
    if (space.coords.insert(to_coords(seed))) wave.push_back(seed);
  }
  while (!wave.empty()) {
    std::vector<PolyFun> next;
    for (const auto& phi : wave) {
      for (int i = 0; i < n; ++i) {
        PolyFun psi = lie_derivative(jets[i], phi);
        if (psi.is_zero()) continue;
        if (space.coords.insert(to_coords(psi))) next.push_back(std::move(psi));
      }
    }
    wave = std::move(next);
  }
  if (adjoin_constants)
    space.coords.insert(to_coords(PolyFun::constant(n, Rational(1))));

  for (const auto& row : space.coords.row_vectors()) {
    space.basis.push_back(coords_to_poly(row, space.monomials, n));
    space.max_degree = std::max(space.max_degree, space.basis.back().degree());
  }
  return space;
}

RepSpace fg_space(const LieAlgebra& g) {
  std::vector<PolyFun> functionals;
  for (int i = 0; i < g.dim(); ++i)
    functionals.push_back(PolyFun::variable(g.dim(), i));
  return derivative_closure(g, functionals, g.nilpotency_degree(), true);
}

RepSpace translation_invariant_span(const LieAlgebra& g,
                                    const std::vector<PolyFun>& family,
                                    int max_degree) {
  for (const auto& phi : family) {
    if (phi.degree() > max_degree)
      throw BadParameter("family member exceeds the stated degree bound");
  }
  return derivative_closure(g, family, max_degree * g.nilpotency_degree(), false);
}

Representation representation_on(RepSpace space) {
  const LieAlgebra& g = space.algebra;
  const int n = g.dim();
  const int d = space.dim();
  std::vector<RationalMatrix> generators;
  generators.reserve(n);
  for (int i = 0; i < n; ++i) {
    const TranslationJet jet = translation_jet(g, g.basis_element(i));
    RationalMatrix m(d, d);
    for (int c = 0; c < d; ++c) {
      const PolyFun image = lie_derivative(jet, space.basis[c]);
      const auto coords = space.coordinates(image);
      if (!coords)
        throw BadParameter("space is not invariant under the derivative action");
      for (int r = 0; r < d; ++r) m.at(r, c) = (*coords)[r];
    }
    generators.push_back(std::move(m));
  }
  const int bound = representation_index_bound(g);
  return Representation{std::move(space), std::move(generators), bound};
}

Representation build_representation(const LieAlgebra& g) {
  return representation_on(fg_space(g));
}

RationalMatrix lambda_dot_matrix(const Representation& rep, const LieElement& x) {
  if (static_cast<int>(x.size()) != rep.space.algebra.dim())
    throw DimensionMismatch("element does not match the algebra dimension");
  RationalMatrix m(rep.dim(), rep.dim());
  for (size_t i = 0; i < rep.generators.size(); ++i) {
    if (!x[i].is_zero()) m += rep.generators[i] * x[i];
  }
  return m;
}

RationalMatrix lambda_matrix(const Representation& rep, const LieElement& x) {
  return exp_nilpotent(lambda_dot_matrix(rep, x), rep.bound);
}

FaithfulnessResult faithfulness_check(const Representation& rep) {
  const int n = rep.space.algebra.dim();
  const int d = rep.dim();
  RationalMatrix flat(d * d, n);
  for (int i = 0; i < n; ++i)
    for (int r = 0; r < d; ++r)
      for (int c = 0; c < d; ++c) flat.at(r * d + c, i) = rep.generators[i].at(r, c);
  FaithfulnessResult res;
  res.rank = rref(flat).rank;
  res.kernel_dim = n - res.rank;
  res.faithful = res.rank == n;
  return res;
}

namespace {

int smallest_vanishing_power(const RationalMatrix& a, int bound) {
  RationalMatrix power = a;
  for (int k = 1; k <= bound; ++k) {
    if (power.is_zero()) return k;
    power = power * a;
  }
  return power.is_zero() ? bound + 1 : bound + 2;
}

}  // namespace

int nilpotence_index(const Representation& rep, const LieElement& x) {
  const int k = smallest_vanishing_power(lambda_dot_matrix(rep, x), rep.bound);
  return std::min(k, rep.bound + 1);
}

int unipotence_index(const Representation& rep, const LieElement& x) {
  const RationalMatrix u =
      lambda_matrix(rep, x) - RationalMatrix::identity(rep.dim());
  return std::min(smallest_vanishing_power(u, rep.bound), rep.bound + 1);
}

std::vector<PairCheckResult> homomorphism_check(const Representation& rep, int samples,
                                                uint64_t seed) {
  if (samples < 1) throw BadParameter("need at least one sample");
  const LieAlgebra& g = rep.space.algebra;
  Sampler sampler(seed);
  PairCheckResult algebra_hom{"bracket-to-commutator", 0, true, ""};
  PairCheckResult group_hom{"product-to-product", 0, true, ""};
  for (int s = 0; s < samples; ++s) {
    const LieElement x = sampler.element(g.dim());
    const LieElement y = sampler.element(g.dim());
    if (algebra_hom.pass) {
      algebra_hom.cases++;
      const RationalMatrix mx = lambda_dot_matrix(rep, x);
      const RationalMatrix my = lambda_dot_matrix(rep, y);
      const RationalMatrix lhs = lambda_dot_matrix(rep, g.bracket(x, y));
      if (lhs != mx * my - my * mx) {
        algebra_hom.pass = false;
        algebra_hom.counterexample =
            "x=" + vec_to_string(x) + " y=" + vec_to_string(y);
      }
    }
    if (group_hom.pass) {
      group_hom.cases++;
      const RationalMatrix lhs = lambda_matrix(rep, bch_product(g, x, y));
      if (lhs != lambda_matrix(rep, x) * lambda_matrix(rep, y)) {
        group_hom.pass = false;
        group_hom.counterexample =
            "x=" + vec_to_string(x) + " y=" + vec_to_string(y);
      }
    }
  }
  return {algebra_hom, group_hom};
}

BracketWordFamily bracket_word_family(const LieAlgebra& g, const PolyFun& functional,
                                      const LieElement& x0) {
  if (functional.vars() != g.dim())
    throw DimensionMismatch("functional does not match the algebra dimension");
  if (static_cast<int>(x0.size()) != g.dim())
    throw DimensionMismatch("base point does not match the algebra dimension");
  for (const auto& [e, c] : functional.terms()) {
    (void)c;
    if (total_degree(e) != 1)
      throw NotLinearFunctional("family seed must be a linear functional");
  }
  const int n = g.dim();
  const int N = g.nilpotency_degree();

  std::vector<PolyFun> x_sym, y_sym;
  for (int i = 0; i < n; ++i) {
    x_sym.push_back(PolyFun::constant(n, x0[i]));
    y_sym.push_back(PolyFun::variable(n, i));
  }
  const PolyFun zero(n);
  Vec functional_coeffs(n);
  for (int i = 0; i < n; ++i) {
    Exponents e(n, 0);
    e[i] = 1;
    functional_coeffs[i] = functional.coefficient(e);
  }

  std::vector<FamilyWord> words;

  // Words of length r <= N-1; a nonzero value needs the innermost letter to
  // be ad x0 (otherwise the word ends in [y, y]). At most 2^(N-1) words.
  for (int len = 0; len <= N - 1; ++len) {
    for (int mask = 0; mask < (1 << len); ++mask) {
      std::string word(len, 'y');
      for (int b = 0; b < len; ++b)
        if (mask & (1 << b)) word[b] = 'x';
      if (len >= 1 && word.back() != 'x') continue;
      FamilyWord fw;
      fw.word = word;
      fw.x_count = static_cast<int>(std::count(word.begin(), word.end(), 'x'));
      fw.y_count = len - fw.x_count;
      std::vector<PolyFun> u = y_sym;
      for (int i = len - 1; i >= 0; --i)
        u = bracket_in<PolyFun>(g, word[i] == 'x' ? x_sym : y_sym, u, zero);
      PolyFun p(n);
      for (int i = 0; i < n; ++i) {
        if (!functional_coeffs[i].is_zero()) p += u[i] * functional_coeffs[i];
      }
      fw.value = std::move(p);
      words.push_back(std::move(fw));
    }
  }

  std::vector<Exponents> monomials = monomials_up_to(n, N);
  const int ambient = static_cast<int>(monomials.size());
  RepSpace span{g,  N, std::move(monomials), EchelonBasis(ambient),
                {}, PolyFun::kZeroDegree};
  const auto index = index_of(span.monomials);
  for (const auto& fw : words)
    span.coords.insert(poly_to_coords(fw.value, index, ambient));
  span.coords.insert(
      poly_to_coords(PolyFun::constant(n, Rational(1)), index, ambient));
  for (const auto& row : span.coords.row_vectors()) {
    span.basis.push_back(coords_to_poly(row, span.monomials, n));
    span.max_degree = std::max(span.max_degree, span.basis.back().degree());
  }
  return BracketWordFamily{std::move(span), std::move(words), x0, functional};
}

FamilyCheckResult check_bracket_word_family(const BracketWordFamily& family) {
  const LieAlgebra& g = family.span.algebra;
  const int bound = functional_family_bound(g);
  FamilyCheckResult res;
  res.dim = family.span.dim();
  res.bound = bound;
  res.dim_within_bound = res.dim <= bound;

  const TranslationJet jet = translation_jet(g, family.x0);

  // Invariance, and the matrix of the action on the family for nilpotency.
  res.invariant = true;
  const int d = family.span.dim();
  RationalMatrix action(d, d);
  for (int c = 0; c < d; ++c) {
    const PolyFun image = lie_derivative(jet, family.span.basis[c]);
    const auto coords = family.span.coordinates(image);
    if (!coords) {
      res.invariant = false;
      break;
    }
    for (int r = 0; r < d; ++r) action.at(r, c) = (*coords)[r];
  }
  if (res.invariant) {
    RationalMatrix power = RationalMatrix::identity(d);
    int k = 0;
    while (k <= bound && !power.is_zero()) {
      power = power * action;
      ++k;
    }
    res.annihilating_power = k;
    res.nilpotent_within_bound = power.is_zero() && k <= bound;
  }

  // Stratum filtration: the derivative of p_w lies in the span of words
  // that are longer, or of equal length with more x letters; constants are
  // allowed for the empty word.
  res.stratum_filtration = true;
  const auto index = index_of(family.span.monomials);
  const int ambient = static_cast<int>(family.span.monomials.size());
  for (const auto& fw : family.words) {
    const PolyFun image = lie_derivative(jet, fw.value);
    if (image.is_zero()) continue;
    EchelonBasis stratum(ambient);
    for (const auto& other : family.words) {
      const int len = fw.x_count + fw.y_count;
      const int other_len = other.x_count + other.y_count;
      if (other_len > len || (other_len == len && other.x_count > fw.x_count))
        stratum.insert(poly_to_coords(other.value, index, ambient));
    }
    if (fw.word.empty()) {
      stratum.insert(poly_to_coords(PolyFun::constant(g.dim(), Rational(1)), index,
                                    ambient));
    }
    if (!stratum.contains(poly_to_coords(image, index, ambient))) {
      res.stratum_filtration = false;
      break;
    }
  }
  return res;
}

DerivativeNilpotencyResult derivative_nilpotency_check(const LieAlgebra& g,
                                                       const LieElement& x0,
                                                       const PolyFun& phi) {
  const int N = g.nilpotency_degree();
  const int degree = std::max(phi.degree(), 0);
  DerivativeNilpotencyResult res;
  res.degree = degree;
  res.required_power = (1 << (N - 1)) * degree + 1;
  const TranslationJet jet = translation_jet(g, x0);
  PolyFun current = phi;
  int k = 0;
  while (k < res.required_power && !current.is_zero()) {
    current = lie_derivative(jet, current);
    ++k;
  }
  if (current.is_zero()) {
    res.annihilating_power = k;
    res.zero_at_required = true;
  } else {
    res.annihilating_power = res.required_power + 1;
    res.zero_at_required = false;
  }
  return res;
}

}  // namespace nilrep
