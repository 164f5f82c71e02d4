#ifndef NILREP_BCH_HPP
#define NILREP_BCH_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "nilrep/lie_algebra.hpp"
#include "nilrep/polynomial.hpp"

namespace nilrep {

/// The truncated group-law series collected into right-nested bracket words.
///
/// A word is a string over {'x','y'}; its value in a Lie algebra is the
/// right-nested bracket [l_1,[l_2,[...,[l_{m-1}, l_m]...]]] of the letters
/// (a single letter is the element itself). The table at degree d holds the
/// total rational coefficient of every word of length d in the Dynkin
/// expansion of the group law, with words whose value vanishes identically
/// (doubled innermost letter) dropped. The degree-1 slice is x + y.
class BchSeries {
public:
  using WordTable = std::vector<std::pair<std::string, Rational>>;

  /// Shared table truncated at `max_degree` (cached; thread-safe).
  static const BchSeries& truncated(int max_degree);

  int max_degree() const { return static_cast<int>(by_degree_.size()); }
  const WordTable& words(int degree) const { return by_degree_.at(degree - 1); }

private:
  explicit BchSeries(int max_degree);
  std::vector<WordTable> by_degree_;
};

/// x * y via the series above, truncated at the algebra's nilpotency degree.
LieElement bch_product(const LieAlgebra& g, const LieElement& x, const LieElement& y);

/// The curve t -> (-t x) * y with y symbolic, collected by powers of t:
/// (-t x) * y = sum_k t^k J_k(y). J_0 is the identity map and J_1 is the
/// direction field that generates the Lie derivative.
struct TranslationJet {
  std::vector<PolyMap> t_power;

  const PolyMap& linear_part() const { return t_power.at(1); }
  /// The left-translation map L_x(y) = (-x) * y, i.e. the jet at t = 1.
  PolyMap left_translation() const;
};

TranslationJet translation_jet(const LieAlgebra& g, const LieElement& x);

/// L_x as an n-tuple of polynomials in the y-coordinates; every component
/// has degree at most the algebra's nilpotency degree.
PolyMap left_translation(const LieAlgebra& g, const LieElement& x);

/// Universal constants c_0..c_upto with
///   d/dt phi((-t x) * y)|_{t=0} = sum_j c_j phi'_y((ad y)^j x),
/// extracted symbolically from the series by reducing the words that are
/// linear in x. Cross-checked in the test suite against c_j = -B_j / j!
/// with Bernoulli numbers from an independent recurrence.
std::vector<Rational> bch_derivative_coeffs(int upto);

/// B_0..B_upto by the recurrence sum_{k<=m} C(m+1,k) B_k = 0 (B_1 = -1/2).
std::vector<Rational> bernoulli_numbers(int upto);

struct AxiomCheckResult {
  std::string axiom;
  long cases = 0;
  bool pass = true;
  std::string counterexample;
};

/// Exercises associativity, identity and inverses of the group law on
/// seeded pseudorandom triples. Any failure is a construction bug.
std::vector<AxiomCheckResult> group_axiom_check(const LieAlgebra& g, int samples,
                                                uint64_t seed);

}  // namespace nilrep

#endif
