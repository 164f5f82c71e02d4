#ifndef NILREP_REPRESENTATION_HPP
#define NILREP_REPRESENTATION_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nilrep/bch.hpp"
#include "nilrep/lie_algebra.hpp"
#include "nilrep/linalg.hpp"
#include "nilrep/polynomial.hpp"

namespace nilrep {

/// Nilpotence/unipotence bound 2^(N-1) N + 1 for operators on the
/// representation space.
int representation_index_bound(const LieAlgebra& g);

/// Dimension and nilpotence bound 2^(N-1) + 1 for the bracket-word family
/// attached to a linear functional.
int functional_family_bound(const LieAlgebra& g);

/// Finite-dimensional space of polynomial functions on g, closed under the
/// Lie derivative by every basis element, held as a reduced echelon basis
/// over the graded-lexicographic monomial enumeration of P_cap. The reduced
/// basis is canonical, so membership and equality of spaces are decidable
/// and reproducible across runs.
struct RepSpace {
  LieAlgebra algebra;
  int degree_cap = 0;
  std::vector<Exponents> monomials;
  EchelonBasis coords{0};
  std::vector<PolyFun> basis;
  int max_degree = PolyFun::kZeroDegree;

  int dim() const { return coords.dim(); }

  /// Coordinates over the ambient monomial enumeration; nullopt when the
  /// polynomial does not fit under the degree cap.
  std::optional<Vec> ambient_coords(const PolyFun& phi) const;
  bool contains(const PolyFun& phi) const;
  /// Coefficients of phi over the echelonized basis, if phi lies in it.
  std::optional<Vec> coordinates(const PolyFun& phi) const;
};

/// Derivative-closure of span(seeds) inside P_degree_cap: applies the Lie
/// derivative by every basis generator breadth-first, echelonizing after
/// each wave, until the dimension stops growing. Optionally adjoins the
/// constant function afterwards.
RepSpace derivative_closure(const LieAlgebra& g, const std::vector<PolyFun>& seeds,
                            int degree_cap, bool adjoin_constants);

/// The representation space generated by the coordinate functionals:
/// contains g* and the constants, and sits inside P_N.
RepSpace fg_space(const LieAlgebra& g);

/// Closure of a finite polynomial family of degree <= max_degree; lands in
/// P_{max_degree * N} and is invariant under every translation.
RepSpace translation_invariant_span(const LieAlgebra& g,
                                    const std::vector<PolyFun>& family,
                                    int max_degree);

/// A representation of g by nilpotent operators on a RepSpace: one matrix
/// per basis element of g, extended linearly.
struct Representation {
  RepSpace space;
  std::vector<RationalMatrix> generators;
  int bound = 0;

  int dim() const { return space.dim(); }
};

/// Builds the generator matrices of the derivative action on any invariant
/// space; throws BadParameter if the space is not actually invariant.
Representation representation_on(RepSpace space);

/// The faithful nilpotent representation carried by fg_space(g).
Representation build_representation(const LieAlgebra& g);

/// Matrix of the derivative action of x (linear in x).
RationalMatrix lambda_dot_matrix(const Representation& rep, const LieElement& x);

/// Matrix of the group action of x: exp of the derivative action. Unipotent
/// with (lambda(x) - 1)^bound = 0.
RationalMatrix lambda_matrix(const Representation& rep, const LieElement& x);

struct FaithfulnessResult {
  bool faithful = false;
  int rank = 0;
  int kernel_dim = 0;
};

/// Rank of the linear map x -> lambda_dot(x); faithful iff rank = dim g.
FaithfulnessResult faithfulness_check(const Representation& rep);

/// Smallest k with lambda_dot(x)^k = 0, or bound+1 if the bound fails
/// (which would disprove the construction).
int nilpotence_index(const Representation& rep, const LieElement& x);
/// Smallest k with (lambda(x) - 1)^k = 0, or bound+1 on failure.
int unipotence_index(const Representation& rep, const LieElement& x);

struct PairCheckResult {
  std::string identity;
  long cases = 0;
  bool pass = true;
  std::string counterexample;
};

/// Exact matrix identities on seeded pairs: the derivative action takes
/// brackets to commutators, and the group action takes products to
/// products.
std::vector<PairCheckResult> homomorphism_check(const Representation& rep, int samples,
                                                uint64_t seed);

/// One bracket word w over letters {ad x0, ad y} applied to y, paired with
/// the polynomial p_w(y) = phi(w . y).
struct FamilyWord {
  std::string word;  // 'x' = ad x0, 'y' = ad y; rightmost letter acts first
  int x_count = 0;
  int y_count = 0;
  PolyFun value;

  FamilyWord() : value(0) {}
};

/// The family spanned by all p_w together with the constants. Only words of
/// length <= N-1 whose innermost letter is ad x0 can be nonzero, which caps
/// the dimension at 2^(N-1) + 1.
struct BracketWordFamily {
  RepSpace span;
  std::vector<FamilyWord> words;
  LieElement x0;
  PolyFun functional;
};

/// Builds the family for a linear functional phi and a base point x0.
/// Throws NotLinearFunctional unless phi is homogeneous of degree <= 1.
BracketWordFamily bracket_word_family(const LieAlgebra& g, const PolyFun& functional,
                                      const LieElement& x0);

struct FamilyCheckResult {
  int dim = 0;
  int bound = 0;
  bool dim_within_bound = false;
  bool invariant = false;
  int annihilating_power = 0;
  bool nilpotent_within_bound = false;
  /// Derivatives of each p_w land in the span of strictly later words
  /// (longer, or equal length with more x letters), plus constants for the
  /// empty word.
  bool stratum_filtration = false;

  bool pass() const {
    return dim_within_bound && invariant && nilpotent_within_bound && stratum_filtration;
  }
};

FamilyCheckResult check_bracket_word_family(const BracketWordFamily& family);

struct DerivativeNilpotencyResult {
  int degree = 0;
  int required_power = 0;
  int annihilating_power = 0;  // required_power + 1 when the bound fails
  bool zero_at_required = false;
};

/// Iterates the Lie derivative by x0 on phi and verifies that the power
/// 2^(N-1) deg(phi) + 1 annihilates it exactly.
DerivativeNilpotencyResult derivative_nilpotency_check(const LieAlgebra& g,
                                                       const LieElement& x0,
                                                       const PolyFun& phi);

}  // namespace nilrep

#endif
