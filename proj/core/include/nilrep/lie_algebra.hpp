#ifndef NILREP_LIE_ALGEBRA_HPP
#define NILREP_LIE_ALGEBRA_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "nilrep/errors.hpp"
#include "nilrep/linalg.hpp"
#include "nilrep/rational.hpp"

namespace nilrep {

/// Element of a Lie algebra, as coordinates in the chosen basis e_1..e_n.
using LieElement = Vec;

/// Nilpotent Lie algebra given by rational structure constants.
///
/// Structure constants are stored only for basis pairs i < j, so
/// antisymmetry holds by construction. Validation at construction checks the
/// Jacobi identity on all basis triples and computes the lower central
/// series; non-nilpotent input is rejected. The series and the nilpotency
/// degree N (convention: g^(N) != 0 = g^(N+1), abelian algebras have N = 1)
/// are cached, as is the center.
class LieAlgebra {
public:
  using StructureMap = std::map<std::pair<int, int>, Vec>;

  LieAlgebra(int dim, std::vector<std::string> basis_names, StructureMap structure,
             std::string name = "g");

  int dim() const { return dim_; }
  const std::string& name() const { return name_; }
  const std::vector<std::string>& basis_names() const { return basis_names_; }
  const StructureMap& structure() const { return structure_; }

  LieElement basis_element(int i) const;
  LieElement zero() const { return LieElement(dim_); }

  /// [a, b], bilinear extension of the structure constants.
  LieElement bracket(const LieElement& a, const LieElement& b) const;

  /// Matrix of ad(x): column j is [x, e_j].
  RationalMatrix ad_matrix(const LieElement& x) const;

  /// Chain g = g^(1) > g^(2) > ... > g^(N+1) = {0}.
  const std::vector<EchelonBasis>& lower_central_series() const { return lcs_; }

  /// N with g^(N) != 0 = g^(N+1).
  int nilpotency_degree() const { return degree_; }

  const EchelonBasis& center() const { return center_; }

  /// Echelonized basis of the Lie subalgebra generated by S, built from the
  /// spanning set S together with all bracket words (ad v_r)...(ad v_1) w of
  /// length r <= N-1 with letters in S. The span is closed under the
  /// bracket, and its dimension is at most sum_{r=0}^{N-1} |S|^{r+1}.
  EchelonBasis generated_subalgebra(const std::vector<LieElement>& generators) const;

  /// [e_i, e_j] for i < j; nullptr means zero.
  const Vec* structure_coeffs(int i, int j) const;

private:
  void validate_jacobi() const;
  void compute_series();

  int dim_;
  std::string name_;
  std::vector<std::string> basis_names_;
  StructureMap structure_;
  std::vector<EchelonBasis> lcs_;
  int degree_ = 0;
  EchelonBasis center_{0};
};

/// Bracket over any commutative coefficient ring R (rationals, polynomials):
/// [a, b]_k = sum_{i<j} (a_i b_j - a_j b_i) c_{ij}^k. `zero` supplies the
/// additive identity of R.
template <class R>
std::vector<R> bracket_in(const LieAlgebra& g, const std::vector<R>& a,
                          const std::vector<R>& b, const R& zero) {
  if (a.size() != static_cast<size_t>(g.dim()) || b.size() != a.size())
    throw DimensionMismatch("bracket operands do not match the algebra dimension");
  std::vector<R> out(a.size(), zero);
  for (const auto& [pair, coeffs] : g.structure()) {
    const auto [i, j] = pair;
    R term = a[i] * b[j] - a[j] * b[i];
    for (int k = 0; k < g.dim(); ++k) {
      if (!coeffs[k].is_zero()) out[k] += term * coeffs[k];
    }
  }
  return out;
}

}  // namespace nilrep

#endif
