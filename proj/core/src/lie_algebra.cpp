#include "nilrep/lie_algebra.hpp"

#include <sstream>

namespace nilrep {

LieAlgebra::LieAlgebra(int dim, std::vector<std::string> basis_names,
                       StructureMap structure, std::string name)
    : dim_(dim),
      name_(std::move(name)),
      basis_names_(std::move(basis_names)),
      structure_(std::move(structure)),
      center_(dim) {
  if (dim_ < 1) throw BadParameter("Lie algebra dimension must be at least 1");
  if (basis_names_.empty()) {
    for (int i = 0; i < dim_; ++i) basis_names_.push_back("e" + std::to_string(i + 1));
  }
  if (static_cast<int>(basis_names_.size()) != dim_)
    throw BadParameter("basis name count does not match the dimension");
  for (auto it = structure_.begin(); it != structure_.end();) {
    const auto [i, j] = it->first;
    if (i < 0 || j < 0 || i >= j || j >= dim_)
      throw BadParameter("bracket indices must satisfy 0 <= i < j < dim");
    if (static_cast<int>(it->second.size()) != dim_)
      throw BadParameter("bracket coefficient vector has wrong length");
    if (is_zero_vec(it->second)) {
      it = structure_.erase(it);
    } else {
      ++it;
    }
  }
  validate_jacobi();
  compute_series();

  // Center = joint kernel of v -> [v, e_j] over all j.
  RationalMatrix stacked(dim_ * dim_, dim_);
  for (int j = 0; j < dim_; ++j) {
    const RationalMatrix adj = ad_matrix(basis_element(j));
    // [v, e_j] = -ad(e_j) v
    for (int r = 0; r < dim_; ++r)
      for (int c = 0; c < dim_; ++c) stacked.at(j * dim_ + r, c) = -adj.at(r, c);
  }
  center_ = EchelonBasis(dim_);
  center_.extend(kernel_basis(stacked));
}

const Vec* LieAlgebra::structure_coeffs(int i, int j) const {
  const auto it = structure_.find({i, j});
  return it == structure_.end() ? nullptr : &it->second;
}

LieElement LieAlgebra::basis_element(int i) const {
  LieElement e(dim_);
  e[i] = Rational(1);
  return e;
}

LieElement LieAlgebra::bracket(const LieElement& a, const LieElement& b) const {
  return bracket_in<Rational>(*this, a, b, Rational(0));
}

RationalMatrix LieAlgebra::ad_matrix(const LieElement& x) const {
  if (static_cast<int>(x.size()) != dim_)
    throw DimensionMismatch("ad operand does not match the algebra dimension");
  RationalMatrix m(dim_, dim_);
  for (int j = 0; j < dim_; ++j) {
    const LieElement col = bracket(x, basis_element(j));
    for (int r = 0; r < dim_; ++r) m.at(r, j) = col[r];
  }
  return m;
}

void LieAlgebra::validate_jacobi() const {
  for (int i = 0; i < dim_; ++i) {
    for (int j = i + 1; j < dim_; ++j) {
      for (int k = j + 1; k < dim_; ++k) {
        Vec sum = bracket(basis_element(i), bracket(basis_element(j), basis_element(k)));
        add_scaled(sum, Rational(1),
                   bracket(basis_element(j), bracket(basis_element(k), basis_element(i))));
        add_scaled(sum, Rational(1),
                   bracket(basis_element(k), bracket(basis_element(i), basis_element(j))));
        if (!is_zero_vec(sum)) {
          std::ostringstream os;
          os << "Jacobi identity fails on basis triple (" << i << ", " << j << ", " << k
             << "): cyclic sum " << vec_to_string(sum);
          throw JacobiViolation(i, j, k, os.str());
        }
      }
    }
  }
}

void LieAlgebra::compute_series() {
  lcs_.clear();
  EchelonBasis current(dim_);
  for (int i = 0; i < dim_; ++i) current.insert(basis_element(i));
  lcs_.push_back(current);
  while (current.dim() > 0) {
    EchelonBasis next(dim_);
    for (int i = 0; i < dim_; ++i) {
      for (const auto& v : current.row_vectors()) next.insert(bracket(basis_element(i), v));
    }
    if (next.dim() >= current.dim()) {
      std::ostringstream os;
      os << "lower central series stabilizes at dimension " << next.dim()
         << "; the algebra is not nilpotent";
      throw NotNilpotent(os.str());
    }
    lcs_.push_back(next);
    current = std::move(next);
  }
  degree_ = static_cast<int>(lcs_.size()) - 1;
}

EchelonBasis LieAlgebra::generated_subalgebra(
    const std::vector<LieElement>& generators) const {
  if (generators.empty())
    throw BadParameter("generated_subalgebra needs a nonempty generating set");
  for (const auto& v : generators)
    if (static_cast<int>(v.size()) != dim_)
      throw DimensionMismatch("generator does not match the algebra dimension");
  EchelonBasis span(dim_);
  std::vector<LieElement> level = generators;
  span.extend(level);
  // Words (ad v_r)...(ad v_1) w, grown one ad-letter per level.
  for (int r = 1; r <= degree_ - 1; ++r) {
    std::vector<LieElement> next;
    next.reserve(generators.size() * level.size());
    for (const auto& v : generators)
      for (const auto& w : level) next.push_back(bracket(v, w));
    span.extend(next);
    level = std::move(next);
  }
  return span;
}

}  // namespace nilrep
