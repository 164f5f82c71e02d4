#ifndef NILREP_LINALG_HPP
#define NILREP_LINALG_HPP

#include <optional>
#include <utility>
#include <vector>

#include "nilrep/rational.hpp"

namespace nilrep {

/// Dense matrix over the rationals, row-major.
class RationalMatrix {
public:
  RationalMatrix() : rows_(0), cols_(0) {}
  RationalMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), entries_(static_cast<size_t>(rows) * cols) {}

  static RationalMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& at(int r, int c) { return entries_[static_cast<size_t>(r) * cols_ + c]; }
  const Rational& at(int r, int c) const {
    return entries_[static_cast<size_t>(r) * cols_ + c];
  }

  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }

  RationalMatrix& operator+=(const RationalMatrix& o);
  RationalMatrix& operator-=(const RationalMatrix& o);
  RationalMatrix& operator*=(const Rational& c);
  friend RationalMatrix operator+(RationalMatrix a, const RationalMatrix& b) {
    a += b;
    return a;
  }
  friend RationalMatrix operator-(RationalMatrix a, const RationalMatrix& b) {
    a -= b;
    return a;
  }
  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalMatrix operator*(RationalMatrix a, const Rational& c) {
    a *= c;
    return a;
  }
  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b);
  friend bool operator!=(const RationalMatrix& a, const RationalMatrix& b) {
    return !(a == b);
  }

  Vec apply(const Vec& v) const;

private:
  int rows_, cols_;
  std::vector<Rational> entries_;
};

struct RrefResult {
  RationalMatrix matrix;
  int rank = 0;
  std::vector<int> pivot_columns;
};

/// Reduced row echelon form; preserves the shape (zero rows stay at the
/// bottom) and the row space.
RrefResult rref(const RationalMatrix& m);

/// Basis of the null space {v : m v = 0}; size = cols - rank.
std::vector<Vec> kernel_basis(const RationalMatrix& m);

/// exp(m) = sum_{k < index_bound} m^k / k! for nilpotent m.
/// Throws NotNilpotent if m^index_bound != 0.
RationalMatrix exp_nilpotent(const RationalMatrix& m, int index_bound);

/// Subspace of Q^cols kept permanently in reduced echelon form. Reduced
/// echelon bases are canonical, so equality of spans is equality of rows.
class EchelonBasis {
public:
  explicit EchelonBasis(int cols) : cols_(cols) {}

  int cols() const { return cols_; }
  int dim() const { return static_cast<int>(rows_.size()); }
  const std::vector<Vec>& row_vectors() const { return rows_; }
  const std::vector<int>& pivot_columns() const { return pivots_; }

  /// Residual of v after eliminating all pivot coordinates.
  Vec reduce(Vec v) const;
  bool contains(const Vec& v) const { return is_zero_vec(reduce(v)); }

  /// Coefficients c with v = sum c_i row_i, or nullopt if v is outside.
  std::optional<Vec> coordinates(const Vec& v) const;

  /// Adjoins v if independent; keeps reduced echelon form. Returns whether
  /// the dimension grew.
  bool insert(Vec v);

  /// Adjoins every candidate; returns the dimension growth.
  int extend(const std::vector<Vec>& candidates);

  friend bool operator==(const EchelonBasis& a, const EchelonBasis& b);
  friend bool operator!=(const EchelonBasis& a, const EchelonBasis& b) {
    return !(a == b);
  }

private:
  int cols_;
  std::vector<Vec> rows_;    // sorted by pivot column
  std::vector<int> pivots_;  // strictly increasing
};

/// Span-closure workhorse: extends an echelonized basis by candidate
/// vectors. Returns the new basis and the number of added dimensions.
std::pair<EchelonBasis, int> extend_basis(EchelonBasis current,
                                          const std::vector<Vec>& candidates);

}  // namespace nilrep

#endif
