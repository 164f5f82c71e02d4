#include "nilrep/linalg.hpp"

#include <algorithm>

#include "nilrep/errors.hpp"

namespace nilrep {

RationalMatrix RationalMatrix::identity(int n) {
  RationalMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Rational(1);
  return m;
}

bool RationalMatrix::is_zero() const {
  for (const auto& e : entries_)
    if (!e.is_zero()) return false;
  return true;
}

RationalMatrix& RationalMatrix::operator+=(const RationalMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw DimensionMismatch("matrix addition shape mismatch");
  for (size_t i = 0; i < entries_.size(); ++i) entries_[i] += o.entries_[i];
  return *this;
}

RationalMatrix& RationalMatrix::operator-=(const RationalMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw DimensionMismatch("matrix subtraction shape mismatch");
  for (size_t i = 0; i < entries_.size(); ++i) entries_[i] -= o.entries_[i];
  return *this;
}

RationalMatrix& RationalMatrix::operator*=(const Rational& c) {
  for (auto& e : entries_) e *= c;
  return *this;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product shape mismatch");
  RationalMatrix out(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i) {
    for (int k = 0; k < a.cols_; ++k) {
      const Rational& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < b.cols_; ++j) {
        const Rational& bkj = b.at(k, j);
        if (!bkj.is_zero()) out.at(i, j) += aik * bkj;
      }
    }
  }
  return out;
}

bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

Vec RationalMatrix::apply(const Vec& v) const {
  if (static_cast<int>(v.size()) != cols_)
    throw DimensionMismatch("matrix-vector shape mismatch");
  Vec out(rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (!at(i, j).is_zero()) out[i] += at(i, j) * v[j];
  return out;
}

RrefResult rref(const RationalMatrix& m) {
  RrefResult res;
  res.matrix = m;
  RationalMatrix& a = res.matrix;
  const int rows = a.rows(), cols = a.cols();
  int lead = 0;
  for (int col = 0; col < cols && lead < rows; ++col) {
    int pivot = -1;
    for (int r = lead; r < rows; ++r) {
      if (!a.at(r, col).is_zero()) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != lead)
      for (int c = 0; c < cols; ++c) std::swap(a.at(pivot, c), a.at(lead, c));
    const Rational inv = Rational(1) / a.at(lead, col);
    for (int c = 0; c < cols; ++c) a.at(lead, c) *= inv;
    for (int r = 0; r < rows; ++r) {
      if (r == lead || a.at(r, col).is_zero()) continue;
      const Rational factor = a.at(r, col);
      for (int c = 0; c < cols; ++c) a.at(r, c) -= factor * a.at(lead, c);
    }
    res.pivot_columns.push_back(col);
    ++lead;
  }
  res.rank = lead;
  return res;
}

std::vector<Vec> kernel_basis(const RationalMatrix& m) {
  const RrefResult r = rref(m);
  const int cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (int p : r.pivot_columns) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (int free_col = 0; free_col < cols; ++free_col) {
    if (is_pivot[free_col]) continue;
    Vec v(cols);
    v[free_col] = Rational(1);
    for (int row = 0; row < r.rank; ++row)
      v[r.pivot_columns[row]] = -r.matrix.at(row, free_col);
    basis.push_back(std::move(v));
  }
  return basis;
}

RationalMatrix exp_nilpotent(const RationalMatrix& m, int index_bound) {
  if (!m.is_square()) throw DimensionMismatch("exp_nilpotent needs a square matrix");
  if (index_bound < 0) throw BadParameter("negative nilpotency index bound");
  const int n = m.rows();
  if (index_bound == 0 && n > 0)
    throw NotNilpotent("m^0 is the identity, never zero");
  RationalMatrix sum(n, n);
  RationalMatrix power = RationalMatrix::identity(n);
  Rational factorial(1);
  bool vanished = false;
  for (int k = 0; k < index_bound; ++k) {
    if (k > 0) {
      power = power * m;
      factorial *= Rational(k);
      if (power.is_zero()) {
        vanished = true;
        break;
      }
    }
    sum += power * (Rational(1) / factorial);
  }
  if (!vanished && !(power * m).is_zero())
    throw NotNilpotent("matrix power does not vanish at the stated index bound");
  return sum;
}

Vec EchelonBasis::reduce(Vec v) const {
  if (static_cast<int>(v.size()) != cols_)
    throw DimensionMismatch("echelon basis column count mismatch");
  for (size_t i = 0; i < rows_.size(); ++i) {
    const Rational& c = v[pivots_[i]];
    if (!c.is_zero()) add_scaled(v, -c, rows_[i]);
  }
  return v;
}

std::optional<Vec> EchelonBasis::coordinates(const Vec& v) const {
  if (!contains(v)) return std::nullopt;
  // Rows are reduced echelon: the pivot coordinates of v are the coefficients.
  Vec coords(rows_.size());
  for (size_t i = 0; i < rows_.size(); ++i) coords[i] = v[pivots_[i]];
  return coords;
}

bool EchelonBasis::insert(Vec v) {
  if (static_cast<int>(v.size()) != cols_)
    throw DimensionMismatch("echelon basis column count mismatch");
  v = reduce(std::move(v));
  int pivot = -1;
  for (int c = 0; c < cols_; ++c) {
    if (!v[c].is_zero()) {
      pivot = c;
      break;
    }
  }
  if (pivot < 0) return false;
  const Rational inv = Rational(1) / v[pivot];
  for (auto& c : v) c *= inv;
  for (size_t i = 0; i < rows_.size(); ++i) {
    const Rational& c = rows_[i][pivot];
    if (!c.is_zero()) add_scaled(rows_[i], -c, v);
  }
  const auto pos = std::upper_bound(pivots_.begin(), pivots_.end(), pivot);
  const size_t idx = static_cast<size_t>(pos - pivots_.begin());
  pivots_.insert(pos, pivot);
  rows_.insert(rows_.begin() + idx, std::move(v));
  return true;
}

int EchelonBasis::extend(const std::vector<Vec>& candidates) {
  int added = 0;
  for (const auto& v : candidates)
    if (insert(v)) ++added;
  return added;
}

bool operator==(const EchelonBasis& a, const EchelonBasis& b) {
  return a.cols_ == b.cols_ && a.rows_ == b.rows_;
}

std::pair<EchelonBasis, int> extend_basis(EchelonBasis current,
                                          const std::vector<Vec>& candidates) {
  const int added = current.extend(candidates);
  return {std::move(current), added};
}

}  // namespace nilrep
