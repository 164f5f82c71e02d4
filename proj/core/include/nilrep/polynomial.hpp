#ifndef NILREP_POLYNOMIAL_HPP
#define NILREP_POLYNOMIAL_HPP

#include <map>
#include <string>
#include <vector>

#include "nilrep/rational.hpp"

namespace nilrep {

/// Exponent multi-index of a monomial; length = number of variables.
using Exponents = std::vector<int>;

int total_degree(const Exponents& e);

/// Graded-lexicographic order: lower total degree first, ties broken so that
/// y1^2 < y1 y2 < y2^2 (descending lexicographic exponent tuples within a
/// degree). This is the canonical term order for printing, hashing and the
/// coordinate bridge to exact linear algebra.
struct GrlexLess {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Sparse multivariate polynomial function over the rationals.
/// Invariant: no zero coefficients stored. The degree of the zero polynomial
/// is the sentinel kZeroDegree (standing in for -infinity).
class PolyFun {
public:
  static constexpr int kZeroDegree = -1;

  using TermMap = std::map<Exponents, Rational, GrlexLess>;

  explicit PolyFun(int vars) : vars_(vars) {}
  static PolyFun constant(int vars, const Rational& c);
  static PolyFun variable(int vars, int index);
  static PolyFun monomial(int vars, Exponents exps, const Rational& c);

  int vars() const { return vars_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;
  const TermMap& terms() const { return terms_; }
  Rational coefficient(const Exponents& e) const;

  void add_term(const Exponents& e, const Rational& c);

  PolyFun& operator+=(const PolyFun& o);
  PolyFun& operator-=(const PolyFun& o);
  PolyFun& operator*=(const Rational& c);
  friend PolyFun operator+(PolyFun a, const PolyFun& b) { a += b; return a; }
  friend PolyFun operator-(PolyFun a, const PolyFun& b) { a -= b; return a; }
  friend PolyFun operator*(const PolyFun& a, const PolyFun& b);
  friend PolyFun operator*(PolyFun a, const Rational& c) { a *= c; return a; }
  friend PolyFun operator*(const Rational& c, PolyFun a) { a *= c; return a; }
  PolyFun operator-() const;
  friend bool operator==(const PolyFun& a, const PolyFun& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const PolyFun& a, const PolyFun& b) { return !(a == b); }

  Rational evaluate(const Vec& point) const;
  PolyFun partial(int var) const;

  /// Component k is the homogeneous degree-k part; the list sums to *this.
  /// Empty for the zero polynomial.
  std::vector<PolyFun> homogeneous_components() const;

  std::string to_string(const std::vector<std::string>& var_names = {}) const;

private:
  int vars_;
  TermMap terms_;
};

/// Polynomial self-map: n polynomial components in shared variables.
struct PolyMap {
  std::vector<PolyFun> components;

  static PolyMap identity(int n);
  static PolyMap zero(int size, int vars);

  int size() const { return static_cast<int>(components.size()); }
  int vars() const { return components.empty() ? 0 : components[0].vars(); }
  int max_degree() const;
  Vec evaluate(const Vec& point) const;

  friend bool operator==(const PolyMap& a, const PolyMap& b) {
    return a.components == b.components;
  }
};

/// (phi o f)(y) = phi(f(y)); needs phi.vars() == f.size().
PolyFun compose(const PolyFun& phi, const PolyMap& f);

/// phi'_y(z) = d/ds phi(y + s z) at s = 0 for a concrete direction z.
PolyFun directional_derivative(const PolyFun& phi, const Vec& z);
/// Same with a polynomial direction field z(y): sum_i z_i(y) d(phi)/dy_i.
PolyFun directional_derivative(const PolyFun& phi, const PolyMap& z);

/// All exponent multi-indices with total degree <= max_degree, listed in
/// graded-lexicographic order. Its size is the binomial count
/// C(max_degree + vars, vars).
std::vector<Exponents> monomials_up_to(int vars, int max_degree);

/// Bridge to exact linear algebra over a fixed monomial enumeration.
Vec poly_to_coords(const PolyFun& phi, const std::map<Exponents, int, GrlexLess>& index,
                   int size);
PolyFun coords_to_poly(const Vec& coords, const std::vector<Exponents>& monomials,
                       int vars);

}  // namespace nilrep

#endif
