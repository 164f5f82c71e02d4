#ifndef NILREP_RATIONAL_HPP
#define NILREP_RATIONAL_HPP

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace nilrep {

/// Exact rational scalar over arbitrary-precision integers, always kept in
/// canonical reduced form (positive denominator, gcd(|num|, den) = 1).
///
/// Text format: optional leading '-', decimal digits, optionally '/' and a
/// positive denominator, e.g. "-1/12", "3", "0". Emission is always
/// canonical; parsing accepts unreduced input and canonicalizes.
class Rational {
public:
  Rational() : v_(0) {}
  Rational(int n) : v_(n) {}  // NOLINT: implicit by design, mirrors integer literals
  Rational(long n) : v_(static_cast<signed long>(n)) {}
  Rational(long num, long den);
  explicit Rational(mpq_class v) : v_(std::move(v)) {}

  /// Strict parse of the text format above; throws ParseError otherwise.
  static Rational parse(std::string_view text);

  std::string str() const { return v_.get_str(); }
  std::string numerator_str() const { return v_.get_num().get_str(); }
  std::string denominator_str() const { return v_.get_den().get_str(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  int sign() const { return sgn(v_); }
  Rational abs() const { return Rational(mpq_class(::abs(v_))); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  Rational operator-() const { return Rational(mpq_class(-v_)); }

  friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
  friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
  friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
  friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

  const mpq_class& raw() const { return v_; }

private:
  mpq_class v_;
};

/// Coordinate vector over the rationals.
using Vec = std::vector<Rational>;

bool is_zero_vec(const Vec& v);
Vec& add_scaled(Vec& dst, const Rational& c, const Vec& src);
Vec negated(Vec v);
std::string vec_to_string(const Vec& v);

}  // namespace nilrep

#endif
