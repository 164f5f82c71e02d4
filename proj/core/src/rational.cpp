#include "nilrep/rational.hpp"

#include <cctype>
#include <ostream>
#include <sstream>

#include "nilrep/errors.hpp"

namespace nilrep {

Rational::Rational(long num, long den) {
  if (den == 0) throw BadParameter("rational with zero denominator");
  v_ = mpq_class(mpz_class(num), mpz_class(den));
  v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw BadParameter("division by zero rational");
  v_ /= o.v_;
  return *this;
}

Rational Rational::parse(std::string_view text) {
  const auto fail = [&] {
    throw ParseError("malformed rational \"" + std::string(text) + "\"");
  };
  size_t pos = 0;
  const size_t n = text.size();
  if (pos < n && text[pos] == '-') ++pos;
  const size_t num_begin = pos;
  while (pos < n && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos == num_begin) fail();
  const size_t num_end = pos;
  std::string den_digits;
  if (pos < n) {
    if (text[pos] != '/') fail();
    ++pos;
    const size_t den_begin = pos;
    while (pos < n && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == den_begin || pos != n) fail();
    den_digits.assign(text.substr(den_begin, pos - den_begin));
  }
  std::string num_digits(text.substr(0, num_end));
  mpq_class v;
  if (den_digits.empty()) {
    v = mpq_class(mpz_class(num_digits, 10));
  } else {
    mpz_class den(den_digits, 10);
    if (den == 0) fail();
    v = mpq_class(mpz_class(num_digits, 10), den);
    v.canonicalize();
  }
  return Rational(std::move(v));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.v_.get_str();
}

bool is_zero_vec(const Vec& v) {
  for (const auto& c : v)
    if (!c.is_zero()) return false;
  return true;
}

Vec& add_scaled(Vec& dst, const Rational& c, const Vec& src) {
  for (size_t i = 0; i < dst.size(); ++i) dst[i] += c * src[i];
  return dst;
}

Vec negated(Vec v) {
  for (auto& c : v) c = -c;
  return v;
}

std::string vec_to_string(const Vec& v) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    os << v[i];
  }
  os << ")";
  return os.str();
}

}  // namespace nilrep
