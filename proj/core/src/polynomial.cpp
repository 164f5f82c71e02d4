#include "nilrep/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "nilrep/errors.hpp"

namespace nilrep {

int total_degree(const Exponents& e) {
  int d = 0;
  for (int x : e) d += x;
  return d;
}

bool GrlexLess::operator()(const Exponents& a, const Exponents& b) const {
  const int da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

PolyFun PolyFun::constant(int vars, const Rational& c) {
  PolyFun p(vars);
  p.add_term(Exponents(vars, 0), c);
  return p;
}

PolyFun PolyFun::variable(int vars, int index) {
  if (index < 0 || index >= vars) throw BadParameter("variable index out of range");
  Exponents e(vars, 0);
  e[index] = 1;
  return monomial(vars, std::move(e), Rational(1));
}

PolyFun PolyFun::monomial(int vars, Exponents exps, const Rational& c) {
  if (static_cast<int>(exps.size()) != vars)
    throw DimensionMismatch("monomial exponent length mismatch");
  PolyFun p(vars);
  p.add_term(exps, c);
  return p;
}

int PolyFun::degree() const {
  if (terms_.empty()) return kZeroDegree;
  // Terms are graded-lex ordered, so the last one has maximal total degree.
  return total_degree(terms_.rbegin()->first);
}

Rational PolyFun::coefficient(const Exponents& e) const {
  const auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void PolyFun::add_term(const Exponents& e, const Rational& c) {
  if (c.is_zero()) return;
  if (static_cast<int>(e.size()) != vars_)
    throw DimensionMismatch("term exponent length mismatch");
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

PolyFun& PolyFun::operator+=(const PolyFun& o) {
  if (vars_ != o.vars_) throw DimensionMismatch("polynomial variable count mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

PolyFun& PolyFun::operator-=(const PolyFun& o) {
  if (vars_ != o.vars_) throw DimensionMismatch("polynomial variable count mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

PolyFun& PolyFun::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, coeff] : terms_) coeff *= c;
  return *this;
}

PolyFun operator*(const PolyFun& a, const PolyFun& b) {
  if (a.vars_ != b.vars_) throw DimensionMismatch("polynomial variable count mismatch");
  PolyFun out(a.vars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Exponents e(ea);
      for (int i = 0; i < a.vars_; ++i) e[i] += eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

PolyFun PolyFun::operator-() const {
  PolyFun out(vars_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

Rational PolyFun::evaluate(const Vec& point) const {
  if (static_cast<int>(point.size()) != vars_)
    throw DimensionMismatch("evaluation point length mismatch");
  Rational sum(0);
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (int i = 0; i < vars_; ++i) {
      for (int k = 0; k < e[i]; ++k) term *= point[i];
    }
    sum += term;
  }
  return sum;
}

PolyFun PolyFun::partial(int var) const {
  if (var < 0 || var >= vars_) throw BadParameter("partial derivative index out of range");
  PolyFun out(vars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponents de(e);
    de[var] -= 1;
    out.add_term(de, c * Rational(e[var]));
  }
  return out;
}

std::vector<PolyFun> PolyFun::homogeneous_components() const {
  std::vector<PolyFun> parts;
  if (terms_.empty()) return parts;
  parts.assign(degree() + 1, PolyFun(vars_));
  for (const auto& [e, c] : terms_) parts[total_degree(e)].add_term(e, c);
  return parts;
}

std::string PolyFun::to_string(const std::vector<std::string>& var_names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << c.str();
    for (int i = 0; i < vars_; ++i) {
      if (e[i] == 0) continue;
      os << "*";
      if (i < static_cast<int>(var_names.size()))
        os << var_names[i];
      else
        os << "y" << (i + 1);
      if (e[i] > 1) os << "^" << e[i];
    }
  }
  return os.str();
}

PolyMap PolyMap::identity(int n) {
  PolyMap m;
  m.components.reserve(n);
  for (int i = 0; i < n; ++i) m.components.push_back(PolyFun::variable(n, i));
  return m;
}

PolyMap PolyMap::zero(int size, int vars) {
  PolyMap m;
  m.components.assign(size, PolyFun(vars));
  return m;
}

int PolyMap::max_degree() const {
  int d = PolyFun::kZeroDegree;
  for (const auto& c : components) d = std::max(d, c.degree());
  return d;
}

Vec PolyMap::evaluate(const Vec& point) const {
  Vec out;
  out.reserve(components.size());
  for (const auto& c : components) out.push_back(c.evaluate(point));
  return out;
}

PolyFun compose(const PolyFun& phi, const PolyMap& f) {
  if (phi.vars() != f.size())
    throw DimensionMismatch("composition needs one map component per variable");
  const int out_vars = f.vars();
  // Cache powers of each component up to the largest exponent used.
  std::vector<std::vector<PolyFun>> powers(phi.vars());
  const auto power = [&](int i, int k) -> const PolyFun& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(PolyFun::constant(out_vars, Rational(1)));
    while (static_cast<int>(cache.size()) <= k) cache.push_back(cache.back() * f.components[i]);
    return cache[k];
  };
  PolyFun out(out_vars);
  for (const auto& [e, c] : phi.terms()) {
    PolyFun term = PolyFun::constant(out_vars, c);
    for (int i = 0; i < phi.vars(); ++i) {
      if (e[i] > 0) term = term * power(i, e[i]);
    }
    out += term;
  }
  return out;
}

PolyFun directional_derivative(const PolyFun& phi, const Vec& z) {
  if (static_cast<int>(z.size()) != phi.vars())
    throw DimensionMismatch("direction length mismatch");
  PolyFun out(phi.vars());
  for (int i = 0; i < phi.vars(); ++i) {
    if (!z[i].is_zero()) out += phi.partial(i) * z[i];
  }
  return out;
}

PolyFun directional_derivative(const PolyFun& phi, const PolyMap& z) {
  if (z.size() != phi.vars() || z.vars() != phi.vars())
    throw DimensionMismatch("direction field shape mismatch");
  PolyFun out(phi.vars());
  for (int i = 0; i < phi.vars(); ++i) {
    const PolyFun dphi = phi.partial(i);
    if (!dphi.is_zero() && !z.components[i].is_zero()) out += dphi * z.components[i];
  }
  return out;
}

std::vector<Exponents> monomials_up_to(int vars, int max_degree) {
  std::vector<Exponents> all;
  Exponents current(vars, 0);
  // Depth-first enumeration of exponent tuples with total degree <= max.
  const auto recurse = [&](auto&& self, int pos, int remaining) -> void {
    if (pos == vars) {
      all.push_back(current);
      return;
    }
    for (int d = 0; d <= remaining; ++d) {
      current[pos] = d;
      self(self, pos + 1, remaining - d);
    }
    current[pos] = 0;
  };
  recurse(recurse, 0, max_degree);
  std::sort(all.begin(), all.end(), GrlexLess{});
  return all;
}

Vec poly_to_coords(const PolyFun& phi, const std::map<Exponents, int, GrlexLess>& index,
                   int size) {
  Vec coords(size);
  for (const auto& [e, c] : phi.terms()) {
    const auto it = index.find(e);
    if (it == index.end())
      throw BadParameter("polynomial exceeds the degree cap of the ambient space");
    coords[it->second] = c;
  }
  return coords;
}

PolyFun coords_to_poly(const Vec& coords, const std::vector<Exponents>& monomials,
                       int vars) {
  if (coords.size() != monomials.size())
    throw DimensionMismatch("coordinate length does not match the monomial basis");
  PolyFun p(vars);
  for (size_t i = 0; i < coords.size(); ++i) {
    if (!coords[i].is_zero()) p.add_term(monomials[i], coords[i]);
  }
  return p;
}

}  // namespace nilrep
