#include "nilrep/bch.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>

#include "nilrep/sampling.hpp"

namespace nilrep {

namespace {

// Dynkin expansion of log(e^x e^y): a term for every tuple of blocks
// (p_1,q_1)...(p_k,q_k) with p_i + q_i >= 1, carrying the coefficient
// (-1)^(k-1) / (k * m * prod p_i! q_i!) on the right-nested word
// x^{p_1} y^{q_1} ... x^{p_k} y^{q_k}, where m is the word length.
void enumerate_dynkin(int max_degree,
                      std::map<int, std::map<std::string, Rational>>& table) {
  struct Frame {
    std::string word;
    int blocks = 0;
    Rational factorials = Rational(1);
  };
  const auto record = [&](const Frame& f) {
    const int m = static_cast<int>(f.word.size());
    Rational coeff = Rational(1) / (Rational(f.blocks) * Rational(m) * f.factorials);
    if (f.blocks % 2 == 0) coeff = -coeff;
    auto& slot = table[m][f.word];
    slot += coeff;
  };
  const auto factorial = [](int n) {
    Rational f(1);
    for (int i = 2; i <= n; ++i) f *= Rational(i);
    return f;
  };
  // Depth-first over block tuples.
  const auto recurse = [&](auto&& self, const Frame& f) -> void {
    const int remaining = max_degree - static_cast<int>(f.word.size());
    for (int p = 0; p <= remaining; ++p) {
      for (int q = 0; p + q <= remaining; ++q) {
        if (p + q == 0) continue;
        Frame next;
        next.word = f.word + std::string(p, 'x') + std::string(q, 'y');
        next.blocks = f.blocks + 1;
        next.factorials = f.factorials * factorial(p) * factorial(q);
        record(next);
        self(self, next);
      }
    }
  };
  recurse(recurse, Frame{});
}

bool word_value_vanishes(const std::string& word) {
  const size_t m = word.size();
  // Right-nested value ends in [l_{m-1}, l_m]; equal letters kill it.
  return m >= 2 && word[m - 1] == word[m - 2];
}

}  // namespace

BchSeries::BchSeries(int max_degree) {
  std::map<int, std::map<std::string, Rational>> table;
  enumerate_dynkin(max_degree, table);
  by_degree_.assign(max_degree, {});
  for (auto& [degree, words] : table) {
    for (auto& [word, coeff] : words) {
      if (coeff.is_zero() || word_value_vanishes(word)) continue;
      by_degree_[degree - 1].emplace_back(word, coeff);
    }
  }
}

const BchSeries& BchSeries::truncated(int max_degree) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<BchSeries>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = cache[max_degree];
  if (!slot) slot = std::unique_ptr<BchSeries>(new BchSeries(max_degree));
  return *slot;
}

LieElement bch_product(const LieAlgebra& g, const LieElement& x, const LieElement& y) {
  if (static_cast<int>(x.size()) != g.dim() || x.size() != y.size())
    throw DimensionMismatch("group law operands do not match the algebra dimension");
  const BchSeries& series = BchSeries::truncated(g.nilpotency_degree());
  LieElement out(g.dim());
  for (int d = 1; d <= series.max_degree(); ++d) {
    for (const auto& [word, coeff] : series.words(d)) {
      LieElement value = word.back() == 'x' ? x : y;
      for (int i = static_cast<int>(word.size()) - 2; i >= 0; --i)
        value = g.bracket(word[i] == 'x' ? x : y, value);
      add_scaled(out, coeff, value);
    }
  }
  return out;
}

PolyMap TranslationJet::left_translation() const {
  PolyMap sum = t_power.at(0);
  for (size_t k = 1; k < t_power.size(); ++k)
    for (int i = 0; i < sum.size(); ++i) sum.components[i] += t_power[k].components[i];
  return sum;
}

TranslationJet translation_jet(const LieAlgebra& g, const LieElement& x) {
  if (static_cast<int>(x.size()) != g.dim())
    throw DimensionMismatch("jet base point does not match the algebra dimension");
  const int n = g.dim();
  const int N = g.nilpotency_degree();
  const BchSeries& series = BchSeries::truncated(N);

  std::vector<PolyFun> x_sym, y_sym;
  for (int i = 0; i < n; ++i) {
    x_sym.push_back(PolyFun::constant(n, x[i]));
    y_sym.push_back(PolyFun::variable(n, i));
  }
  const PolyFun zero(n);

  TranslationJet jet;
  jet.t_power.assign(N + 1, PolyMap::zero(n, n));
  for (int d = 1; d <= N; ++d) {
    for (const auto& [word, coeff] : series.words(d)) {
      const int x_count = static_cast<int>(std::count(word.begin(), word.end(), 'x'));
      std::vector<PolyFun> value = word.back() == 'x' ? x_sym : y_sym;
      for (int i = static_cast<int>(word.size()) - 2; i >= 0; --i)
        value = bracket_in<PolyFun>(g, word[i] == 'x' ? x_sym : y_sym, value, zero);
      // Substituting x -> -t x scales this word by (-t)^{x_count}.
      Rational scaled = coeff;
      if (x_count % 2 == 1) scaled = -scaled;
      for (int i = 0; i < n; ++i)
        jet.t_power[x_count].components[i] += value[i] * scaled;
    }
  }
  return jet;
}

PolyMap left_translation(const LieAlgebra& g, const LieElement& x) {
  return translation_jet(g, x).left_translation();
}

std::vector<Rational> bch_derivative_coeffs(int upto) {
  if (upto < 0) throw BadParameter("coefficient count must be nonnegative");
  const BchSeries& series = BchSeries::truncated(upto + 1);
  std::vector<Rational> coeffs(upto + 1);
  for (int j = 0; j <= upto; ++j) {
    // Words of degree j+1 that are linear in x reduce to (ad y)^j x: the
    // word y^j x directly, and y^{j-1} x y via [x,y] = -(ad y) x. The
    // substitution x -> -t x contributes one factor -1.
    Rational c(0);
    const std::string tail_x = std::string(j, 'y') + "x";
    for (const auto& [word, coeff] : series.words(j + 1)) {
      if (word == tail_x) c -= coeff;
      if (j >= 1 && word == std::string(j - 1, 'y') + "xy") c += coeff;
    }
    coeffs[j] = c;
  }
  return coeffs;
}

std::vector<Rational> bernoulli_numbers(int upto) {
  if (upto < 0) throw BadParameter("Bernoulli count must be nonnegative");
  std::vector<Rational> b(upto + 1);
  b[0] = Rational(1);
  for (int m = 1; m <= upto; ++m) {
    // Binomials C(m+1, k) by the multiplicative recurrence.
    Rational binom(1);
    Rational sum(0);
    for (int k = 0; k < m; ++k) {
      sum += binom * b[k];
      binom *= Rational(m + 1 - k, k + 1);
    }
    b[m] = -sum / Rational(m + 1);
  }
  return b;
}

std::vector<AxiomCheckResult> group_axiom_check(const LieAlgebra& g, int samples,
                                                uint64_t seed) {
  if (samples < 1) throw BadParameter("need at least one sample");
  Sampler sampler(seed);
  AxiomCheckResult assoc{"associativity", 0, true, ""};
  AxiomCheckResult identity{"identity", 0, true, ""};
  AxiomCheckResult inverse{"inverse", 0, true, ""};
  for (int s = 0; s < samples; ++s) {
    const LieElement x = sampler.element(g.dim());
    const LieElement y = sampler.element(g.dim());
    const LieElement z = sampler.element(g.dim());
    if (assoc.pass) {
      const LieElement lhs = bch_product(g, bch_product(g, x, y), z);
      const LieElement rhs = bch_product(g, x, bch_product(g, y, z));
      assoc.cases++;
      if (lhs != rhs) {
        assoc.pass = false;
        std::ostringstream os;
        os << "x=" << vec_to_string(x) << " y=" << vec_to_string(y)
           << " z=" << vec_to_string(z) << " (x*y)*z=" << vec_to_string(lhs)
           << " x*(y*z)=" << vec_to_string(rhs);
        assoc.counterexample = os.str();
      }
    }
    if (identity.pass) {
      identity.cases++;
      if (bch_product(g, x, g.zero()) != x || bch_product(g, g.zero(), x) != x) {
        identity.pass = false;
        identity.counterexample = "x=" + vec_to_string(x);
      }
    }
    if (inverse.pass) {
      inverse.cases++;
      if (!is_zero_vec(bch_product(g, x, negated(x)))) {
        inverse.pass = false;
        inverse.counterexample = "x=" + vec_to_string(x);
      }
    }
  }
  return {assoc, identity, inverse};
}

}  // namespace nilrep
