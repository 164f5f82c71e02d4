#include "nilrep/verify.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

#include "nilrep/bch.hpp"
#include "nilrep/regular_action.hpp"
#include "nilrep/representation.hpp"

namespace nilrep {

bool VerificationReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.pass; });
}

namespace {

void fail(CheckResult& check, const std::string& counterexample) {
  if (!check.pass) return;
  check.pass = false;
  check.counterexample = counterexample;
}

// Number of monomials of degree <= d in n variables: C(d + n, n).
long ambient_size(int n, int d) {
  long out = 1;
  for (int i = 1; i <= n; ++i) out = out * (d + i) / i;
  return out;
}

CheckResult check_bch_coefficients() {
  CheckResult check{"bch_coefficients", true, 0, ""};
  const auto coeffs = bch_derivative_coeffs(6);
  const auto bernoulli = bernoulli_numbers(6);
  Rational factorial(1);
  for (int j = 0; j <= 6; ++j) {
    if (j > 0) factorial *= Rational(j);
    check.cases++;
    const Rational expected = -bernoulli[j] / factorial;
    if (coeffs[j] != expected) {
      fail(check, "c_" + std::to_string(j) + " = " + coeffs[j].str() +
                      ", Bernoulli route gives " + expected.str());
    }
  }
  return check;
}

CheckResult check_first_order(const LieAlgebra& g, int samples, Sampler& sampler) {
  CheckResult check{"bch_first_order", true, 0, ""};
  const int N = g.nilpotency_degree();
  const auto coeffs = bch_derivative_coeffs(N);
  for (int s = 0; s < samples && check.pass; ++s) {
    const LieElement x = sampler.element(g.dim());
    const LieElement y = sampler.element(g.dim());
    const Vec lhs = translation_jet(g, x).linear_part().evaluate(y);
    Vec rhs(g.dim());
    LieElement word = x;
    for (int j = 0; j <= N; ++j) {
      if (j > 0) word = g.bracket(y, word);
      add_scaled(rhs, coeffs[j], word);
    }
    check.cases++;
    if (lhs != rhs)
      fail(check, "x=" + vec_to_string(x) + " y=" + vec_to_string(y) +
                      " jet=" + vec_to_string(lhs) + " series=" + vec_to_string(rhs));
  }
  return check;
}

CheckResult check_derivative_formula(const LieAlgebra& g, int samples, Sampler& sampler) {
  CheckResult check{"derivative_formula", true, 0, ""};
  for (int s = 0; s < samples && check.pass; ++s) {
    const LieElement x = sampler.element(g.dim());
    const PolyFun phi = sampler.poly_up_to_degree(g.dim(), 3);
    check.cases++;
    if (lie_derivative(g, x, phi) != lie_derivative_bch_formula(g, x, phi))
      fail(check, "x=" + vec_to_string(x) + " phi=" + phi.to_string());
  }
  return check;
}

CheckResult check_derivative_definition(const LieAlgebra& g, int samples,
                                        Sampler& sampler) {
  CheckResult check{"derivative_definition", true, 0, ""};
  for (int s = 0; s < samples && check.pass; ++s) {
    const LieElement x = sampler.element(g.dim());
    const PolyFun phi = sampler.poly_up_to_degree(g.dim(), 2);
    check.cases++;
    if (lie_derivative(g, x, phi) != lie_derivative_composed(g, x, phi))
      fail(check, "x=" + vec_to_string(x) + " phi=" + phi.to_string());
  }
  return check;
}

CheckResult check_translate_degree(const LieAlgebra& g, int samples, Sampler& sampler) {
  CheckResult check{"translate_degree_bound", true, 0, ""};
  const int N = g.nilpotency_degree();
  for (int s = 0; s < samples && check.pass; ++s) {
    const LieElement x = sampler.element(g.dim());
    const PolyFun phi = sampler.poly_up_to_degree(g.dim(), 2);
    const PolyFun translated = translate_poly(g, x, phi);
    check.cases++;
    if (translated.degree() > std::max(phi.degree(), 0) * N)
      fail(check, "x=" + vec_to_string(x) + " phi=" + phi.to_string() + " degree " +
                      std::to_string(translated.degree()));
  }
  return check;
}

CheckResult check_translate_action(const LieAlgebra& g, int samples, Sampler& sampler) {
  CheckResult check{"translate_group_action", true, 0, ""};
  for (int s = 0; s < samples && check.pass; ++s) {
    const LieElement x = sampler.element(g.dim());
    const LieElement xp = sampler.element(g.dim());
    const PolyFun phi = sampler.poly_up_to_degree(g.dim(), 2);
    check.cases++;
    const PolyFun lhs = translate_poly(g, bch_product(g, x, xp), phi);
    const PolyFun rhs = translate_poly(g, x, translate_poly(g, xp, phi));
    if (lhs != rhs)
      fail(check, "x=" + vec_to_string(x) + " x'=" + vec_to_string(xp) +
                      " phi=" + phi.to_string());
  }
  return check;
}

CheckResult check_leibniz(const LieAlgebra& g, int samples, Sampler& sampler) {
  CheckResult check{"derivative_leibniz", true, 0, ""};
  for (int s = 0; s < samples && check.pass; ++s) {
    const LieElement x = sampler.element(g.dim());
    const PolyFun phi = sampler.poly_up_to_degree(g.dim(), 2);
    const PolyFun psi = sampler.poly_up_to_degree(g.dim(), 2);
    const TranslationJet jet = translation_jet(g, x);
    check.cases++;
    const PolyFun lhs = lie_derivative(jet, phi * psi);
    const PolyFun rhs = lie_derivative(jet, phi) * psi + phi * lie_derivative(jet, psi);
    if (lhs != rhs)
      fail(check, "x=" + vec_to_string(x) + " phi=" + phi.to_string() +
                      " psi=" + psi.to_string());
  }
  return check;
}

// The derivative takes brackets to commutators already at the polynomial
// level, before any restriction to an invariant space.
CheckResult check_derivative_commutator(const LieAlgebra& g, int samples,
                                        Sampler& sampler) {
  CheckResult check{"derivative_commutator", true, 0, ""};
  for (int s = 0; s < samples && check.pass; ++s) {
    const LieElement x = sampler.element(g.dim());
    const LieElement y = sampler.element(g.dim());
    const PolyFun phi = sampler.poly_up_to_degree(g.dim(), 2);
    const TranslationJet jx = translation_jet(g, x);
    const TranslationJet jy = translation_jet(g, y);
    check.cases++;
    const PolyFun lhs = lie_derivative(g, g.bracket(x, y), phi);
    const PolyFun rhs =
        lie_derivative(jx, lie_derivative(jy, phi)) -
        lie_derivative(jy, lie_derivative(jx, phi));
    if (lhs != rhs)
      fail(check, "x=" + vec_to_string(x) + " y=" + vec_to_string(y) +
                      " phi=" + phi.to_string());
  }
  return check;
}

CheckResult check_generated_subalgebra(const LieAlgebra& g, int trials_per_size,
                                       Sampler& sampler) {
  CheckResult check{"generated_subalgebra", true, 0, ""};
  const int N = g.nilpotency_degree();
  for (int q = 1; q <= 3 && check.pass; ++q) {
    long bound = 0, power = 1;
    for (int r = 0; r < N; ++r) {
      power *= q;
      bound += power;  // sum_{r=0}^{N-1} q^{r+1}
    }
    for (int s = 0; s < trials_per_size && check.pass; ++s) {
      std::vector<LieElement> gens;
      for (int i = 0; i < q; ++i) gens.push_back(sampler.element(g.dim()));
      const EchelonBasis span = g.generated_subalgebra(gens);
      check.cases++;
      if (span.dim() > std::min<long>(bound, g.dim())) {
        fail(check, "q=" + std::to_string(q) + " dim=" + std::to_string(span.dim()));
        break;
      }
      for (const auto& u : span.row_vectors()) {
        for (const auto& v : span.row_vectors()) {
          if (!span.contains(g.bracket(u, v))) {
            fail(check, "span not bracket-closed at u=" + vec_to_string(u) +
                            " v=" + vec_to_string(v));
            break;
          }
        }
        if (!check.pass) break;
      }
    }
  }
  return check;
}

CheckResult check_functional_family(const LieAlgebra& g, int trials, Sampler& sampler) {
  CheckResult check{"functional_family", true, 0, ""};
  for (int s = 0; s < trials && check.pass; ++s) {
    PolyFun functional(g.dim());
    for (int i = 0; i < g.dim(); ++i) {
      Exponents e(g.dim(), 0);
      e[i] = 1;
      functional.add_term(e, sampler.rational());
    }
    const LieElement x0 = sampler.element(g.dim());
    const BracketWordFamily family = bracket_word_family(g, functional, x0);
    const FamilyCheckResult res = check_bracket_word_family(family);
    check.cases++;
    if (!res.pass()) {
      std::ostringstream os;
      os << "phi=" << functional.to_string() << " x0=" << vec_to_string(x0)
         << " dim=" << res.dim << " bound=" << res.bound << " invariant=" << res.invariant
         << " power=" << res.annihilating_power << " stratum=" << res.stratum_filtration;
      fail(check, os.str());
    }
  }
  return check;
}

CheckResult check_derivative_nilpotency(const LieAlgebra& g, int trials_per_degree,
                                        Sampler& sampler) {
  CheckResult check{"derivative_nilpotency", true, 0, ""};
  for (int m = 0; m <= 3 && check.pass; ++m) {
    for (int s = 0; s < trials_per_degree && check.pass; ++s) {
      const PolyFun phi = sampler.poly_of_degree(g.dim(), m);
      const LieElement x0 = sampler.element(g.dim());
      const DerivativeNilpotencyResult res = derivative_nilpotency_check(g, x0, phi);
      check.cases++;
      if (!res.zero_at_required) {
        std::ostringstream os;
        os << "m=" << m << " phi=" << phi.to_string() << " x0=" << vec_to_string(x0)
           << " still nonzero after " << res.required_power << " applications";
        fail(check, os.str());
      }
    }
  }
  return check;
}

CheckResult check_invariant_span(const LieAlgebra& g, Sampler& sampler) {
  CheckResult check{"invariant_span", true, 0, ""};
  const int N = g.nilpotency_degree();
  // Composition cost grows quickly with the ambient dimension; keep the
  // seed degree at 1 on the larger algebras.
  const int max_m = ambient_size(g.dim(), 2 * N) <= 256 ? 2 : 1;
  for (int m = 1; m <= max_m && check.pass; ++m) {
    const PolyFun seed = sampler.poly_up_to_degree(g.dim(), m);
    const RepSpace span = translation_invariant_span(g, {seed}, m);
    check.cases++;
    if (span.max_degree > m * N) {
      fail(check, "m=" + std::to_string(m) + " seed=" + seed.to_string() +
                      " max degree " + std::to_string(span.max_degree));
      break;
    }
    for (int s = 0; s < 20 && check.pass; ++s) {
      const LieElement x = sampler.element(g.dim());
      for (const auto& phi : span.basis) {
        check.cases++;
        if (!span.contains(translate_poly(g, x, phi))) {
          fail(check, "m=" + std::to_string(m) + " x=" + vec_to_string(x) +
                          " phi=" + phi.to_string() + " translate leaves the span");
          break;
        }
      }
    }
  }
  return check;
}

CheckResult check_fg_structure(const Representation& rep) {
  CheckResult check{"fg_contains_duals_and_constants", true, 0, ""};
  const LieAlgebra& g = rep.space.algebra;
  for (int i = 0; i < g.dim(); ++i) {
    check.cases++;
    if (!rep.space.contains(PolyFun::variable(g.dim(), i)))
      fail(check, "coordinate functional " + std::to_string(i) + " missing");
  }
  check.cases++;
  if (!rep.space.contains(PolyFun::constant(g.dim(), Rational(1))))
    fail(check, "constant function missing");
  return check;
}

CheckResult check_fg_translates(const Representation& rep, int samples,
                                Sampler& sampler) {
  CheckResult check{"fg_contains_translates", true, 0, ""};
  const LieAlgebra& g = rep.space.algebra;
  for (int s = 0; s < samples && check.pass; ++s) {
    const LieElement x = sampler.element(g.dim());
    for (int i = 0; i < g.dim(); ++i) {
      const PolyFun xi = PolyFun::variable(g.dim(), i);
      check.cases++;
      if (!rep.space.contains(translate_poly(g, x, xi))) {
        fail(check, "x=" + vec_to_string(x) + " functional " + std::to_string(i));
        break;
      }
    }
  }
  return check;
}

CheckResult check_evaluation_at_zero(const LieAlgebra& g, int samples,
                                     Sampler& sampler) {
  CheckResult check{"evaluation_at_zero", true, 0, ""};
  for (int s = 0; s < samples && check.pass; ++s) {
    const LieElement x = sampler.element(g.dim());
    const int i = sampler.index(g.dim());
    const PolyFun xi = PolyFun::variable(g.dim(), i);
    check.cases++;
    // lambda(x)xi evaluated at 0 is xi(-x).
    if (translate_poly(g, x, xi).evaluate(g.zero()) != -x[i])
      fail(check, "x=" + vec_to_string(x) + " functional " + std::to_string(i));
  }
  return check;
}

}  // namespace

VerificationReport run_verification(const LieAlgebra& g, const VerifyOptions& opts) {
  if (opts.samples < 1) throw BadParameter("need at least one sample");
  const int S = opts.samples;
  VerificationReport report;
  report.algebra = g.name();
  report.dim_g = g.dim();
  report.N = g.nilpotency_degree();
  report.bound = representation_index_bound(g);
  report.samples = S;
  report.seed = opts.seed;

  const auto sampler_for = [&](uint64_t offset) {
    return Sampler(opts.seed + offset, opts.height);
  };

  // Group law.
  for (auto& axiom : group_axiom_check(g, 2 * S, opts.seed)) {
    report.checks.push_back(CheckResult{"group_" + axiom.axiom, axiom.pass, axiom.cases,
                                        axiom.counterexample});
  }
  report.checks.push_back(check_bch_coefficients());
  {
    Sampler s = sampler_for(1);
    report.checks.push_back(check_first_order(g, S, s));
  }
  {
    Sampler s = sampler_for(2);
    report.checks.push_back(check_derivative_formula(g, std::max(1, S / 2), s));
  }
  {
    Sampler s = sampler_for(3);
    report.checks.push_back(check_derivative_definition(g, std::min(S, 10), s));
  }
  {
    Sampler s = sampler_for(4);
    report.checks.push_back(check_translate_degree(g, std::max(1, S / 2), s));
  }
  {
    Sampler s = sampler_for(5);
    report.checks.push_back(check_translate_action(g, std::max(1, S / 4), s));
  }
  {
    Sampler s = sampler_for(6);
    report.checks.push_back(check_leibniz(g, std::max(1, S / 4), s));
  }
  {
    Sampler s = sampler_for(15);
    report.checks.push_back(check_derivative_commutator(g, std::max(1, S / 4), s));
  }
  {
    Sampler s = sampler_for(7);
    report.checks.push_back(check_generated_subalgebra(g, std::max(1, S / 2), s));
  }
  {
    Sampler s = sampler_for(8);
    report.checks.push_back(check_functional_family(g, std::max(1, S / 4), s));
  }
  {
    Sampler s = sampler_for(9);
    report.checks.push_back(check_derivative_nilpotency(g, std::max(1, S / 4), s));
  }
  {
    Sampler s = sampler_for(10);
    report.checks.push_back(check_invariant_span(g, s));
  }

  // The representation itself. Construction failure would mean the closure
  // is not derivative-invariant, so surface it as a failing check instead
  // of an exception.
  bool construction_recorded = false;
  try {
    const Representation rep = build_representation(g);
    report.dim_fg = rep.dim();

    report.checks.push_back(CheckResult{"fg_invariant_closure", true, 1, ""});
    construction_recorded = true;
    report.checks.push_back(check_fg_structure(rep));

    CheckResult faithful{"representation_faithful", true, 1, ""};
    const FaithfulnessResult fr = faithfulness_check(rep);
    if (!fr.faithful)
      fail(faithful, "rank " + std::to_string(fr.rank) + " of " +
                         std::to_string(g.dim()));
    report.checks.push_back(faithful);

    CheckResult control{"negative_control_unfaithful", true, 1, ""};
    const Representation trivial =
        representation_on(derivative_closure(g, {}, 0, true));
    const FaithfulnessResult cr = faithfulness_check(trivial);
    if (cr.faithful || cr.kernel_dim != g.dim())
      fail(control, "constants-only space reported faithful");
    report.checks.push_back(control);

    {
      Sampler s = sampler_for(11);
      CheckResult nilp{"nilpotence_bound", true, 0, ""};
      CheckResult unip{"unipotence_bound", true, 0, ""};
      for (int k = 0; k < S; ++k) {
        const LieElement x = s.nonzero_element(g.dim());
        const int ni = nilpotence_index(rep, x);
        report.max_nilpotence_index = std::max(report.max_nilpotence_index, ni);
        nilp.cases++;
        if (ni > rep.bound)
          fail(nilp, "x=" + vec_to_string(x) + " index exceeds bound " +
                         std::to_string(rep.bound));
        const int ui = unipotence_index(rep, x);
        unip.cases++;
        if (ui > rep.bound)
          fail(unip, "x=" + vec_to_string(x) + " unipotence index exceeds bound");
      }
      report.checks.push_back(nilp);
      report.checks.push_back(unip);
    }

    for (auto& identity : homomorphism_check(rep, S, opts.seed + 12)) {
      report.checks.push_back(CheckResult{"homomorphism_" + identity.identity,
                                          identity.pass, identity.cases,
                                          identity.counterexample});
    }
    {
      Sampler s = sampler_for(13);
      report.checks.push_back(check_fg_translates(rep, std::max(1, S / 2), s));
    }
  } catch (const Error& e) {
    const char* name =
        construction_recorded ? "representation_checks" : "fg_invariant_closure";
    report.checks.push_back(
        CheckResult{name, false, 1, std::string(e.kind()) + ": " + e.what()});
  }

  {
    Sampler s = sampler_for(14);
    report.checks.push_back(check_evaluation_at_zero(g, S, s));
  }
  return report;
}

std::string report_to_json(const VerificationReport& report) {
  nlohmann::ordered_json doc;
  doc["algebra"] = report.algebra;
  doc["dim_g"] = report.dim_g;
  doc["N"] = report.N;
  doc["bound"] = report.bound;
  doc["dim_FG"] = report.dim_fg;
  doc["max_nilpotence_index"] = report.max_nilpotence_index;
  doc["samples"] = report.samples;
  doc["seed"] = report.seed;
  doc["all_pass"] = report.all_pass();
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const auto& check : report.checks) {
    nlohmann::ordered_json entry;
    entry["name"] = check.name;
    entry["pass"] = check.pass;
    entry["cases"] = check.cases;
    if (!check.pass) entry["counterexample"] = check.counterexample;
    checks.push_back(std::move(entry));
  }
  doc["checks"] = std::move(checks);
  return doc.dump(2) + "\n";
}

}  // namespace nilrep
