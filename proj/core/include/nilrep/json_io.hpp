#ifndef NILREP_JSON_IO_HPP
#define NILREP_JSON_IO_HPP

#include <string>

#include "nilrep/lie_algebra.hpp"
#include "nilrep/polynomial.hpp"
#include "nilrep/representation.hpp"

namespace nilrep {

/// Algebra document:
///   { "name": str, "dim": n, "basis": [str x n],
///     "brackets": [ { "i": int, "j": int, "coeffs": [rational-str x n] } ] }
/// with 0 <= i < j < n; omitted pairs mean a zero bracket. Rational strings
/// use the canonical text format of Rational.
LieAlgebra algebra_from_json(const std::string& text);
std::string algebra_to_json(const LieAlgebra& g);

/// Polynomial document:
///   { "vars": n, "terms": [ { "exp": [int x n], "coeff": rational-str } ] }
/// with terms sorted graded-lexicographically.
PolyFun poly_from_json(const std::string& text);
std::string poly_to_json(const PolyFun& phi);

/// Representation dump:
///   { "algebra": name, "dim_g": n, "N": N, "bound": 2^(N-1)N+1,
///     "dim_FG": d, "basis": [polynomial x d],
///     "generators": [ { "x": i, "matrix": [[rational-str]] } ] }
std::string representation_to_json(const Representation& rep);

}  // namespace nilrep

#endif
