#ifndef NILREP_ERRORS_HPP
#define NILREP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace nilrep {

/// Base class of all toolkit errors. `kind()` is a stable machine-readable
/// tag that the CLI surfaces in diagnostics JSON.
class Error : public std::runtime_error {
public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(message), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

private:
  std::string kind_;
};

class DimensionMismatch : public Error {
public:
  explicit DimensionMismatch(const std::string& message)
      : Error("DimensionMismatch", message) {}
};

/// Structure constants fail the Jacobi identity; carries the offending
/// basis triple.
class JacobiViolation : public Error {
public:
  JacobiViolation(int i, int j, int k, const std::string& message)
      : Error("JacobiViolation", message), i(i), j(j), k(k) {}
  int i, j, k;
};

class NotNilpotent : public Error {
public:
  explicit NotNilpotent(const std::string& message)
      : Error("NotNilpotent", message) {}
};

class ParseError : public Error {
public:
  explicit ParseError(const std::string& message)
      : Error("ParseError", message) {}
};

class BadParameter : public Error {
public:
  explicit BadParameter(const std::string& message)
      : Error("BadParameter", message) {}
};

class NotLinearFunctional : public Error {
public:
  explicit NotLinearFunctional(const std::string& message)
      : Error("NotLinearFunctional", message) {}
};

}  // namespace nilrep

#endif
