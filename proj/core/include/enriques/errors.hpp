#ifndef ENRIQUES_ERRORS_HPP
#define ENRIQUES_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace enriques {

/// An input violates the documented precondition of an operation.
class PreconditionError : public std::invalid_argument {
 public:
  explicit PreconditionError(const std::string& what) : std::invalid_argument(what) {}
};

/// A bounded search finished without finding what was asked for.
class SearchFailure : public std::runtime_error {
 public:
  explicit SearchFailure(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace enriques

#endif  // ENRIQUES_ERRORS_HPP
