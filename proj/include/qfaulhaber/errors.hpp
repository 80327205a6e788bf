#pragma once

#include <stdexcept>
#include <string>

namespace qf {

/// Input outside the supported domain (negative index, |q| >= 1, zero divisor).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Failure to resolve a Laurent expansion or a limit at q = 1.
class SeriesError : public std::runtime_error {
 public:
  explicit SeriesError(const std::string& what) : std::runtime_error(what) {}
};

/// A self-checked identity did not hold. Always an implementation bug (or a
/// deliberately injected one, see LastTermSign::Printed).
class IdentityViolation : public std::logic_error {
 public:
  explicit IdentityViolation(const std::string& what) : std::logic_error(what) {}
};

}  // namespace qf
