#pragma once
#include <stdexcept>
#include <string>

namespace klcy {

// Errors that a caller can meaningfully react to. Everything else
// (internal consistency violations) throws std::logic_error.
struct DomainError : std::runtime_error {
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

struct CapExceeded : DomainError {
  explicit CapExceeded(const std::string& what) : DomainError(what) {}
};

struct ShapeMismatch : DomainError {
  explicit ShapeMismatch(const std::string& what) : DomainError(what) {}
};

struct NotFiniteDimensional : DomainError {
  explicit NotFiniteDimensional(const std::string& what) : DomainError(what) {}
};

struct ZeroModule : DomainError {
  explicit ZeroModule(const std::string& what) : DomainError(what) {}
};

struct NotProjective : DomainError {
  explicit NotProjective(const std::string& what) : DomainError(what) {}
};

struct NotDuflo : DomainError {
  explicit NotDuflo(const std::string& what) : DomainError(what) {}
};

struct CriterionAmbiguous : DomainError {
  explicit CriterionAmbiguous(const std::string& what) : DomainError(what) {}
};

struct ConventionUncalibrated : DomainError {
  explicit ConventionUncalibrated(const std::string& what) : DomainError(what) {}
};

} // namespace klcy
