#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gotas {

// Base class for every error thrown by the library.
struct GotasError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UniverseTooLarge : GotasError {
  std::size_t size;
  explicit UniverseTooLarge(std::size_t n)
      : GotasError("universe of size " + std::to_string(n) +
                   " exceeds the supported maximum"),
        size(n) {}
};

struct MissingReflexive : GotasError {
  std::string element;
  explicit MissingReflexive(std::string x)
      : GotasError("not reflexive: pair (" + x + ", " + x + ") is missing"),
        element(std::move(x)) {}
};

struct AntisymmetryViolation : GotasError {
  std::string first, second;
  AntisymmetryViolation(std::string x, std::string y)
      : GotasError("not antisymmetric: both (" + x + ", " + y + ") and (" + y +
                   ", " + x + ") are present"),
        first(std::move(x)),
        second(std::move(y)) {}
};

struct TransitivityViolation : GotasError {
  std::string first, second, third;
  TransitivityViolation(std::string x, std::string y, std::string z)
      : GotasError("not transitive: (" + x + ", " + y + ") and (" + y + ", " +
                   z + ") are present but (" + x + ", " + z + ") is not"),
        first(std::move(x)),
        second(std::move(y)),
        third(std::move(z)) {}
};

struct CapExceeded : GotasError {
  std::size_t base_size;
  explicit CapExceeded(std::size_t members)
      : GotasError("open-family enumeration over " + std::to_string(members) +
                   " base members exceeds the cap"),
        base_size(members) {}
};

struct EmptySetAccuracy : GotasError {
  EmptySetAccuracy() : GotasError("accuracy is undefined for the empty set") {}
};

struct NotAPartition : GotasError {
  using GotasError::GotasError;
};

struct UniverseTooLargeForAudit : GotasError {
  explicit UniverseTooLargeForAudit(std::size_t n, std::size_t cap)
      : GotasError("exhaustive audit over a universe of size " +
                   std::to_string(n) + " exceeds the cap of " +
                   std::to_string(cap)) {}
};

struct SchemaError : GotasError {
  std::string path;
  SchemaError(std::string where, const std::string& message)
      : GotasError(where + ": " + message), path(std::move(where)) {}
};

struct UnknownLabel : GotasError {
  std::string label;
  explicit UnknownLabel(std::string name)
      : GotasError("unknown element label '" + name + "'"),
        label(std::move(name)) {}
};

struct UnknownAttribute : GotasError {
  std::string attribute;
  explicit UnknownAttribute(std::string name)
      : GotasError("unknown attribute '" + name + "'"),
        attribute(std::move(name)) {}
};

}  // namespace gotas
