#pragma once

#include <stdexcept>
#include <string>

namespace sgh {

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Mismatched ambient dimensions or structurally invalid arguments.
struct DimensionError : Error {
  using Error::Error;
};

// Interpolation between antipodal points has no unique geodesic.
struct DegenerateGeodesicError : Error {
  using Error::Error;
};

// Equatorial projection is undefined at the poles.
struct PoleError : Error {
  using Error::Error;
};

// Input outside a function's stated domain.
struct DomainError : Error {
  using Error::Error;
};

// Evaluation rejected: the point is not in the map's (dense) domain,
// e.g. its base classifies onto a Voronoi boundary.
struct NotInDomainError : DomainError {
  using DomainError::DomainError;
};

// sin(x1) = 0 in the point-to-geodesic distance formula.
struct SingularityError : Error {
  using Error::Error;
};

// Too many consecutive rejected draws; the domain predicate is suspect.
struct SamplingStarvationError : Error {
  using Error::Error;
};

// An arccos/arcsin argument fell outside [-1,1] beyond the 1e-12 clamp window.
struct NumericIntegrityError : Error {
  using Error::Error;
};

struct ConfigError : Error {
  using Error::Error;
};

// Requested margin is below the achievable oscillation bound at this spacing.
struct BudgetInfeasibleError : ConfigError {
  double min_feasible_margin;
  BudgetInfeasibleError(const std::string& what, double feasible)
      : ConfigError(what), min_feasible_margin(feasible) {}
};

}  // namespace sgh
