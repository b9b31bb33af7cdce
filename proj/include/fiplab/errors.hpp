#pragma once

#include <stdexcept>
#include <string>

namespace fiplab {

/// A scenario violates its own bounds or schema.
struct ScenarioInvalid : std::runtime_error {
  explicit ScenarioInvalid(const std::string& what) : std::runtime_error(what) {}
};

/// A priority-mode scenario enumerates the root, which the construction forbids.
struct LambdaEnumerated : ScenarioInvalid {
  explicit LambdaEnumerated(const std::string& what) : ScenarioInvalid(what) {}
};

/// Every member of a family is empty, so no maximal subfamily with
/// nonempty intersection exists.
struct AllEmpty : std::runtime_error {
  explicit AllEmpty(const std::string& what) : std::runtime_error(what) {}
};

/// An oracle recipe references a label the tree never placed.
struct MissingLabel : std::runtime_error {
  explicit MissingLabel(const std::string& what) : std::runtime_error(what) {}
};

/// Scenario-crafting parameters cannot be realized within the requested bounds.
struct ParamsInfeasible : std::runtime_error {
  explicit ParamsInfeasible(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace fiplab
