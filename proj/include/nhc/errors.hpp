#pragma once

#include <stdexcept>
#include <string>

namespace nhc {

// Precondition violations on plain arguments surface as std::invalid_argument.
// The types below mark the cases callers are expected to branch on.

struct SingularCurveError : std::domain_error {
    explicit SingularCurveError(const std::string& what) : std::domain_error(what) {}
};

/// j = 0 or j = 1728 reached a path that needs the generic a(j) parametrization.
struct SpecialJInvariantError : std::domain_error {
    explicit SpecialJInvariantError(const std::string& what) : std::domain_error(what) {}
};

/// The requested brute-force scan exceeds the configured lattice-point budget.
struct ScanBudgetError : std::runtime_error {
    ScanBudgetError(const std::string& what, std::string requested, std::string budget)
        : std::runtime_error(what), requested_points(std::move(requested)),
          budget_points(std::move(budget)) {}

    std::string requested_points;
    std::string budget_points;
};

}  // namespace nhc
