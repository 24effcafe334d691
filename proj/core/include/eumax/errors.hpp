// Copyright 2026 The eumax Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace eumax {

/// Base class for all eumax errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed or out-of-contract input (bad parameters, schema violations).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// The feasibility structure admits no solution.
class Infeasible : public Error {
 public:
  using Error::Error;
};

/// A configured resource cap was hit; callers may relax parameters and retry.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// Exponential-sum decomposition could not reach the target error within the
/// term budget. Signals the utility is too rough for the budget.
class TermBudgetExceeded : public BudgetExceeded {
 public:
  using BudgetExceeded::BudgetExceeded;
};

/// Reachable-set enumeration grew past the configured state cap.
class StateBudgetExceeded : public BudgetExceeded {
 public:
  using BudgetExceeded::BudgetExceeded;
};

/// Spanning-tree enumeration guard (matrix-tree count above the cap).
class TooManyTrees : public BudgetExceeded {
 public:
  using BudgetExceeded::BudgetExceeded;
};

/// Brute-force oracle enumeration cap.
class TooManySolutions : public BudgetExceeded {
 public:
  using BudgetExceeded::BudgetExceeded;
};

/// Exact convolution support grew past the cap.
class SupportExplosion : public BudgetExceeded {
 public:
  using BudgetExceeded::BudgetExceeded;
};

/// An iterative scheme failed to settle (e.g. the h loop in decomposition).
class ConvergenceFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace eumax
