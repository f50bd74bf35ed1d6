// Copyright 2026 The qclean Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qclean {

/// Operands live in spaces (or groups) of different sizes.
class DimensionMismatch : public std::invalid_argument {
   public:
    explicit DimensionMismatch(const std::string &message) : std::invalid_argument(message) {}
};

/// A documented precondition of an operation does not hold for the given input,
/// e.g. a subspace passed as isotropic is not.
class PreconditionError : public std::invalid_argument {
   public:
    explicit PreconditionError(const std::string &message) : std::invalid_argument(message) {}
};

/// A value failed validation of its type invariants, e.g. H_x H_z^T != 0 or a
/// member set that is not closed.
class InvariantViolation : public std::invalid_argument {
   public:
    explicit InvariantViolation(const std::string &message) : std::invalid_argument(message) {}
};

/// An enumeration would exceed the configured work budget.
class BudgetExceeded : public std::runtime_error {
   public:
    BudgetExceeded(const std::string &what, double required, double budget)
        : std::runtime_error(what + ": needs ~" + std::to_string(required) + " steps, budget is " +
                             std::to_string(budget)),
          required_(required),
          budget_(budget) {}

    double required() const { return required_; }
    double budget() const { return budget_; }

   private:
    double required_;
    double budget_;
};

/// A randomized construction could not meet its request, e.g. too few
/// independent vectors are available.
class Infeasible : public std::runtime_error {
   public:
    explicit Infeasible(const std::string &message) : std::runtime_error(message) {}
};

/// A proven identity failed to hold. This always indicates a bug in the library,
/// never bad user input.
class InternalCheckFailed : public std::logic_error {
   public:
    explicit InternalCheckFailed(const std::string &message) : std::logic_error(message) {}
};

namespace detail {
[[noreturn]] void fail_check(const char *expr, const char *file, int line, const std::string &msg);
}  // namespace detail

}  // namespace qclean

#define QCLEAN_CHECK(cond, msg)                                                \
    do {                                                                       \
        if (!(cond)) {                                                         \
            ::qclean::detail::fail_check(#cond, __FILE__, __LINE__, (msg));    \
        }                                                                      \
    } while (0)
