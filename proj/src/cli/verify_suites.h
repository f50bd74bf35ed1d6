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

// Randomized property suites behind `qclean verify`.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace qclean::cli {

struct SuiteResult {
    std::string name;
    std::size_t checks = 0;
    std::size_t failures = 0;
    /// Message of the first failure in trial order, if any.
    std::string first_failure;
};

struct SuiteOptions {
    std::size_t trials = 100;
    std::uint64_t seed = 1;
    /// Also compare against the brute-force oracle where it is cheap enough.
    bool oracle = false;
    unsigned threads = 1;
};

/// Known names: cl, css, subsystem, lattice, abelian.
const std::vector<std::string> &suite_names();

/// Throws std::invalid_argument for an unknown name.
SuiteResult run_suite(const std::string &name, const SuiteOptions &options);

}  // namespace qclean::cli
