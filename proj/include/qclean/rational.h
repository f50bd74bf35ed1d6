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

#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

namespace qclean {

/// Positive rational number in lowest terms; the grading group Q+ of subgroup
/// lattices. Only multiplication and division are needed.
class Rational {
   public:
    constexpr Rational() = default;
    constexpr Rational(std::uint64_t num, std::uint64_t den = 1) : num_(num), den_(den) {  // NOLINT(google-explicit-constructor)
        if (den_ == 0) throw std::domain_error("Rational with zero denominator");
        auto g = std::gcd(num_, den_);
        num_ /= g;
        den_ /= g;
    }

    constexpr std::uint64_t num() const { return num_; }
    constexpr std::uint64_t den() const { return den_; }
    constexpr bool is_integer() const { return den_ == 1; }

    friend constexpr Rational operator*(Rational a, Rational b) {
        auto g1 = std::gcd(a.num_, b.den_);
        auto g2 = std::gcd(b.num_, a.den_);
        return Rational((a.num_ / g1) * (b.num_ / g2), (a.den_ / g2) * (b.den_ / g1));
    }
    friend constexpr Rational operator/(Rational a, Rational b) { return a * Rational(b.den_, b.num_); }
    friend constexpr bool operator==(Rational a, Rational b) = default;

    std::string to_string() const {
        return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
    }
    friend std::ostream &operator<<(std::ostream &os, Rational r) { return os << r.to_string(); }

   private:
    std::uint64_t num_ = 1;
    std::uint64_t den_ = 1;
};

}  // namespace qclean
