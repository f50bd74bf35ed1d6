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

#include <cstdlib>

#include "kernels_internal.h"
#include "qclean/errors.h"

namespace qclean::kernels {

std::string_view isa_name(Isa isa) {
    switch (isa) {
        case Isa::scalar:
            return "scalar";
        case Isa::avx2:
            return "avx2";
        case Isa::neon:
            return "neon";
    }
    return "unknown";
}

std::optional<Isa> parse_isa(std::string_view name) {
    if (name == "scalar") return Isa::scalar;
    if (name == "avx2") return Isa::avx2;
    if (name == "neon") return Isa::neon;
    return std::nullopt;
}

namespace {

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(__i386__)
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") != 0;
#else
    return false;
#endif
}

const KernelTable &select_default() {
    if (const char *forced = std::getenv("QCLEAN_ISA"); forced != nullptr && *forced != '\0') {
        auto isa = parse_isa(forced);
        if (!isa) {
            throw PreconditionError(std::string("QCLEAN_ISA: unknown ISA '") + forced + "'");
        }
        if (*isa == Isa::scalar) return scalar_kernels();
        if (*isa == Isa::avx2 && detail::avx2_table() != nullptr && cpu_has_avx2()) return *detail::avx2_table();
        if (*isa == Isa::neon && detail::neon_table() != nullptr) return *detail::neon_table();
        throw PreconditionError(std::string("QCLEAN_ISA: ISA '") + forced + "' is not available on this machine");
    }
    if (detail::avx2_table() != nullptr && cpu_has_avx2()) return *detail::avx2_table();
    if (detail::neon_table() != nullptr) return *detail::neon_table();
    return scalar_kernels();
}

}  // namespace

std::optional<KernelTable> kernels_for(Isa isa) {
    switch (isa) {
        case Isa::scalar:
            return scalar_kernels();
        case Isa::avx2:
            if (detail::avx2_table() != nullptr && cpu_has_avx2()) return *detail::avx2_table();
            return std::nullopt;
        case Isa::neon:
            if (detail::neon_table() != nullptr) return *detail::neon_table();
            return std::nullopt;
    }
    return std::nullopt;
}

const KernelTable &active() {
    static const KernelTable &table = select_default();
    return table;
}

}  // namespace qclean::kernels
