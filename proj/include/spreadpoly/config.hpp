/*
   Copyright 2026 The spreadpoly Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef SPREADPOLY_CONFIG_HPP
#define SPREADPOLY_CONFIG_HPP

#include <cstddef>

namespace spreadpoly {

inline constexpr std::size_t kDefaultMulThreshold = 32;

/// Operand size (in coefficients) at which mul() switches to Karatsuba.
std::size_t mul_threshold() noexcept;
void set_mul_threshold(std::size_t threshold) noexcept;

/// Largest index the default sequence caches will memoize; 0 means unbounded.
std::size_t cache_max_index() noexcept;
void set_cache_max_index(std::size_t max_index) noexcept;

/// Reads SPREADPOLY_MUL_THRESHOLD and SPREADPOLY_CACHE_MAX, when set, into the
/// process-wide settings above. Malformed values are ignored.
void apply_env_overrides();

}  // namespace spreadpoly

#endif  // SPREADPOLY_CONFIG_HPP
