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

#include "spreadpoly/config.hpp"

#include <atomic>
#include <charconv>
#include <cstdlib>
#include <optional>
#include <string_view>

namespace spreadpoly {

namespace {

std::atomic<std::size_t> g_mul_threshold{kDefaultMulThreshold};
std::atomic<std::size_t> g_cache_max_index{0};

std::optional<std::size_t> env_size(const char* name) {
    const char* raw = std::getenv(name);
    if (raw == nullptr) return std::nullopt;
    std::string_view s(raw);
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
    return value;
}

}  // namespace

std::size_t mul_threshold() noexcept { return g_mul_threshold.load(std::memory_order_relaxed); }

void set_mul_threshold(std::size_t threshold) noexcept { g_mul_threshold.store(threshold, std::memory_order_relaxed); }

std::size_t cache_max_index() noexcept { return g_cache_max_index.load(std::memory_order_relaxed); }

void set_cache_max_index(std::size_t max_index) noexcept { g_cache_max_index.store(max_index, std::memory_order_relaxed); }

void apply_env_overrides() {
    if (auto v = env_size("SPREADPOLY_MUL_THRESHOLD")) set_mul_threshold(*v);
    if (auto v = env_size("SPREADPOLY_CACHE_MAX")) set_cache_max_index(*v);
}

}  // namespace spreadpoly
