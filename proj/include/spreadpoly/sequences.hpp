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

#ifndef SPREADPOLY_SEQUENCES_HPP
#define SPREADPOLY_SEQUENCES_HPP

#include <cstddef>
#include <map>
#include <mutex>
#include <optional>
#include <vector>

#include "spreadpoly/int_poly.hpp"

namespace spreadpoly {

/**
 * Insert-only memo tables for the Lucas, cyclotomic and Fibonacci families.
 *
 * Entries are never mutated once stored, so a hit is bit-identical to a
 * recomputation. Indices above the configured maximum are computed but not
 * stored. All members are safe to call concurrently.
 */
class SequenceCache {
   public:
    /// `max_index` of nullopt follows the process-wide cache_max_index();
    /// 0 means unbounded.
    explicit SequenceCache(std::optional<std::size_t> max_index = std::nullopt) : max_index_(max_index) {}

    SequenceCache(const SequenceCache&) = delete;
    SequenceCache& operator=(const SequenceCache&) = delete;

    IntPoly lucas(unsigned n);
    IntPoly cyclotomic(unsigned n);
    BigInt fibonacci(unsigned n);

    /// Number of memoized entries across all families.
    std::size_t size() const;
    void clear();

   private:
    bool cacheable(unsigned n) const;
    IntPoly cyclotomic_locked(unsigned n);

    std::optional<std::size_t> max_index_;
    mutable std::mutex mu_;
    std::vector<IntPoly> lucas_;  // contiguous from L_0
    std::map<unsigned, IntPoly> cyclotomic_;
    std::vector<BigInt> fibonacci_;  // contiguous from F_0
};

/// Process-wide cache used by the free functions below.
SequenceCache& default_cache();

/// L_n with L_0 = 2, L_1 = x, L_n = x L_{n-1} - L_{n-2}.
IntPoly lucas(unsigned n);

/// n-th cyclotomic polynomial, by exact division of x^n - 1 by the
/// cyclotomic polynomials of the proper divisors. Requires n >= 1.
IntPoly cyclotomic(unsigned n);

/// Z_n from the closed-form coefficients
/// (-1)^(k-1) * binom(n+k-1, n-k) * n / k. Requires n >= 1; throws
/// InternalInconsistency if a coefficient is not integral.
IntPoly zpread(unsigned n);

/// Z_n = 2 - L_n(2 - x). Independent of zpread().
IntPoly zpread_via_lucas(unsigned n);

/// z_n = (-1)^(n-1) Z_n, monic of degree n.
IntPoly monic_zpread(unsigned n);

/// S_n(x) = Z_n(4x) / 4, the polynomial with S_n(sin^2 t) = sin^2(n t).
IntPoly spread(unsigned n);

BigInt fibonacci(unsigned n);

/// Euler's totient, by trial division. Requires n >= 1.
unsigned long totient(unsigned long n);

/// Positive divisors of n in ascending order. Requires n >= 1.
std::vector<unsigned> divisors(unsigned n);

}  // namespace spreadpoly

#endif  // SPREADPOLY_SEQUENCES_HPP
