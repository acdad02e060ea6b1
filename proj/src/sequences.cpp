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

#include "spreadpoly/sequences.hpp"

#include <stdexcept>
#include <string>

#include "spreadpoly/config.hpp"
#include "spreadpoly/errors.hpp"

namespace spreadpoly {

namespace {

void require_positive(unsigned n, const char* what) {
    if (n == 0) throw std::invalid_argument(std::string(what) + ": index must be >= 1");
}

// binom(a, b) by multiplicative accumulation; every partial product
// binom(a - b + i, i) is an integer, so each division is exact.
BigInt binomial(unsigned long a, unsigned long b) {
    BigInt r = 1;
    for (unsigned long i = 1; i <= b; ++i) {
        r *= a - b + i;
        mpz_divexact_ui(r.get_mpz_t(), r.get_mpz_t(), i);
    }
    return r;
}

}  // namespace

bool SequenceCache::cacheable(unsigned n) const {
    const std::size_t limit = max_index_.value_or(cache_max_index());
    return limit == 0 || n <= limit;
}

IntPoly SequenceCache::lucas(unsigned n) {
    std::lock_guard lock(mu_);
    if (n < lucas_.size()) return lucas_[n];

    if (lucas_.empty() && cacheable(0)) lucas_.push_back(IntPoly{2});
    if (lucas_.size() == 1 && cacheable(1)) lucas_.push_back(IntPoly::x());

    IntPoly prev2 = IntPoly{2};
    IntPoly prev1 = IntPoly::x();
    unsigned k = 1;
    if (lucas_.size() >= 2) {
        k = static_cast<unsigned>(lucas_.size()) - 1;
        prev2 = lucas_[k - 1];
        prev1 = lucas_[k];
    }
    if (n == 0) return prev2;
    const IntPoly x = IntPoly::x();
    while (k < n) {
        IntPoly next = mul(x, prev1) - prev2;
        ++k;
        if (k == lucas_.size() && cacheable(k)) lucas_.push_back(next);
        prev2 = std::move(prev1);
        prev1 = std::move(next);
    }
    return prev1;
}

IntPoly SequenceCache::cyclotomic(unsigned n) {
    require_positive(n, "cyclotomic");
    std::lock_guard lock(mu_);
    return cyclotomic_locked(n);
}

IntPoly SequenceCache::cyclotomic_locked(unsigned n) {
    if (auto it = cyclotomic_.find(n); it != cyclotomic_.end()) return it->second;

    IntPoly denom{1};
    for (unsigned d : divisors(n))
        if (d < n) denom = mul(denom, cyclotomic_locked(d));
    IntPoly c = div_exact(IntPoly::monomial(1, n) - IntPoly{1}, denom);
    if (cacheable(n)) cyclotomic_.emplace(n, c);
    return c;
}

BigInt SequenceCache::fibonacci(unsigned n) {
    std::lock_guard lock(mu_);
    if (fibonacci_.empty()) fibonacci_ = {BigInt(0), BigInt(1)};
    while (fibonacci_.size() <= n && cacheable(static_cast<unsigned>(fibonacci_.size()))) {
        const auto m = fibonacci_.size();
        fibonacci_.push_back(fibonacci_[m - 1] + fibonacci_[m - 2]);
    }
    if (n < fibonacci_.size()) return fibonacci_[n];

    auto k = static_cast<unsigned>(fibonacci_.size()) - 1;
    BigInt a = fibonacci_[k - 1];  // F_{k-1}
    BigInt b = fibonacci_[k];      // F_k
    while (k < n) {
        BigInt next = a + b;
        a = std::move(b);
        b = std::move(next);
        ++k;
    }
    return b;
}

std::size_t SequenceCache::size() const {
    std::lock_guard lock(mu_);
    return lucas_.size() + cyclotomic_.size() + fibonacci_.size();
}

void SequenceCache::clear() {
    std::lock_guard lock(mu_);
    lucas_.clear();
    cyclotomic_.clear();
    fibonacci_.clear();
}

SequenceCache& default_cache() {
    static SequenceCache cache;
    return cache;
}

IntPoly lucas(unsigned n) { return default_cache().lucas(n); }

IntPoly cyclotomic(unsigned n) { return default_cache().cyclotomic(n); }

IntPoly zpread(unsigned n) {
    require_positive(n, "zpread");
    std::vector<BigInt> coeffs(n + 1);
    for (unsigned k = 1; k <= n; ++k) {
        BigInt c = binomial(n + k - 1, n - k);
        c *= n;
        if (!mpz_divisible_ui_p(c.get_mpz_t(), k))
            throw InternalInconsistency("Z_" + std::to_string(n) + " coefficient of x^" + std::to_string(k) + " is not integral");
        mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), k);
        coeffs[k] = (k % 2 == 1) ? c : BigInt(-c);
    }
    return IntPoly(std::move(coeffs));
}

IntPoly zpread_via_lucas(unsigned n) {
    require_positive(n, "zpread_via_lucas");
    return IntPoly{2} - compose(lucas(n), IntPoly{2, -1});
}

IntPoly monic_zpread(unsigned n) {
    IntPoly z = zpread(n);
    return (n % 2 == 1) ? z : neg(z);
}

IntPoly spread(unsigned n) {
    const IntPoly z = zpread(n);
    if (z.coeff(0) != 0) throw InternalInconsistency("Z_" + std::to_string(n) + " has a nonzero constant term");
    std::vector<BigInt> coeffs(z.size());
    BigInt four_pow = 1;  // 4^(k-1)
    for (std::size_t k = 1; k < z.size(); ++k) {
        coeffs[k] = z.coeff(k) * four_pow;
        four_pow *= 4;
    }
    return IntPoly(std::move(coeffs));
}

BigInt fibonacci(unsigned n) { return default_cache().fibonacci(n); }

unsigned long totient(unsigned long n) {
    if (n == 0) throw std::invalid_argument("totient: argument must be >= 1");
    unsigned long result = n;
    for (unsigned long p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

std::vector<unsigned> divisors(unsigned n) {
    require_positive(n, "divisors");
    std::vector<unsigned> low, high;
    for (unsigned d = 1; static_cast<unsigned long>(d) * d <= n; ++d) {
        if (n % d != 0) continue;
        low.push_back(d);
        if (d != n / d) high.push_back(n / d);
    }
    low.insert(low.end(), high.rbegin(), high.rend());
    return low;
}

}  // namespace spreadpoly
