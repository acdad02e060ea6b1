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

#include <cmath>
#include <numeric>
#include <thread>
#include <vector>

#include "doctest.h"
#include "spreadpoly/config.hpp"
#include "spreadpoly/palindrome.hpp"
#include "spreadpoly/rational.hpp"
#include "spreadpoly/sequences.hpp"

using namespace spreadpoly;

namespace {

const IntPoly X = IntPoly::x();

unsigned long totient_by_enumeration(unsigned long n) {
    unsigned long count = 0;
    for (unsigned long k = 1; k <= n; ++k)
        if (std::gcd(k, n) == 1) ++count;
    return count;
}

std::vector<unsigned> divisors_by_enumeration(unsigned n) {
    std::vector<unsigned> out;
    for (unsigned d = 1; d <= n; ++d)
        if (n % d == 0) out.push_back(d);
    return out;
}

IntPoly x_pow_minus_one(unsigned n) { return IntPoly::monomial(1, n) - IntPoly{1}; }

}  // namespace

TEST_CASE("lucas") {
    CHECK(lucas(0) == IntPoly{2});
    CHECK(lucas(1) == X);
    CHECK(lucas(2) == IntPoly{-2, 0, 1});
    CHECK(lucas(3) == IntPoly{0, -3, 0, 1});
    CHECK(lucas(4) == IntPoly{2, 0, -4, 0, 1});
    CHECK(lucas(5) == IntPoly{0, 5, 0, -5, 0, 1});
    CHECK(lucas(6) == IntPoly{-2, 0, 9, 0, -6, 0, 1});
    for (unsigned n = 1; n <= 60; ++n) {
        REQUIRE(lucas(n).degree() == static_cast<std::ptrdiff_t>(n));
        REQUIRE(lucas(n).is_monic());
        // L_n(2) = 2 (z = 1) and L_n(z + 1/z) = z^n + z^-n at z = 2
        REQUIRE(eval_int(lucas(n), 2) == 2);
        const ExactRational z(2);
        REQUIRE(eval_rational(lucas(n), z + z.pow(-1)) == z.pow(n) + z.pow(-static_cast<long>(n)));
    }
}

TEST_CASE("cyclotomic") {
    CHECK(cyclotomic(1) == IntPoly{-1, 1});
    CHECK(cyclotomic(2) == IntPoly{1, 1});
    CHECK(cyclotomic(3) == IntPoly{1, 1, 1});
    CHECK(cyclotomic(4) == IntPoly{1, 0, 1});
    CHECK(cyclotomic(5) == IntPoly{1, 1, 1, 1, 1});
    CHECK(cyclotomic(6) == IntPoly{1, -1, 1});
    CHECK(cyclotomic(7) == IntPoly{1, 1, 1, 1, 1, 1, 1});
    CHECK(cyclotomic(8) == IntPoly{1, 0, 0, 0, 1});
    CHECK(cyclotomic(9) == IntPoly{1, 0, 0, 1, 0, 0, 1});
    // first coefficient of absolute value 2 appears at n = 105
    CHECK(cyclotomic(105).coeff(7) == -2);
    CHECK_THROWS_AS(cyclotomic(0), std::invalid_argument);
}

TEST_CASE("cyclotomic completeness and palindromy") {
    for (unsigned n = 1; n <= 200; ++n) {
        IntPoly prod{1};
        for (unsigned d : divisors(n)) prod = prod * cyclotomic(d);
        REQUIRE(prod == x_pow_minus_one(n));
        REQUIRE(cyclotomic(n).degree() == static_cast<std::ptrdiff_t>(totient(n)));
        if (n >= 3) {
            REQUIRE(is_palindromic(cyclotomic(n)));
            REQUIRE(cyclotomic(n).degree() % 2 == 0);
        }
    }
}

TEST_CASE("zpread and its Lucas oracle") {
    CHECK(zpread(1) == X);
    CHECK(zpread(2) == IntPoly{0, 4, -1});
    CHECK(zpread(3) == IntPoly{0, 9, -6, 1});
    CHECK(zpread(4) == IntPoly{0, 16, -20, 8, -1});
    CHECK(zpread(5) == IntPoly{0, 25, -50, 35, -10, 1});
    CHECK(zpread_via_lucas(1) == X);
    CHECK(zpread_via_lucas(2) == IntPoly{0, 4, -1});
    CHECK(zpread_via_lucas(7) == zpread(7));
    for (unsigned n = 1; n <= 200; ++n) {
        REQUIRE(zpread(n) == zpread_via_lucas(n));
        REQUIRE(zpread(n).coeff(0) == 0);
        REQUIRE(zpread(n).coeff(1) == BigInt(n) * n);
    }
    CHECK_THROWS_AS(zpread(0), std::invalid_argument);
}

TEST_CASE("monic zpread") {
    CHECK(monic_zpread(1) == X);
    CHECK(monic_zpread(2) == IntPoly{0, -4, 1});
    CHECK(monic_zpread(3) == IntPoly{0, 9, -6, 1});
    CHECK(monic_zpread(4) == IntPoly{0, -16, 20, -8, 1});
    CHECK(monic_zpread(5) == IntPoly{0, 25, -50, 35, -10, 1});
    for (unsigned n = 1; n <= 40; ++n) REQUIRE(monic_zpread(n).is_monic());
}

TEST_CASE("spread") {
    CHECK(spread(1) == X);
    CHECK(spread(2) == IntPoly{0, 4, -4});
    CHECK(spread(3) == IntPoly{0, 9, -24, 16});
    for (unsigned n = 1; n <= 12; ++n) {
        // Horner error grows with the coefficient sizes.
        const double bound = 1e-14 * (1 + l1_norm(spread(n)).get_d());
        for (double t : {0.1, 0.37, 0.9, 1.3}) {
            const double s = std::sin(t);
            const double expect = std::pow(std::sin(n * t), 2);
            REQUIRE(std::abs(eval_float(spread(n), s * s) - expect) < bound);
        }
    }
}

TEST_CASE("fibonacci") {
    const long first[] = {0, 1, 1, 2, 3, 5, 8, 13, 21, 34, 55};
    for (unsigned n = 0; n <= 10; ++n) CHECK(fibonacci(n) == first[n]);
    const BigInt f100 = fibonacci(100);
    CHECK(f100 == fibonacci(99) + fibonacci(98));
    BigInt g;
    mpz_gcd(g.get_mpz_t(), f100.get_mpz_t(), fibonacci(60).get_mpz_t());
    CHECK(g == fibonacci(20));
    CHECK(f100 == BigInt("354224848179261915075"));
}

TEST_CASE("totient and divisors against enumeration") {
    CHECK(totient(1) == 1);
    CHECK(totient(12) == 4);
    CHECK(totient(9) == 6);
    CHECK(divisors(1) == std::vector<unsigned>{1});
    CHECK(divisors(12) == std::vector<unsigned>{1, 2, 3, 4, 6, 12});
    for (unsigned n = 1; n <= 500; ++n) {
        REQUIRE(totient(n) == totient_by_enumeration(n));
        REQUIRE(divisors(n) == divisors_by_enumeration(n));
        unsigned long sum = 0;
        for (unsigned d : divisors(n)) sum += totient(d);
        REQUIRE(sum == n);
    }
    CHECK(totient(1000000007UL) == 1000000006UL);
    CHECK_THROWS_AS(totient(0), std::invalid_argument);
    CHECK_THROWS_AS(divisors(0), std::invalid_argument);
}

TEST_CASE("Lucas identities") {
    for (unsigned m = 1; m <= 20; ++m)
        for (unsigned n = 1; n <= 20; ++n) REQUIRE(lucas(m * n) == compose(lucas(m), lucas(n)));
    const IntPoly two{2};
    for (unsigned n = 1; n <= 100; ++n) {
        REQUIRE(lucas(2 * n) - two == (lucas(n) - two) * (lucas(n) + two));
        REQUIRE(lucas(2 * n) + two == square(lucas(n)));
    }
    for (unsigned m = 0; m <= 50; ++m)
        REQUIRE((lucas(2 * m + 1) - two) * IntPoly{-2, 1} == square(lucas(m + 1) - lucas(m)));
    for (unsigned m = 1; m <= 50; ++m)
        REQUIRE((lucas(2 * m) - two) * IntPoly{-4, 0, 1} == square(lucas(m + 1) - lucas(m - 1)));
}

TEST_CASE("zpread identities") {
    for (unsigned m = 1; m <= 49; m += 2) REQUIRE(substitute_square(zpread(m)) == square(lucas(m)));
    for (unsigned n = 1; n <= 25; ++n)
        REQUIRE(substitute_square(zpread(2 * n)) == IntPoly{4} - square(lucas(2 * n)));
    for (unsigned m = 1; m <= 15; ++m)
        for (unsigned n = 1; n <= 15; ++n) REQUIRE(zpread(m * n) == compose(zpread(m), zpread(n)));
}

TEST_CASE("zpread u-substitution at rational points") {
    const ExactRational us[] = {ExactRational(2), ExactRational(3), ExactRational(5, 2), ExactRational(-3, 2)};
    for (const ExactRational& u : us) {
        const ExactRational d = u - u.pow(-1);
        const ExactRational at = -(d * d);
        for (long n = 1; n <= 30; ++n) {
            const ExactRational e = u.pow(n) - u.pow(-n);
            REQUIRE(eval_rational(zpread(static_cast<unsigned>(n)), at) == -(e * e));
        }
    }
}

TEST_CASE("cache honours its index limit") {
    SequenceCache bounded(10);
    CHECK(bounded.size() == 0);
    (void)bounded.lucas(50);
    (void)bounded.cyclotomic(30);
    (void)bounded.fibonacci(40);
    const std::size_t after = bounded.size();
    CHECK(after > 0);
    CHECK(after <= 3 * 11);
    CHECK(bounded.lucas(50) == lucas(50));
    CHECK(bounded.cyclotomic(30) == cyclotomic(30));
    CHECK(bounded.fibonacci(40) == fibonacci(40));
    bounded.clear();
    CHECK(bounded.size() == 0);

    SequenceCache unbounded(0);
    (void)unbounded.lucas(50);
    CHECK(unbounded.size() >= 51);
}

TEST_CASE("cache hits are identical to recomputation") {
    SequenceCache warm(0);
    SequenceCache cold(1);
    for (unsigned n = 1; n <= 80; ++n) {
        REQUIRE(warm.lucas(n) == cold.lucas(n));
        REQUIRE(warm.cyclotomic(n) == cold.cyclotomic(n));
        REQUIRE(warm.fibonacci(n) == cold.fibonacci(n));
    }
    for (unsigned n = 80; n >= 1; --n) REQUIRE(warm.lucas(n) == cold.lucas(n));
}

TEST_CASE("cache is consistent under concurrent access") {
    SequenceCache shared(0);
    SequenceCache reference(1);
    std::vector<IntPoly> expect_l, expect_c;
    for (unsigned n = 1; n <= 120; ++n) {
        expect_l.push_back(reference.lucas(n));
        expect_c.push_back(reference.cyclotomic(n));
    }
    std::vector<int> bad(8, 0);
    {
        std::vector<std::jthread> threads;
        for (int t = 0; t < 8; ++t) {
            threads.emplace_back([&, t] {
                for (unsigned i = 0; i < 120; ++i) {
                    const unsigned n = 1 + (i * 37 + t * 13) % 120;
                    if (shared.lucas(n) != expect_l[n - 1]) ++bad[t];
                    if (shared.cyclotomic(n) != expect_c[n - 1]) ++bad[t];
                }
            });
        }
    }
    for (int b : bad) CHECK(b == 0);
}

TEST_CASE("environment overrides") {
    const std::size_t t = mul_threshold();
    const std::size_t c = cache_max_index();
    setenv("SPREADPOLY_MUL_THRESHOLD", "12", 1);
    setenv("SPREADPOLY_CACHE_MAX", "77", 1);
    apply_env_overrides();
    CHECK(mul_threshold() == 12);
    CHECK(cache_max_index() == 77);
    setenv("SPREADPOLY_MUL_THRESHOLD", "not-a-number", 1);
    apply_env_overrides();
    CHECK(mul_threshold() == 12);
    unsetenv("SPREADPOLY_MUL_THRESHOLD");
    unsetenv("SPREADPOLY_CACHE_MAX");
    set_mul_threshold(t);
    set_cache_max_index(c);
}
