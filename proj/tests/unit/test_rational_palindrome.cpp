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

#include <random>

#include "doctest.h"
#include "spreadpoly/errors.hpp"
#include "spreadpoly/palindrome.hpp"
#include "spreadpoly/rational.hpp"
#include "spreadpoly/sequences.hpp"

using namespace spreadpoly;

TEST_CASE("rationals stay reduced") {
    const ExactRational a(6, -4);
    CHECK(a.numerator() == -3);
    CHECK(a.denominator() == 2);
    CHECK(a.to_string() == "-3/2");
    CHECK(ExactRational(4, 2).to_string() == "2");
    CHECK(ExactRational(1, 2) + ExactRational(1, 3) == ExactRational(5, 6));
    CHECK(ExactRational(1, 2) - ExactRational(1, 2) == ExactRational(0));
    CHECK(ExactRational(2, 3) * ExactRational(3, 4) == ExactRational(1, 2));
    CHECK(ExactRational(2, 3) / ExactRational(4, 3) == ExactRational(1, 2));
    CHECK(-ExactRational(1, 2) == ExactRational(-1, 2));
    CHECK(ExactRational(2).pow(-3) == ExactRational(1, 8));
    CHECK(ExactRational(-3, 2).pow(3) == ExactRational(-27, 8));
    CHECK(ExactRational(5).pow(0) == ExactRational(1));
}

TEST_CASE("rational division by zero") {
    CHECK_THROWS_AS(ExactRational(1, 0), DivideByZero);
    CHECK_THROWS_AS(ExactRational(1) / ExactRational(0), DivideByZero);
    CHECK_THROWS_AS(ExactRational(0).pow(-1), DivideByZero);
}

TEST_CASE("palindrome_fold examples") {
    CHECK(palindrome_fold(IntPoly{1, 0, 1}).lucas_coeffs == std::vector<BigInt>{0, 1});
    CHECK(palindrome_fold(cyclotomic(9)).lucas_coeffs == std::vector<BigInt>{1, 0, 0, 1});
    CHECK(cyclotomic(12) == IntPoly{1, 0, -1, 0, 1});
    const PalindromeFold f12 = palindrome_fold(cyclotomic(12));
    CHECK(f12.lucas_coeffs == std::vector<BigInt>{-1, 0, 1});
    CHECK(f12.half_degree() == 2);
    CHECK(unfold(f12) == cyclotomic(12));
}

TEST_CASE("palindrome_fold rejects bad input") {
    CHECK_THROWS_AS(palindrome_fold(IntPoly{1, 2, 3}), NotPalindromic);
    CHECK_THROWS_AS(palindrome_fold(IntPoly{1, 1}), OddDegree);
    CHECK_THROWS_AS(palindrome_fold(IntPoly{}), NotPalindromic);
    CHECK(is_palindromic(IntPoly{1, 1}));
    CHECK_FALSE(is_palindromic(IntPoly{1, 2}));
    CHECK(palindrome_fold(IntPoly{7}).lucas_coeffs == std::vector<BigInt>{7});
}

TEST_CASE("property: fold round-trip on random palindromes") {
    std::mt19937_64 rng(41);
    std::uniform_int_distribution<int> half(0, 20);
    std::uniform_int_distribution<long> coeff(-1000000, 1000000);
    for (int i = 0; i < 1000; ++i) {
        const int m = half(rng);
        std::vector<BigInt> c(2 * m + 1);
        for (int k = 0; k <= m; ++k) c[m + k] = c[m - k] = coeff(rng);
        if (c.front() == 0) c.front() = c.back() = 1;
        const IntPoly p(c);
        const PalindromeFold f = palindrome_fold(p);
        REQUIRE(f.half_degree() == static_cast<std::size_t>(m));
        for (int k = 0; k <= m; ++k) REQUIRE(f.lucas_coeffs[k] == c[m + k]);
        REQUIRE(unfold(f) == p);
    }
}

TEST_CASE("cyclotomic folds round-trip") {
    for (unsigned n = 3; n <= 200; ++n) {
        const IntPoly c = cyclotomic(n);
        REQUIRE(unfold(palindrome_fold(c)) == c);
    }
}
