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

#ifndef SPREADPOLY_PALINDROME_HPP
#define SPREADPOLY_PALINDROME_HPP

#include <vector>

#include "spreadpoly/int_poly.hpp"

namespace spreadpoly {

/**
 * Symmetric-basis coefficients of a palindromic polynomial of degree 2m:
 *
 *     p(x) = x^m * (c_0 + sum_{k=1..m} c_k (x^k + x^-k))
 *
 * Replacing each x^k + x^-k by the Lucas polynomial L_k(x) and keeping c_0 as
 * a plain constant gives the reduced polynomial of degree m.
 */
struct PalindromeFold {
    std::vector<BigInt> lucas_coeffs;

    std::size_t half_degree() const noexcept { return lucas_coeffs.empty() ? 0 : lucas_coeffs.size() - 1; }
    friend bool operator==(const PalindromeFold&, const PalindromeFold&) = default;
};

bool is_palindromic(const IntPoly& p);

/// Throws NotPalindromic for the zero polynomial or a non-symmetric
/// coefficient sequence, and OddDegree for odd degree.
PalindromeFold palindrome_fold(const IntPoly& p);

/// Rebuilds the palindromic polynomial of degree 2m from its fold.
IntPoly unfold(const PalindromeFold& fold);

}  // namespace spreadpoly

#endif  // SPREADPOLY_PALINDROME_HPP
