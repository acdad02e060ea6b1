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

#include "spreadpoly/palindrome.hpp"

#include "spreadpoly/errors.hpp"

namespace spreadpoly {

bool is_palindromic(const IntPoly& p) {
    const auto c = p.coeffs();
    for (std::size_t i = 0, j = c.size(); i < j--; ++i)
        if (c[i] != c[j]) return false;
    return true;
}

PalindromeFold palindrome_fold(const IntPoly& p) {
    if (p.is_zero()) throw NotPalindromic("cannot fold the zero polynomial");
    if (p.degree() % 2 != 0) throw OddDegree("cannot fold a polynomial of odd degree " + std::to_string(p.degree()));
    if (!is_palindromic(p)) throw NotPalindromic("coefficient sequence is not symmetric: " + to_string(p));

    const auto m = static_cast<std::size_t>(p.degree() / 2);
    PalindromeFold fold;
    fold.lucas_coeffs.reserve(m + 1);
    for (std::size_t k = 0; k <= m; ++k) fold.lucas_coeffs.push_back(p.coeff(m + k));
    return fold;
}

IntPoly unfold(const PalindromeFold& fold) {
    if (fold.lucas_coeffs.empty()) return {};
    const std::size_t m = fold.half_degree();
    std::vector<BigInt> out(2 * m + 1);
    out[m] = fold.lucas_coeffs[0];
    for (std::size_t k = 1; k <= m; ++k) {
        out[m + k] = fold.lucas_coeffs[k];
        out[m - k] = fold.lucas_coeffs[k];
    }
    return IntPoly(std::move(out));
}

}  // namespace spreadpoly
