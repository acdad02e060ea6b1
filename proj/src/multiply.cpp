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

#include <algorithm>
#include <span>
#include <utility>
#include <vector>

#include "spreadpoly/config.hpp"
#include "spreadpoly/int_poly.hpp"

namespace spreadpoly {

namespace {

using Coeffs = std::vector<BigInt>;
using View = std::span<const BigInt>;

// out[i + j] += a[i] * b[j]
void schoolbook_accumulate(View a, View b, std::span<BigInt> out) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) mpz_addmul(out[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
}

void add_shifted(std::span<BigInt> out, const Coeffs& src, std::size_t shift) {
    for (std::size_t i = 0; i < src.size(); ++i) out[i + shift] += src[i];
}

Coeffs sum_halves(View lo, View hi) {
    Coeffs s(std::max(lo.size(), hi.size()));
    for (std::size_t i = 0; i < lo.size(); ++i) s[i] = lo[i];
    for (std::size_t i = 0; i < hi.size(); ++i) s[i] += hi[i];
    return s;
}

Coeffs karatsuba(View a, View b, std::size_t threshold) {
    if (a.empty() || b.empty()) return {};
    if (a.size() < b.size()) std::swap(a, b);

    Coeffs out(a.size() + b.size() - 1);
    if (b.size() < std::max<std::size_t>(threshold, 2)) {
        schoolbook_accumulate(a, b, out);
        return out;
    }

    const std::size_t h = a.size() / 2;
    const View a0 = a.first(h);
    const View a1 = a.subspan(h);
    if (b.size() <= h) {
        // Unbalanced: split only the longer operand.
        add_shifted(out, karatsuba(a0, b, threshold), 0);
        add_shifted(out, karatsuba(a1, b, threshold), h);
        return out;
    }

    const View b0 = b.first(h);
    const View b1 = b.subspan(h);
    Coeffs z0 = karatsuba(a0, b0, threshold);
    Coeffs z2 = karatsuba(a1, b1, threshold);
    const Coeffs sa = sum_halves(a0, a1);
    const Coeffs sb = sum_halves(b0, b1);
    Coeffs z1 = karatsuba(sa, sb, threshold);
    for (std::size_t i = 0; i < z0.size(); ++i) z1[i] -= z0[i];
    for (std::size_t i = 0; i < z2.size(); ++i) z1[i] -= z2[i];

    add_shifted(out, z0, 0);
    add_shifted(out, z1, h);
    add_shifted(out, z2, 2 * h);
    return out;
}

}  // namespace

IntPoly mul_schoolbook(const IntPoly& p, const IntPoly& q) {
    if (p.is_zero() || q.is_zero()) return {};
    Coeffs out(p.size() + q.size() - 1);
    schoolbook_accumulate(p.coeffs(), q.coeffs(), out);
    return IntPoly(std::move(out));
}

IntPoly mul_karatsuba(const IntPoly& p, const IntPoly& q, std::size_t threshold) {
    return IntPoly(karatsuba(p.coeffs(), q.coeffs(), threshold));
}

IntPoly mul(const IntPoly& p, const IntPoly& q) {
    const std::size_t threshold = mul_threshold();
    if (std::min(p.size(), q.size()) >= std::max<std::size_t>(threshold, 2)) return mul_karatsuba(p, q, threshold);
    return mul_schoolbook(p, q);
}

IntPoly square(const IntPoly& p) { return mul(p, p); }

IntPoly pow(const IntPoly& p, unsigned e) {
    IntPoly result{1};
    IntPoly base = p;
    while (e > 0) {
        if (e & 1U) result = mul(result, base);
        e >>= 1U;
        if (e > 0) base = square(base);
    }
    return result;
}

}  // namespace spreadpoly
