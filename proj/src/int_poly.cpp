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

#include "spreadpoly/int_poly.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <utility>

#include "spreadpoly/errors.hpp"
#include "spreadpoly/rational.hpp"

namespace spreadpoly {

namespace {

const BigInt kZero{0};

}  // namespace

IntPoly::IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs) coeffs_.emplace_back(c);
    normalize();
}

IntPoly IntPoly::constant(BigInt c) { return IntPoly(std::vector<BigInt>{std::move(c)}); }

IntPoly IntPoly::monomial(BigInt c, std::size_t k) {
    std::vector<BigInt> v(k + 1);
    v[k] = std::move(c);
    return IntPoly(std::move(v));
}

const BigInt& IntPoly::coeff(std::size_t k) const noexcept { return k < coeffs_.size() ? coeffs_[k] : kZero; }

void IntPoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPoly add(const IntPoly& p, const IntPoly& q) {
    const std::size_t n = std::max(p.size(), q.size());
    std::vector<BigInt> out(n);
    for (std::size_t k = 0; k < n; ++k) out[k] = p.coeff(k) + q.coeff(k);
    return IntPoly(std::move(out));
}

IntPoly sub(const IntPoly& p, const IntPoly& q) {
    const std::size_t n = std::max(p.size(), q.size());
    std::vector<BigInt> out(n);
    for (std::size_t k = 0; k < n; ++k) out[k] = p.coeff(k) - q.coeff(k);
    return IntPoly(std::move(out));
}

IntPoly neg(const IntPoly& p) {
    std::vector<BigInt> out(p.coeffs().begin(), p.coeffs().end());
    for (auto& c : out) c = -c;
    return IntPoly(std::move(out));
}

IntPoly scale(const IntPoly& p, const BigInt& c) {
    std::vector<BigInt> out(p.coeffs().begin(), p.coeffs().end());
    for (auto& v : out) v *= c;
    return IntPoly(std::move(out));
}

IntPoly div_exact(const IntPoly& p, const IntPoly& q) {
    if (q.is_zero()) throw DivideByZero();
    if (p.is_zero()) return {};
    if (p.size() < q.size()) throw NotDivisible("dividend degree is below divisor degree");

    // Integer long division. Each quotient coefficient is the one rational long
    // division would produce, so a failed exactness test at any step means the
    // rational quotient is not integral.
    std::vector<BigInt> rem(p.coeffs().begin(), p.coeffs().end());
    const auto dq = q.size() - 1;
    const BigInt& lead = q.leading();
    const bool monic = lead == 1;
    std::vector<BigInt> quot(p.size() - dq);
    BigInt t;
    for (std::size_t i = quot.size(); i-- > 0;) {
        BigInt& top = rem[i + dq];
        if (top == 0) continue;
        if (monic) {
            quot[i] = top;
        } else {
            if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t()))
                throw NotDivisible("quotient coefficient of x^" + std::to_string(i) + " is not an integer");
            mpz_divexact(quot[i].get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
        }
        for (std::size_t j = 0; j <= dq; ++j) {
            t = quot[i] * q.coeff(j);
            rem[i + j] -= t;
        }
    }
    for (std::size_t k = 0; k < dq; ++k)
        if (rem[k] != 0) throw NotDivisible("division leaves a nonzero remainder");
    return IntPoly(std::move(quot));
}

IntPoly compose(const IntPoly& p, const IntPoly& q) {
    if (p.is_zero()) return {};
    IntPoly acc = IntPoly::constant(p.leading());
    for (std::size_t k = p.size() - 1; k-- > 0;) acc = add(mul(acc, q), IntPoly::constant(p.coeff(k)));
    return acc;
}

IntPoly substitute_square(const IntPoly& p) {
    if (p.is_zero()) return {};
    std::vector<BigInt> out(2 * p.size() - 1);
    for (std::size_t k = 0; k < p.size(); ++k) out[2 * k] = p.coeff(k);
    return IntPoly(std::move(out));
}

IntPoly desubstitute_square(const IntPoly& p) {
    std::vector<BigInt> out((p.size() + 1) / 2);
    for (std::size_t k = 0; k < p.size(); ++k) {
        if (k % 2 == 1) {
            if (p.coeff(k) != 0) throw OddTermPresent("nonzero coefficient of x^" + std::to_string(k));
        } else {
            out[k / 2] = p.coeff(k);
        }
    }
    return IntPoly(std::move(out));
}

BigInt eval_int(const IntPoly& p, const BigInt& a) {
    BigInt acc = 0;
    for (std::size_t k = p.size(); k-- > 0;) {
        acc *= a;
        acc += p.coeff(k);
    }
    return acc;
}

ExactRational eval_rational(const IntPoly& p, const ExactRational& a) {
    ExactRational acc{0};
    for (std::size_t k = p.size(); k-- > 0;) acc = acc * a + ExactRational(p.coeff(k));
    return acc;
}

double eval_float(const IntPoly& p, double a) {
    double acc = 0.0;
    for (std::size_t k = p.size(); k-- > 0;) acc = acc * a + p.coeff(k).get_d();
    return acc;
}

BigInt l1_norm(const IntPoly& p) {
    BigInt s = 0;
    for (const auto& c : p.coeffs()) s += abs(c);
    return s;
}

std::string to_string(const IntPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (std::size_t k = 0; k < p.size(); ++k) {
        const BigInt& c = p.coeff(k);
        if (c == 0) continue;
        const bool negative = c < 0;
        if (first)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        first = false;

        const BigInt mag = abs(c);
        if (k == 0) {
            out += mag.get_str();
            continue;
        }
        if (mag != 1) out += mag.get_str() + "*";
        out += "x";
        if (k > 1) out += "^" + std::to_string(k);
    }
    return out;
}

std::vector<std::string> to_decimal_strings(const IntPoly& p) {
    std::vector<std::string> out;
    out.reserve(p.size());
    for (const auto& c : p.coeffs()) out.push_back(c.get_str());
    return out;
}

IntPoly from_decimal_strings(std::span<const std::string> coeffs) {
    std::vector<BigInt> v;
    v.reserve(coeffs.size());
    for (const auto& s : coeffs) v.emplace_back(s, 10);
    return IntPoly(std::move(v));
}

std::ostream& operator<<(std::ostream& os, const IntPoly& p) { return os << to_string(p); }

}  // namespace spreadpoly
