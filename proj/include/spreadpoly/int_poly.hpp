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

#ifndef SPREADPOLY_INT_POLY_HPP
#define SPREADPOLY_INT_POLY_HPP

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <limits>
#include <span>
#include <string>
#include <vector>

namespace spreadpoly {

using BigInt = mpz_class;

class ExactRational;

/**
 * Dense univariate polynomial over Z.
 *
 * Coefficients are stored in ascending order (index k holds the coefficient
 * of x^k) and kept normalized: the last stored coefficient is nonzero, and the
 * zero polynomial is the empty sequence. Values are immutable once built.
 */
class IntPoly {
   public:
    /// Degree reported for the zero polynomial.
    static constexpr std::ptrdiff_t kZeroDegree = std::numeric_limits<std::ptrdiff_t>::min();

    IntPoly() = default;
    explicit IntPoly(std::vector<BigInt> coeffs);
    /// Ascending small-integer coefficients, e.g. {-2, 0, 1} is x^2 - 2.
    IntPoly(std::initializer_list<long> coeffs);

    static IntPoly constant(BigInt c);
    static IntPoly monomial(BigInt c, std::size_t k);
    static IntPoly x() { return monomial(1, 1); }

    bool is_zero() const noexcept { return coeffs_.empty(); }
    std::ptrdiff_t degree() const noexcept {
        return coeffs_.empty() ? kZeroDegree : static_cast<std::ptrdiff_t>(coeffs_.size()) - 1;
    }
    std::size_t size() const noexcept { return coeffs_.size(); }

    /// Coefficient of x^k; zero beyond the stored range.
    const BigInt& coeff(std::size_t k) const noexcept;
    const BigInt& leading() const noexcept { return coeff(coeffs_.empty() ? 0 : coeffs_.size() - 1); }
    bool is_monic() const noexcept { return !coeffs_.empty() && coeffs_.back() == 1; }

    std::span<const BigInt> coeffs() const noexcept { return coeffs_; }

    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs_ == b.coeffs_; }

   private:
    void normalize();

    std::vector<BigInt> coeffs_;
};

IntPoly add(const IntPoly& p, const IntPoly& q);
IntPoly sub(const IntPoly& p, const IntPoly& q);
IntPoly neg(const IntPoly& p);
IntPoly scale(const IntPoly& p, const BigInt& c);

/// Product that dispatches to schoolbook or Karatsuba by operand size; see
/// mul_threshold() in config.hpp.
IntPoly mul(const IntPoly& p, const IntPoly& q);
IntPoly mul_schoolbook(const IntPoly& p, const IntPoly& q);
/// Karatsuba splitting down to `threshold` coefficients, schoolbook below.
IntPoly mul_karatsuba(const IntPoly& p, const IntPoly& q, std::size_t threshold);
IntPoly square(const IntPoly& p);
IntPoly pow(const IntPoly& p, unsigned e);

/// Exact quotient p / q. Throws DivideByZero for q == 0 and NotDivisible if
/// the rational quotient leaves a remainder or has a non-integer coefficient.
IntPoly div_exact(const IntPoly& p, const IntPoly& q);

/// p(q(x)), Horner style.
IntPoly compose(const IntPoly& p, const IntPoly& q);

/// p(x^2).
IntPoly substitute_square(const IntPoly& p);
/// Inverse of substitute_square. Throws OddTermPresent if any odd-degree
/// coefficient is nonzero.
IntPoly desubstitute_square(const IntPoly& p);

BigInt eval_int(const IntPoly& p, const BigInt& a);
ExactRational eval_rational(const IntPoly& p, const ExactRational& a);
double eval_float(const IntPoly& p, double a);

/// Sum of absolute values of the coefficients.
BigInt l1_norm(const IntPoly& p);

/// Canonical text form: ascending degree with explicit signs, e.g.
/// "9*x - 6*x^2 + x^3". The zero polynomial renders as "0".
std::string to_string(const IntPoly& p);
/// Coefficients as decimal strings, ascending.
std::vector<std::string> to_decimal_strings(const IntPoly& p);
IntPoly from_decimal_strings(std::span<const std::string> coeffs);

std::ostream& operator<<(std::ostream& os, const IntPoly& p);

inline IntPoly operator+(const IntPoly& p, const IntPoly& q) { return add(p, q); }
inline IntPoly operator-(const IntPoly& p, const IntPoly& q) { return sub(p, q); }
inline IntPoly operator-(const IntPoly& p) { return neg(p); }
inline IntPoly operator*(const IntPoly& p, const IntPoly& q) { return mul(p, q); }

}  // namespace spreadpoly

#endif  // SPREADPOLY_INT_POLY_HPP
