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

#ifndef SPREADPOLY_RATIONAL_HPP
#define SPREADPOLY_RATIONAL_HPP

#include <gmpxx.h>

#include <iosfwd>
#include <string>

namespace spreadpoly {

/// Exact fraction, always in lowest terms with a positive denominator.
class ExactRational {
   public:
    ExactRational() = default;
    ExactRational(long n) : value_(n) {}  // NOLINT(google-explicit-constructor)
    ExactRational(const mpz_class& n) : value_(n) {}  // NOLINT(google-explicit-constructor)
    /// Throws DivideByZero when `den` is zero.
    ExactRational(const mpz_class& num, const mpz_class& den);

    mpz_class numerator() const { return value_.get_num(); }
    mpz_class denominator() const { return value_.get_den(); }
    bool is_zero() const { return value_ == 0; }

    ExactRational operator-() const;
    friend ExactRational operator+(const ExactRational& a, const ExactRational& b);
    friend ExactRational operator-(const ExactRational& a, const ExactRational& b);
    friend ExactRational operator*(const ExactRational& a, const ExactRational& b);
    /// Throws DivideByZero when `b` is zero.
    friend ExactRational operator/(const ExactRational& a, const ExactRational& b);
    friend bool operator==(const ExactRational& a, const ExactRational& b) { return a.value_ == b.value_; }

    /// b^e for any integer e; negative powers of zero throw DivideByZero.
    ExactRational pow(long e) const;

    std::string to_string() const;

   private:
    explicit ExactRational(mpq_class v);

    mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const ExactRational& r);

}  // namespace spreadpoly

#endif  // SPREADPOLY_RATIONAL_HPP
