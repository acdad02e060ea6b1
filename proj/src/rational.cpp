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

#include "spreadpoly/rational.hpp"

#include <ostream>
#include <utility>

#include "spreadpoly/errors.hpp"

namespace spreadpoly {

ExactRational::ExactRational(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }

ExactRational::ExactRational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw DivideByZero();
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

ExactRational ExactRational::operator-() const { return ExactRational(mpq_class(-value_)); }

ExactRational operator+(const ExactRational& a, const ExactRational& b) { return ExactRational(mpq_class(a.value_ + b.value_)); }

ExactRational operator-(const ExactRational& a, const ExactRational& b) { return ExactRational(mpq_class(a.value_ - b.value_)); }

ExactRational operator*(const ExactRational& a, const ExactRational& b) { return ExactRational(mpq_class(a.value_ * b.value_)); }

ExactRational operator/(const ExactRational& a, const ExactRational& b) {
    if (b.is_zero()) throw DivideByZero();
    return ExactRational(mpq_class(a.value_ / b.value_));
}

ExactRational ExactRational::pow(long e) const {
    if (e < 0) {
        if (is_zero()) throw DivideByZero();
        return ExactRational(1) / pow(-e);
    }
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), static_cast<unsigned long>(e));
    return ExactRational(num, den);
}

std::string ExactRational::to_string() const { return value_.get_str(); }

std::ostream& operator<<(std::ostream& os, const ExactRational& r) { return os << r.to_string(); }

}  // namespace spreadpoly
