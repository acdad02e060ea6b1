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

#include "spreadpoly/factor.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "spreadpoly/palindrome.hpp"
#include "spreadpoly/sequences.hpp"

namespace spreadpoly {

namespace {

void require_positive(unsigned n, const char* what) {
    if (n == 0) throw std::invalid_argument(std::string(what) + ": index must be >= 1");
}

bool is_power_of_two(unsigned n) { return n != 0 && (n & (n - 1)) == 0; }

// (-1)^(totient(n)/2)
bool totient_half_is_odd(unsigned n) { return (totient(n) / 2) % 2 == 1; }

const IntPoly& two_minus_x() {
    static const IntPoly p{2, -1};
    return p;
}

const IntPoly& four_minus_x() {
    static const IntPoly p{4, -1};
    return p;
}

IntPoly phi_odd_lucas_memo(unsigned m, std::map<unsigned, IntPoly>& memo) {
    if (m == 1) return IntPoly::x();
    if (auto it = memo.find(m); it != memo.end()) return it->second;

    IntPoly denom = IntPoly::x();
    for (unsigned d : divisors(m))
        if (d > 1 && d < m) denom = mul(denom, substitute_square(phi_odd_lucas_memo(d, memo)));
    IntPoly q = desubstitute_square(div_exact(lucas(m), denom));
    memo.emplace(m, q);
    return q;
}

}  // namespace

std::string_view to_string(PhiRoute route) {
    switch (route) {
        case PhiRoute::MinimalPoly: return "MinimalPolyRoute";
        case PhiRoute::OddLucas: return "OddLucasRoute";
        case PhiRoute::PowerOfTwo: return "PowerOfTwoRoute";
        case PhiRoute::Composition: return "CompositionRoute";
    }
    return "UnknownRoute";
}

std::string_view to_string(TargetKind kind) {
    switch (kind) {
        case TargetKind::Zpread: return "zpread";
        case TargetKind::LucasMinus2: return "lucas_minus_2";
    }
    return "unknown";
}

IntPoly psi(unsigned n) {
    require_positive(n, "psi");
    if (n == 1) return IntPoly{-2, 1};
    if (n == 2) return IntPoly{2, 1};

    // C_n(x) / x^m = c_0 + sum c_k (x^k + x^-k); with x = alpha + 1/alpha each
    // x^k + x^-k becomes L_k, while c_0 stays a plain constant.
    const PalindromeFold fold = palindrome_fold(cyclotomic(n));
    IntPoly acc = IntPoly::constant(fold.lucas_coeffs[0]);
    for (std::size_t k = 1; k < fold.lucas_coeffs.size(); ++k) {
        if (fold.lucas_coeffs[k] == 0) continue;
        acc = acc + scale(lucas(static_cast<unsigned>(k)), fold.lucas_coeffs[k]);
    }
    return acc;
}

IntPoly phi_min(unsigned n) {
    require_positive(n, "phi_min");
    if (n == 1) return IntPoly::x();
    if (n == 2) return IntPoly{-4, 1};
    IntPoly p = compose(psi(n), two_minus_x());
    return totient_half_is_odd(n) ? neg(p) : p;
}

IntPoly phi_odd_lucas(unsigned m) {
    if (m % 2 == 0) throw std::invalid_argument("phi_odd_lucas: index must be odd");
    std::map<unsigned, IntPoly> memo;
    return phi_odd_lucas_memo(m, memo);
}

IntPoly phi_pow2(unsigned k) {
    switch (k) {
        case 0: return IntPoly::x();
        case 1: return IntPoly{-4, 1};
        case 2: return IntPoly{-2, 1};
        default: break;
    }
    // The squaring recursion only holds from k = 3 on: phi_2^2 - 2 != phi_4.
    IntPoly p{-2, 1};
    for (unsigned j = 3; j <= k; ++j) p = square(p) - IntPoly{2};
    return p;
}

IntPoly phi_composed(unsigned n) {
    require_positive(n, "phi_composed");
    unsigned k = 0;
    unsigned m = n;
    while (m % 2 == 0) {
        m /= 2;
        ++k;
    }
    if (k == 0) return phi_odd_lucas(m);
    if (m == 1) return phi_pow2(k);
    const IntPoly odd = phi_odd_lucas(m);
    if (k == 1) {
        IntPoly p = compose(odd, four_minus_x());
        return totient_half_is_odd(m) ? neg(p) : p;
    }
    return compose(odd, square(phi_pow2(k)));
}

IntPoly phi(unsigned n, RouteChoice choice) {
    return choice == RouteChoice::Fast ? phi_composed(n) : phi_min(n);
}

IntPoly capital_phi(unsigned n, RouteChoice choice) {
    require_positive(n, "capital_phi");
    if (n == 1) return IntPoly::x();
    if (n == 2) return IntPoly{4, -1};
    return square(phi(n, choice));
}

FactorizationRecord factor_zpread(unsigned n, RouteChoice choice) {
    require_positive(n, "factor_zpread");
    FactorizationRecord rec;
    rec.target_kind = TargetKind::Zpread;
    rec.n = n;
    rec.product = IntPoly{1};
    for (unsigned d : divisors(n)) {
        IntPoly f = capital_phi(d, choice);
        rec.product = mul(rec.product, f);
        rec.factors.push_back({d, 1, std::move(f)});
    }
    const IntPoly target = zpread(n);
    if (rec.product != target)
        throw VerificationFailure("product of Phi_d over d | " + std::to_string(n) + " is " + to_string(rec.product) +
                                  ", expected Z_" + std::to_string(n) + " = " + to_string(target));
    return rec;
}

FactorizationRecord factor_lucas_minus2(unsigned n) {
    require_positive(n, "factor_lucas_minus2");
    FactorizationRecord rec;
    rec.target_kind = TargetKind::LucasMinus2;
    rec.n = n;
    rec.product = IntPoly{1};
    for (unsigned d : divisors(n)) {
        // d = 2 only shows up for even n, where e_n = 1.
        const unsigned mult = d <= 2 ? 1 : 2;
        IntPoly f = psi(d);
        rec.product = mul(rec.product, pow(f, mult));
        rec.factors.push_back({d, mult, std::move(f)});
    }
    const IntPoly target = lucas(n) - IntPoly{2};
    if (rec.product != target)
        throw VerificationFailure("psi-product for n = " + std::to_string(n) + " is " + to_string(rec.product) +
                                  ", expected L_n - 2 = " + to_string(target));
    return rec;
}

RouteMismatch::RouteMismatch(unsigned n_, PhiRoute first_, IntPoly first_poly_, PhiRoute second_, IntPoly second_poly_)
    : Error("phi_" + std::to_string(n_) + ": " + std::string(to_string(first_)) + " gives " + to_string(first_poly_) +
            " but " + std::string(to_string(second_)) + " gives " + to_string(second_poly_)),
      n(n_),
      first(first_),
      first_poly(std::move(first_poly_)),
      second(second_),
      second_poly(std::move(second_poly_)) {}

RouteReport cross_check_phi(unsigned n, const PhiTamper& tamper) {
    require_positive(n, "cross_check_phi");
    RouteReport report;
    report.n = n;

    auto run = [&](PhiRoute route, IntPoly p) {
        if (tamper) tamper(route, n, p);
        if (report.routes.empty()) {
            report.phi = std::move(p);
        } else if (p != report.phi) {
            throw RouteMismatch(n, report.routes.front(), report.phi, route, std::move(p));
        }
        report.routes.push_back(route);
    };

    run(PhiRoute::MinimalPoly, phi_min(n));
    if (n % 2 == 1) run(PhiRoute::OddLucas, phi_odd_lucas(n));
    if (is_power_of_two(n)) run(PhiRoute::PowerOfTwo, phi_pow2(static_cast<unsigned>(std::countr_zero(n))));
    if (n % 2 == 0 && !is_power_of_two(n)) run(PhiRoute::Composition, phi_composed(n));
    return report;
}

ToleranceExceeded::ToleranceExceeded(unsigned n_, unsigned k_, double residual_, double bound_)
    : Error("phi_" + std::to_string(n_) + " at 4 sin^2(" + std::to_string(k_) + " pi / " + std::to_string(n_) +
            "): residual " + std::to_string(residual_) + " exceeds " + std::to_string(bound_)),
      n(n_),
      k(k_),
      residual(residual_),
      bound(bound_) {}

RootCheckReport float_root_check(unsigned n, double tol) {
    if (n < 3) throw std::invalid_argument("float_root_check: index must be >= 3");
    if (!(tol > 0.0)) throw std::invalid_argument("float_root_check: tolerance must be positive");

    const IntPoly p = phi_min(n);
    RootCheckReport report;
    report.n = n;
    report.bound = tol * (1.0 + l1_norm(p).get_d());
    for (unsigned k = 1; 2 * k < n; ++k) {
        if (std::gcd(k, n) != 1) continue;
        const double s = std::sin(static_cast<double>(k) * std::numbers::pi / static_cast<double>(n));
        const double residual = std::abs(eval_float(p, 4.0 * s * s));
        if (residual > report.bound) throw ToleranceExceeded(n, k, residual, report.bound);
        report.max_residual = std::max(report.max_residual, residual);
        ++report.roots_checked;
    }
    return report;
}

}  // namespace spreadpoly
