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

#ifndef SPREADPOLY_FACTOR_HPP
#define SPREADPOLY_FACTOR_HPP

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "spreadpoly/errors.hpp"
#include "spreadpoly/int_poly.hpp"

namespace spreadpoly {

/// Independent ways of computing phi_n, the minimal polynomial of 4 sin^2(pi/n).
enum class PhiRoute {
    MinimalPoly,  ///< psi_n(2 - x) with psi_n from the folded cyclotomic polynomial
    OddLucas,     ///< peeled out of L_m for odd m
    PowerOfTwo,   ///< phi_{2^k} = phi_{2^(k-1)}^2 - 2
    Composition,  ///< phi_{2m} = +-phi_m(4 - x), phi_{2^k m} = phi_m(phi_{2^k}^2)
};

std::string_view to_string(PhiRoute route);

/// Which route feeds capital_phi() and the zpread factorization.
enum class RouteChoice {
    Reference,  ///< PhiRoute::MinimalPoly
    Fast,       ///< PhiRoute::Composition (phi_composed)
};

/// Minimal polynomial of 2 cos(2 pi / n): psi_1 = x - 2, psi_2 = x + 2, and
/// for n >= 3 the Lucas-basis re-expansion of the folded cyclotomic C_n.
IntPoly psi(unsigned n);

/// phi_1 = x, phi_2 = x - 4, phi_n = (-1)^(totient(n)/2) psi_n(2 - x).
IntPoly phi_min(unsigned n);

/// phi_m for odd m, by exact division of L_m by x * prod phi_d(x^2) over the
/// proper divisors d > 1 and de-substitution of x^2. Throws
/// std::invalid_argument for even m.
IntPoly phi_odd_lucas(unsigned m);

/// phi_{2^k}: x, x - 4, x - 2 for k = 0, 1, 2, then the squaring recursion.
IntPoly phi_pow2(unsigned k);

/// phi_n by splitting n = 2^k m (m odd) and composing the odd and
/// power-of-two parts.
IntPoly phi_composed(unsigned n);

IntPoly phi(unsigned n, RouteChoice choice = RouteChoice::Reference);

/// Phi_1 = x, Phi_2 = 4 - x, Phi_n = phi_n^2 for n >= 3.
IntPoly capital_phi(unsigned n, RouteChoice choice = RouteChoice::Reference);

enum class TargetKind { Zpread, LucasMinus2 };

std::string_view to_string(TargetKind kind);

struct FactorEntry {
    unsigned d = 0;
    unsigned multiplicity = 1;
    IntPoly poly;

    friend bool operator==(const FactorEntry&, const FactorEntry&) = default;
};

/// Factor list ordered by ascending divisor, with the verified product.
struct FactorizationRecord {
    TargetKind target_kind = TargetKind::Zpread;
    unsigned n = 0;
    std::vector<FactorEntry> factors;
    IntPoly product;
};

/// Z_n = prod_{d | n} Phi_d. Throws VerificationFailure if the product does
/// not reproduce zpread(n).
FactorizationRecord factor_zpread(unsigned n, RouteChoice choice = RouteChoice::Reference);

/// L_n - 2 = psi_1 psi_2^(e_n) prod_{k | n, k > 2} psi_k^2 with e_n = 1 for
/// even n and 0 otherwise. Throws VerificationFailure on product mismatch.
FactorizationRecord factor_lucas_minus2(unsigned n);

class RouteMismatch : public Error {
   public:
    RouteMismatch(unsigned n, PhiRoute first, IntPoly first_poly, PhiRoute second, IntPoly second_poly);

    unsigned n;
    PhiRoute first;
    IntPoly first_poly;
    PhiRoute second;
    IntPoly second_poly;
};

struct RouteReport {
    unsigned n = 0;
    std::vector<PhiRoute> routes;
    IntPoly phi;
};

/// Hook applied to each route's result before comparison; used to inject
/// faults in tests. Must be safe to call from the checking thread.
using PhiTamper = std::function<void(PhiRoute, unsigned n, IntPoly&)>;

/// Computes phi_n along every applicable route and requires exact agreement.
/// MinimalPoly always applies; OddLucas for odd n; PowerOfTwo when n is a
/// power of two; Composition for even n that are not powers of two.
RouteReport cross_check_phi(unsigned n, const PhiTamper& tamper = {});

class ToleranceExceeded : public Error {
   public:
    ToleranceExceeded(unsigned n, unsigned k, double residual, double bound);

    unsigned n;
    unsigned k;
    double residual;
    double bound;
};

struct RootCheckReport {
    unsigned n = 0;
    std::size_t roots_checked = 0;
    double max_residual = 0.0;
    /// tol * (1 + sum |coefficients of phi_n|)
    double bound = 0.0;
};

/// Floating-point sanity check that 4 sin^2(k pi / n) is a root of phi_n for
/// every k coprime to n with 0 < k < n/2. Requires n >= 3.
RootCheckReport float_root_check(unsigned n, double tol);

}  // namespace spreadpoly

#endif  // SPREADPOLY_FACTOR_HPP
