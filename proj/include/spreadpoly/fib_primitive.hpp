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

#ifndef SPREADPOLY_FIB_PRIMITIVE_HPP
#define SPREADPOLY_FIB_PRIMITIVE_HPP

#include <vector>

#include "spreadpoly/int_poly.hpp"

namespace spreadpoly {

struct PrimitivePart {
    unsigned d = 0;
    BigInt p;  ///< always positive

    friend bool operator==(const PrimitivePart&, const PrimitivePart&) = default;
};

/// F_n = prod_{d | n} p_d, parts in ascending divisor order.
struct PrimitivePartTable {
    unsigned n = 0;
    std::vector<PrimitivePart> parts;
    BigInt reconstructed;
};

/// p_1 = 1, p_n = |phi_n(5)| for n >= 2.
BigInt primitive_part(unsigned n);

/// Throws VerificationFailure if the product of parts differs from F_n.
PrimitivePartTable fib_factorization(unsigned n);

struct Zpread5Check {
    unsigned n = 0;
    BigInt zpread_at_5;
    BigInt expected;  ///< (-1)^(n-1) * 5 * F_n^2
};

/// Asserts Z_n(5) = (-1)^(n-1) 5 F_n^2; throws IdentityFailure otherwise.
Zpread5Check zpread_at5_identity(unsigned n);

}  // namespace spreadpoly

#endif  // SPREADPOLY_FIB_PRIMITIVE_HPP
