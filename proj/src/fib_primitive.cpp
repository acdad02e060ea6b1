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

#include "spreadpoly/fib_primitive.hpp"

#include <stdexcept>
#include <string>

#include "spreadpoly/errors.hpp"
#include "spreadpoly/factor.hpp"
#include "spreadpoly/sequences.hpp"

namespace spreadpoly {

BigInt primitive_part(unsigned n) {
    if (n == 0) throw std::invalid_argument("primitive_part: index must be >= 1");
    if (n == 1) return 1;
    return abs(eval_int(phi_min(n), 5));
}

PrimitivePartTable fib_factorization(unsigned n) {
    if (n == 0) throw std::invalid_argument("fib_factorization: index must be >= 1");
    PrimitivePartTable table;
    table.n = n;
    table.reconstructed = 1;
    for (unsigned d : divisors(n)) {
        BigInt p = primitive_part(d);
        table.reconstructed *= p;
        table.parts.push_back({d, std::move(p)});
    }
    const BigInt f = fibonacci(n);
    if (table.reconstructed != f)
        throw VerificationFailure("product of primitive parts for n = " + std::to_string(n) + " is " +
                                  table.reconstructed.get_str() + ", expected F_n = " + f.get_str());
    return table;
}

Zpread5Check zpread_at5_identity(unsigned n) {
    if (n == 0) throw std::invalid_argument("zpread_at5_identity: index must be >= 1");
    Zpread5Check check;
    check.n = n;
    check.zpread_at_5 = eval_int(zpread(n), 5);
    const BigInt f = fibonacci(n);
    check.expected = 5 * f * f;
    if (n % 2 == 0) check.expected = -check.expected;
    if (check.zpread_at_5 != check.expected)
        throw IdentityFailure("Z_" + std::to_string(n) + "(5) = " + check.zpread_at_5.get_str() + ", expected " +
                              check.expected.get_str());
    return check;
}

}  // namespace spreadpoly
