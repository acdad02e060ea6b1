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

#ifndef SPREADPOLY_RECORDS_HPP
#define SPREADPOLY_RECORDS_HPP

#include <string_view>

#include "json.hpp"
#include "spreadpoly/factor.hpp"
#include "spreadpoly/fib_primitive.hpp"
#include "spreadpoly/int_poly.hpp"

namespace spreadpoly {

using Record = nlohmann::ordered_json;

/// Decimal-string coefficient array, ascending.
Record coefficients_record(const IntPoly& p);

/// {kind: "poly", family, n, coefficients, status}
Record poly_record(std::string_view family, unsigned n, const IntPoly& p);

/// {kind: "factorization", n, target, factors: [{d, multiplicity, coefficients}], product, status}
Record to_record(const FactorizationRecord& rec);

/// {kind: "primitive_parts", n, parts: [{d, p}], reconstructed, status}
Record to_record(const PrimitivePartTable& table);

/// Compact single-line serialization used for newline-delimited output.
std::string dump_line(const Record& r);

}  // namespace spreadpoly

#endif  // SPREADPOLY_RECORDS_HPP
