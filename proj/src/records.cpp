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

#include "spreadpoly/records.hpp"

namespace spreadpoly {

Record coefficients_record(const IntPoly& p) {
    Record arr = Record::array();
    for (auto& s : to_decimal_strings(p)) arr.push_back(std::move(s));
    return arr;
}

Record poly_record(std::string_view family, unsigned n, const IntPoly& p) {
    Record r;
    r["kind"] = "poly";
    r["family"] = family;
    r["n"] = n;
    r["coefficients"] = coefficients_record(p);
    r["status"] = "ok";
    return r;
}

Record to_record(const FactorizationRecord& rec) {
    Record r;
    r["kind"] = "factorization";
    r["n"] = rec.n;
    r["target"] = to_string(rec.target_kind);
    Record factors = Record::array();
    for (const auto& f : rec.factors) {
        Record e;
        e["d"] = f.d;
        e["multiplicity"] = f.multiplicity;
        e["coefficients"] = coefficients_record(f.poly);
        factors.push_back(std::move(e));
    }
    r["factors"] = std::move(factors);
    r["product"] = coefficients_record(rec.product);
    r["status"] = "verified";
    return r;
}

Record to_record(const PrimitivePartTable& table) {
    Record r;
    r["kind"] = "primitive_parts";
    r["n"] = table.n;
    Record parts = Record::array();
    for (const auto& part : table.parts) {
        Record e;
        e["d"] = part.d;
        e["p"] = part.p.get_str();
        parts.push_back(std::move(e));
    }
    r["parts"] = std::move(parts);
    r["reconstructed"] = table.reconstructed.get_str();
    r["status"] = "verified";
    return r;
}

std::string dump_line(const Record& r) { return r.dump(); }

}  // namespace spreadpoly
