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

#ifndef SPREADPOLY_CLI_VERIFY_HPP
#define SPREADPOLY_CLI_VERIFY_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace spreadpoly::cli {

struct VerifyOptions {
    unsigned sweep = 200;
    double tol = 1e-9;
    /// Test mode: corrupt the non-reference phi route at this index.
    std::optional<unsigned> inject_fault;
    /// Worker threads for running suites; 0 picks hardware concurrency.
    unsigned jobs = 0;
};

struct SuiteResult {
    std::string name;
    std::size_t checks = 0;
    std::size_t failures = 0;
    std::optional<std::string> first_failure;
    double seconds = 0.0;

    bool passed() const { return failures == 0; }
};

struct VerifyReport {
    unsigned sweep = 0;
    std::vector<SuiteResult> suites;  // fixed suite order, independent of scheduling

    bool passed() const;
    std::size_t failed_suites() const;
};

/// Names of every identity suite in execution order.
std::vector<std::string> suite_names();

VerifyReport run_verify(const VerifyOptions& options);

}  // namespace spreadpoly::cli

#endif  // SPREADPOLY_CLI_VERIFY_HPP
