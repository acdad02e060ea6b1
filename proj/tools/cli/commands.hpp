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

#ifndef SPREADPOLY_CLI_COMMANDS_HPP
#define SPREADPOLY_CLI_COMMANDS_HPP

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cli/verify.hpp"
#include "spreadpoly/factor.hpp"

namespace spreadpoly::cli {

enum class OutputFormat { Text, Record };

inline constexpr unsigned kDefaultMaxIndex = 10000;

/// Exit statuses.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // a verification did not pass
inline constexpr int kExitUsage = 2;    // bad arguments or out-of-bounds index

struct BenchRow {
    unsigned size = 0;
    double schoolbook_ms = 0.0;
    double karatsuba_ms = 0.0;
    double factor_zpread_ms = 0.0;
    double cross_check_ms = 0.0;
};

/// Times mul (both paths) on random degree-`size` operands, factor_zpread(size)
/// and cross_check_phi(size). Throws std::invalid_argument for an empty list
/// or a zero size.
std::vector<BenchRow> run_bench(std::span<const unsigned> sizes);

/// Families accepted by `show`.
std::vector<std::string> show_families();

/// Throws OutOfBounds when n exceeds `max_index`, std::invalid_argument for
/// an unknown family or n == 0.
void cmd_show(std::ostream& out, std::string_view family, unsigned n, OutputFormat format, RouteChoice route,
              unsigned max_index = kDefaultMaxIndex);
void cmd_factor(std::ostream& out, unsigned n, TargetKind target, OutputFormat format, RouteChoice route);
void cmd_fib(std::ostream& out, unsigned n, OutputFormat format);
/// Returns true iff every suite passed.
bool cmd_verify(std::ostream& out, const VerifyOptions& options, OutputFormat format);
void cmd_bench(std::ostream& out, std::span<const unsigned> sizes, OutputFormat format);

/// Full command-line entry point; returns the process exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace spreadpoly::cli

#endif  // SPREADPOLY_CLI_COMMANDS_HPP
