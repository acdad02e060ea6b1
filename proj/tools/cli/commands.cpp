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

#include "cli/commands.hpp"

#include <chrono>
#include <cstdio>
#include <map>
#include <ostream>
#include <random>
#include <stdexcept>

#include "CLI11.hpp"
#include "spreadpoly/config.hpp"
#include "spreadpoly/fib_primitive.hpp"
#include "spreadpoly/records.hpp"
#include "spreadpoly/sequences.hpp"

namespace spreadpoly::cli {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string fixed(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

std::string pad(std::string s, std::size_t width) {
    if (s.size() < width) s.insert(0, width - s.size(), ' ');
    return s;
}

IntPoly random_poly_of_size(std::mt19937_64& rng, std::size_t size) {
    std::uniform_int_distribution<long> coeff(std::numeric_limits<long>::min() / 2, std::numeric_limits<long>::max() / 2);
    std::vector<BigInt> c(size);
    for (auto& v : c) v = coeff(rng);
    if (c.back() == 0) c.back() = 1;
    return IntPoly(std::move(c));
}

IntPoly show_poly(std::string_view family, unsigned n, RouteChoice route) {
    if (family == "lucas") return lucas(n);
    if (n == 0) throw std::invalid_argument("index must be >= 1");
    if (family == "cyclotomic") return cyclotomic(n);
    if (family == "zpread") return zpread(n);
    if (family == "spread") return spread(n);
    if (family == "psi") return psi(n);
    if (family == "phi") return phi(n, route);
    if (family == "Phi") return capital_phi(n, route);
    throw std::invalid_argument("unknown family '" + std::string(family) + "'");
}

}  // namespace

std::vector<std::string> show_families() { return {"lucas", "cyclotomic", "zpread", "spread", "psi", "phi", "Phi"}; }

void cmd_show(std::ostream& out, std::string_view family, unsigned n, OutputFormat format, RouteChoice route,
              unsigned max_index) {
    if (n > max_index)
        throw OutOfBounds("index " + std::to_string(n) + " exceeds the configured maximum " + std::to_string(max_index));
    const IntPoly p = show_poly(family, n, route);
    if (format == OutputFormat::Record)
        out << dump_line(poly_record(family, n, p)) << '\n';
    else
        out << to_string(p) << '\n';
}

void cmd_factor(std::ostream& out, unsigned n, TargetKind target, OutputFormat format, RouteChoice route) {
    const FactorizationRecord rec = target == TargetKind::Zpread ? factor_zpread(n, route) : factor_lucas_minus2(n);
    if (format == OutputFormat::Record) {
        out << dump_line(to_record(rec)) << '\n';
        return;
    }
    const bool z = target == TargetKind::Zpread;
    out << (z ? "Z_" : "L_") << n << (z ? "" : " - 2") << " = " << to_string(rec.product) << '\n';
    for (const auto& f : rec.factors) {
        out << "  d = " << pad(std::to_string(f.d), 4) << "  mult " << f.multiplicity << "  deg "
            << pad(std::to_string(f.poly.degree()), 4) << "  " << to_string(f.poly) << '\n';
    }
    out << "verified: product of " << rec.factors.size() << " factors\n";
}

void cmd_fib(std::ostream& out, unsigned n, OutputFormat format) {
    const PrimitivePartTable table = fib_factorization(n);
    if (format == OutputFormat::Record) {
        out << dump_line(to_record(table)) << '\n';
        return;
    }
    out << "F_" << n << " = " << table.reconstructed.get_str() << " =";
    for (std::size_t i = 0; i < table.parts.size(); ++i) out << (i == 0 ? " " : " * ") << table.parts[i].p.get_str();
    out << '\n';
    for (const auto& part : table.parts) out << "  d = " << pad(std::to_string(part.d), 4) << "  p = " << part.p.get_str() << '\n';
}

bool cmd_verify(std::ostream& out, const VerifyOptions& options, OutputFormat format) {
    const VerifyReport report = run_verify(options);
    if (format == OutputFormat::Record) {
        // Durations are left out so identical requests give identical bytes.
        for (const auto& s : report.suites) {
            Record r;
            r["kind"] = "verify_suite";
            r["name"] = s.name;
            r["n"] = report.sweep;
            r["checks"] = s.checks;
            r["failures"] = s.failures;
            r["first_failure"] = s.first_failure ? Record(*s.first_failure) : Record(nullptr);
            r["status"] = s.passed() ? "pass" : "fail";
            out << dump_line(r) << '\n';
        }
        Record summary;
        summary["kind"] = "verify_summary";
        summary["n"] = report.sweep;
        summary["suites"] = report.suites.size();
        summary["failed_suites"] = report.failed_suites();
        summary["status"] = report.passed() ? "pass" : "fail";
        out << dump_line(summary) << '\n';
        return report.passed();
    }

    out << "suite                                      checks  failed   seconds\n";
    for (const auto& s : report.suites) {
        std::string name = s.name;
        name.resize(40, ' ');
        out << name << pad(std::to_string(s.checks), 9) << pad(std::to_string(s.failures), 8)
            << pad(fixed(s.seconds, 3), 10) << '\n';
    }
    for (const auto& s : report.suites)
        if (!s.passed()) out << "FAIL " << s.name << ": first counterexample: " << *s.first_failure << '\n';
    if (report.passed())
        out << "all " << report.suites.size() << " suites passed (sweep " << report.sweep << ")\n";
    else
        out << report.failed_suites() << " of " << report.suites.size() << " suites failed (sweep " << report.sweep << ")\n";
    return report.passed();
}

std::vector<BenchRow> run_bench(std::span<const unsigned> sizes) {
    if (sizes.empty()) throw std::invalid_argument("bench: at least one size is required");
    std::mt19937_64 rng(42);
    std::vector<BenchRow> rows;
    for (unsigned size : sizes) {
        if (size == 0) throw std::invalid_argument("bench: sizes must be >= 1");
        BenchRow row;
        row.size = size;
        const IntPoly p = random_poly_of_size(rng, size + 1);
        const IntPoly q = random_poly_of_size(rng, size + 1);
        const unsigned reps = std::max(1U, 2048U / size);

        auto start = Clock::now();
        for (unsigned i = 0; i < reps; ++i) (void)mul_schoolbook(p, q);
        row.schoolbook_ms = ms_since(start) / reps;

        start = Clock::now();
        for (unsigned i = 0; i < reps; ++i) (void)mul_karatsuba(p, q, mul_threshold());
        row.karatsuba_ms = ms_since(start) / reps;

        start = Clock::now();
        (void)factor_zpread(size);
        row.factor_zpread_ms = ms_since(start);

        start = Clock::now();
        (void)cross_check_phi(size);
        row.cross_check_ms = ms_since(start);
        rows.push_back(row);
    }
    return rows;
}

void cmd_bench(std::ostream& out, std::span<const unsigned> sizes, OutputFormat format) {
    const auto rows = run_bench(sizes);
    if (format == OutputFormat::Record) {
        for (const auto& row : rows) {
            Record r;
            r["kind"] = "bench";
            r["n"] = row.size;
            r["mul_threshold"] = mul_threshold();
            r["schoolbook_ms"] = row.schoolbook_ms;
            r["karatsuba_ms"] = row.karatsuba_ms;
            r["factor_zpread_ms"] = row.factor_zpread_ms;
            r["cross_check_phi_ms"] = row.cross_check_ms;
            r["status"] = "ok";
            out << dump_line(r) << '\n';
        }
        return;
    }
    out << "mul threshold " << mul_threshold() << "\n";
    out << "  degree  schoolbook_ms  karatsuba_ms  factor_zpread_ms  cross_check_phi_ms\n";
    for (const auto& row : rows) {
        out << pad(std::to_string(row.size), 8) << pad(fixed(row.schoolbook_ms, 3), 15) << pad(fixed(row.karatsuba_ms, 3), 14)
            << pad(fixed(row.factor_zpread_ms, 3), 18) << pad(fixed(row.cross_check_ms, 3), 20) << '\n';
    }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Spread/zpread polynomial factorization toolkit"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format_name = "text";
    app.add_option("--format", format_name, "Output format")
        ->check(CLI::IsMember({"text", "record"}))
        ->capture_default_str();

    const std::map<std::string, RouteChoice> routes{{"min", RouteChoice::Reference}, {"fast", RouteChoice::Fast}};
    RouteChoice route = RouteChoice::Reference;

    auto* show = app.add_subcommand("show", "Print one polynomial of a family");
    std::string family;
    unsigned show_n = 0;
    unsigned max_index = kDefaultMaxIndex;
    show->add_option("family", family, "Polynomial family")->required()->check(CLI::IsMember(show_families()));
    show->add_option("n", show_n, "Index")->required();
    show->add_option("--route", route, "phi route: min or fast")->transform(CLI::CheckedTransformer(routes));
    show->add_option("--max-index", max_index, "Largest accepted index")->capture_default_str();

    auto* factor = app.add_subcommand("factor", "Verified factorization of Z_n or L_n - 2");
    unsigned factor_n = 0;
    std::string target_name = "zpread";
    factor->add_option("n", factor_n, "Index")->required()->check(CLI::PositiveNumber);
    factor->add_option("target", target_name, "zpread or lucas")->check(CLI::IsMember({"zpread", "lucas"}));
    factor->add_option("--route", route, "phi route: min or fast")->transform(CLI::CheckedTransformer(routes));

    auto* fib = app.add_subcommand("fib", "Fibonacci primitive-part factorization");
    unsigned fib_n = 0;
    fib->add_option("n", fib_n, "Index")->required()->check(CLI::PositiveNumber);

    auto* verify = app.add_subcommand("verify", "Run every identity suite");
    VerifyOptions vopt;
    unsigned fault = 0;
    verify->add_option("--sweep", vopt.sweep, "Sweep bound N")->check(CLI::PositiveNumber)->capture_default_str();
    verify->add_option("--tol", vopt.tol, "Float root tolerance")->check(CLI::PositiveNumber)->capture_default_str();
    verify->add_option("--jobs", vopt.jobs, "Worker threads (0 = all cores)");
    verify->add_option("--inject-fault", fault, "Test mode: corrupt the fast phi route at this index")
        ->check(CLI::PositiveNumber)
        ->group("");

    auto* bench = app.add_subcommand("bench", "Time the multiplication kernels and factorizations");
    std::vector<unsigned> sizes;
    bench->add_option("sizes", sizes, "Degrees")->required()->check(CLI::PositiveNumber);

    std::vector<std::string> argv_rev(args.rbegin(), args.rend());
    try {
        app.parse(argv_rev);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    const OutputFormat format = format_name == "record" ? OutputFormat::Record : OutputFormat::Text;
    try {
        if (*show) {
            cmd_show(out, family, show_n, format, route, max_index);
        } else if (*factor) {
            cmd_factor(out, factor_n, target_name == "lucas" ? TargetKind::LucasMinus2 : TargetKind::Zpread, format, route);
        } else if (*fib) {
            cmd_fib(out, fib_n, format);
        } else if (*verify) {
            if (verify->count("--inject-fault") > 0) vopt.inject_fault = fault;
            return cmd_verify(out, vopt, format) ? kExitOk : kExitFailure;
        } else if (*bench) {
            cmd_bench(out, sizes, format);
        }
    } catch (const OutOfBounds& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const Error& e) {
        err << "verification failed: " << e.what() << '\n';
        return kExitFailure;
    }
    return kExitOk;
}

}  // namespace spreadpoly::cli
