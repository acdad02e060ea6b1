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

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "cli/commands.hpp"
#include "doctest.h"
#include "json.hpp"

using namespace spreadpoly;
using namespace spreadpoly::cli;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run invoke(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream is(s);
    for (std::string line; std::getline(is, line);) out.push_back(line);
    return out;
}

}  // namespace

TEST_CASE("show") {
    CHECK(invoke({"show", "phi", "7"}).out == "-7 + 14*x - 7*x^2 + x^3\n");
    CHECK(invoke({"show", "zpread", "1"}).out == "x\n");
    CHECK(invoke({"show", "psi", "8"}).out == "-2 + x^2\n");
    CHECK(invoke({"show", "lucas", "0"}).out == "2\n");
    CHECK(invoke({"show", "Phi", "2"}).out == "4 - x\n");
    CHECK(invoke({"show", "spread", "3"}).out == "9*x - 24*x^2 + 16*x^3\n");
    CHECK(invoke({"show", "cyclotomic", "9"}).out == "1 + x^3 + x^6\n");
    CHECK(invoke({"show", "phi", "12", "--route", "fast"}).out == "1 - 4*x + x^2\n");
    CHECK(invoke({"--format", "record", "show", "zpread", "3"}).out ==
          "{\"kind\":\"poly\",\"family\":\"zpread\",\"n\":3,\"coefficients\":[\"0\",\"9\",\"-6\",\"1\"],\"status\":\"ok\"}\n");
    CHECK(invoke({"show", "zpread", "3", "--format", "record"}).code == kExitOk);
}

TEST_CASE("show rejects out-of-range and unknown input") {
    const Run big = invoke({"show", "lucas", "20001"});
    CHECK(big.code == kExitUsage);
    CHECK(big.err.find("exceeds") != std::string::npos);
    CHECK(invoke({"show", "lucas", "50", "--max-index", "40"}).code == kExitUsage);
    CHECK(invoke({"show", "lucas", "40", "--max-index", "40"}).code == kExitOk);
    CHECK(invoke({"show", "bogus", "3"}).code == kExitUsage);
    CHECK(invoke({"show", "phi", "0"}).code == kExitUsage);
    CHECK(invoke({"show", "phi", "5", "--route", "sideways"}).code == kExitUsage);
    CHECK(invoke({}).code == kExitUsage);

    std::ostringstream out;
    CHECK_THROWS_AS(cmd_show(out, "lucas", 11, OutputFormat::Text, RouteChoice::Reference, 10), OutOfBounds);
}

TEST_CASE("factor") {
    const Run r2 = invoke({"--format", "record", "factor", "2", "zpread"});
    CHECK(r2.code == kExitOk);
    const auto j2 = nlohmann::json::parse(r2.out);
    CHECK(j2["factors"].size() == 2);
    CHECK(j2["factors"][0]["coefficients"] == nlohmann::json({"0", "1"}));
    CHECK(j2["factors"][1]["coefficients"] == nlohmann::json({"4", "-1"}));
    CHECK(j2["status"] == "verified");

    const auto j1 = nlohmann::json::parse(invoke({"--format", "record", "factor", "1"}).out);
    CHECK(j1["factors"].size() == 1);

    const auto j6 = nlohmann::json::parse(invoke({"--format", "record", "factor", "6"}).out);
    std::vector<std::size_t> degrees;
    for (const auto& f : j6["factors"]) degrees.push_back(f["coefficients"].size() - 1);
    CHECK(degrees == std::vector<std::size_t>{1, 1, 2, 2});

    const Run text = invoke({"factor", "4", "lucas"});
    CHECK(text.code == kExitOk);
    CHECK(text.out.rfind("L_4 - 2 = ", 0) == 0);
    CHECK(invoke({"factor", "0"}).code == kExitUsage);
    CHECK(invoke({"factor", "12", "--route", "fast"}).out == invoke({"factor", "12"}).out);
}

TEST_CASE("fib") {
    const Run r8 = invoke({"fib", "8"});
    CHECK(r8.code == kExitOk);
    CHECK(lines(r8.out)[0] == "F_8 = 21 = 1 * 1 * 3 * 7");
    CHECK(lines(invoke({"fib", "1"}).out)[0] == "F_1 = 1 = 1");
    const auto j30 = nlohmann::json::parse(invoke({"--format", "record", "fib", "30"}).out);
    CHECK(j30["reconstructed"] == "832040");
    CHECK(j30["parts"].size() == 8);
}

TEST_CASE("record output is byte-stable") {
    for (const auto& args : std::vector<std::vector<std::string>>{{"--format", "record", "factor", "60"},
                                                                  {"--format", "record", "fib", "48"},
                                                                  {"--format", "record", "show", "Phi", "30"},
                                                                  {"--format", "record", "verify", "--sweep", "20"}}) {
        const Run a = invoke(args);
        const Run b = invoke(args);
        CHECK(a.code == kExitOk);
        CHECK(a.out == b.out);
        for (const auto& line : lines(a.out)) {
            const auto j = nlohmann::json::parse(line);
            CHECK(j.contains("kind"));
            CHECK(j.contains("status"));
        }
    }
}

TEST_CASE("verify") {
    const Run r1 = invoke({"verify", "--sweep", "1"});
    CHECK(r1.code == kExitOk);

    VerifyOptions opt;
    opt.sweep = 50;
    const VerifyReport rep = run_verify(opt);
    CHECK(rep.passed());
    CHECK(rep.suites.size() >= 12);
    CHECK(rep.suites.size() == suite_names().size());
    for (std::size_t i = 0; i < rep.suites.size(); ++i) {
        CHECK(rep.suites[i].name == suite_names()[i]);
        CHECK(rep.suites[i].checks > 0);
    }

    opt.jobs = 1;
    const VerifyReport serial = run_verify(opt);
    for (std::size_t i = 0; i < rep.suites.size(); ++i) {
        CHECK(serial.suites[i].checks == rep.suites[i].checks);
        CHECK(serial.suites[i].failures == rep.suites[i].failures);
    }

    CHECK(invoke({"verify", "--sweep", "0"}).code == kExitUsage);
    CHECK(invoke({"verify", "--tol", "-1"}).code == kExitUsage);
}

TEST_CASE("verify reports an injected route fault") {
    const Run r = invoke({"verify", "--sweep", "30", "--inject-fault", "24"});
    CHECK(r.code == kExitFailure);
    CHECK(r.out.find("FAIL phi-route-agreement") != std::string::npos);
    CHECK(r.out.find("n = 24") != std::string::npos);
    CHECK(r.out.find("1 - 16*x + 20*x^2 - 8*x^3 + x^4") != std::string::npos);
    CHECK(r.out.find("2 - 16*x + 20*x^2 - 8*x^3 + x^4") != std::string::npos);

    const Run rec = invoke({"--format", "record", "verify", "--sweep", "30", "--inject-fault", "24"});
    CHECK(rec.code == kExitFailure);
    const auto last = nlohmann::json::parse(lines(rec.out).back());
    CHECK(last["kind"] == "verify_summary");
    CHECK(last["status"] == "fail");
    CHECK(last["failed_suites"] == 1);
}

TEST_CASE("bench") {
    const std::vector<unsigned> one{64};
    const auto rows = run_bench(one);
    REQUIRE(rows.size() == 1);
    CHECK(std::isfinite(rows[0].schoolbook_ms));
    CHECK(std::isfinite(rows[0].karatsuba_ms));
    CHECK(std::isfinite(rows[0].factor_zpread_ms));
    CHECK(std::isfinite(rows[0].cross_check_ms));

    const std::vector<unsigned> two{16, 256};
    const auto r2 = run_bench(two);
    REQUIRE(r2.size() == 2);
    CHECK(r2[1].karatsuba_ms <= 10 * r2[1].schoolbook_ms);

    CHECK(invoke({"bench", "8"}).code == kExitOk);
    CHECK(invoke({"bench"}).code == kExitUsage);
    CHECK(invoke({"bench", "0"}).code == kExitUsage);
}
