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

#include "cli/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <random>
#include <thread>
#include <utility>

#include "spreadpoly/factor.hpp"
#include "spreadpoly/fib_primitive.hpp"
#include "spreadpoly/palindrome.hpp"
#include "spreadpoly/rational.hpp"
#include "spreadpoly/sequences.hpp"

namespace spreadpoly::cli {

namespace {

class SuiteContext {
   public:
    explicit SuiteContext(SuiteResult& result) : result_(result) {}

    void run(const std::string& label, const std::function<bool()>& fn) {
        ++result_.checks;
        try {
            if (fn()) return;
            fail(label);
        } catch (const std::exception& e) {
            fail(label + ": " + e.what());
        }
    }

   private:
    void fail(std::string what) {
        if (result_.failures++ == 0) result_.first_failure = std::move(what);
    }

    SuiteResult& result_;
};

using SuiteFn = std::function<void(SuiteContext&, const VerifyOptions&)>;

unsigned cap(unsigned bound, const VerifyOptions& opt) { return std::min(bound, opt.sweep); }

std::string idx(const char* name, unsigned v) { return std::string(name) + " = " + std::to_string(v); }

IntPoly random_poly(std::mt19937_64& rng, std::size_t max_degree) {
    std::uniform_int_distribution<std::size_t> deg(0, max_degree);
    std::uniform_int_distribution<long> coeff(-1000000, 1000000);
    std::vector<BigInt> c(deg(rng) + 1);
    for (auto& v : c) v = coeff(rng);
    if (c.back() == 0) c.back() = 1;
    return IntPoly(std::move(c));
}

const std::vector<std::pair<std::string, SuiteFn>>& suites() {
    static const std::vector<std::pair<std::string, SuiteFn>> table = {
        {"zpread-closed-form-vs-lucas",
         [](SuiteContext& ctx, const VerifyOptions& opt) {
             for (unsigned n = 1; n <= opt.sweep; ++n)
                 ctx.run(idx("n", n), [n] { return zpread(n) == zpread_via_lucas(n); });
         }},
        {"zpread-zero-constant-term",
         [](SuiteContext& ctx, const VerifyOptions& opt) {
             for (unsigned n = 1; n <= opt.sweep; ++n) ctx.run(idx("n", n), [n] { return zpread(n).coeff(0) == 0; });
         }},
        {"lucas-multiplicative",
         [](SuiteContext& ctx, const VerifyOptions& opt) {
             for (unsigned m = 0; m <= cap(20, opt); ++m)
                 for (unsigned n = 0; n <= cap(20, opt); ++n)
                     ctx.run(idx("m", m) + ", " + idx("n", n), [m, n] { return lucas(m * n) == compose(lucas(m), lucas(n)); });
         }},
        {"lucas-double-minus-two",
         [](SuiteContext& ctx, const VerifyOptions& opt) {
             for (unsigned n = 0; n <= cap(100, opt); ++n)
                 ctx.run(idx("n", n), [n] {
                     const IntPoly l = lucas(n);
                     return lucas(2 * n) - IntPoly{2} == (l - IntPoly{2}) * (l + IntPoly{2});
                 });
         }},
        {"lucas-double-plus-two",
         [](SuiteContext& ctx, const VerifyOptions& opt) {
             for (unsigned n = 0; n <= cap(100, opt); ++n)
                 ctx.run(idx("n", n), [n] { return lucas(2 * n) + IntPoly{2} == square(lucas(n)); });
         }},
        {"odd-square-identity",
         [](SuiteContext& ctx, const VerifyOptions& opt) {
             for (unsigned m = 0; m <= cap(50, opt); ++m)
                 ctx.run(idx("m", m), [m] {
                     return (lucas(2 * m + 1) - IntPoly{2}) * IntPoly{-2, 1} == square(lucas(m + 1) - lucas(m));
                 });
         }},
        {"even-square-identity",
         [](SuiteContext& ctx, const VerifyOptions& opt) {
             for (unsigned m = 1; m <= cap(50, opt); ++m)
                 ctx.run(idx("m", m), [m] {
                     return (lucas(2 * m) - IntPoly{2}) * IntPoly{-4, 0, 1} == square(lucas(m + 1) - lucas(m - 1));
                 });
         }},
        {"cyclotomic-completeness",
         [](SuiteContext& ctx, const VerifyOptions& opt) {
             for (unsigned n = 1; n <= cap(200, opt); ++n)
                 ctx.run(idx("n", n), [n] {
                     IntPoly prod{1};
                     for (unsigned d : divisors(n)) prod = prod * cyclotomic(d);
                     const auto c = cyclotomic(n);
                     return prod == IntPoly::monomial(1, n) - IntPoly{1} &&
                            static_cast<unsigned long>(c.degree()) == totient(n);
                 });
         }},
        {"cyclotomic-palindromic",
         [](SuiteContext& ctx, const VerifyOptions& opt) {
             for (unsigned n = 3; n <= cap(200, opt); ++n)
                 ctx.run(idx("n", n), [n] {
                     const auto c = cyclotomic(n);
                     return is_palindromic(c) && c.degree() % 2 == 0;
                 });
         }},
        {"zpread-of-square-odd",
         [](SuiteContext& ctx, const VerifyOptions& opt) {
             for (unsigned m = 1; m <= cap(49, opt); m += 2)
                 ctx.run(idx("m", m), [m] { return substitute_square(zpread(m)) == square(lucas(m)); });
         }},
        {"zpread-of-square-even",
         [](SuiteContext& ctx, const VerifyOptions& opt) {
             for (unsigned n = 1; n <= cap(25, opt); ++n)
                 ctx.run(idx("n", n), [n] { return substitute_square(zpread(2 * n)) == IntPoly{4} - square(lucas(2 * n)); });
         }},
        {"zpread-composition",
         [](SuiteContext& ctx, const VerifyOptions& opt) {
             for (unsigned m = 1; m <= cap(15, opt); ++m)
                 for (unsigned n = 1; n <= cap(15, opt); ++n)
                     ctx.run(idx("m", m) + ", " + idx("n", n), [m, n] { return zpread(m * n) == compose(zpread(m), zpread(n)); });
         }},
        {"zpread-u-substitution",
         [](SuiteContext& ctx, const VerifyOptions& opt) {
             const ExactRational us[] = {ExactRational(2), ExactRational(3), ExactRational(5, 2), ExactRational(-3, 2)};
             for (const auto& u : us)
                 for (unsigned n = 1; n <= cap(30, opt); ++n)
                     ctx.run("u = " + u.to_string() + ", " + idx("n", n), [&u, n] {
                         const ExactRational d = u - u.pow(-1);
                         const ExactRational e = u.pow(n) - u.pow(-static_cast<long>(n));
                         return eval_rational(zpread(n), -(d * d)) == -(e * e);
                     });
         }},
        {"psi-power-of-two-is-lucas",
         [](SuiteContext& ctx, const VerifyOptions& opt) {
             for (unsigned n = 1; n <= cap(8, opt); ++n)
                 ctx.run(idx("n", n), [n] { return psi(1U << (n + 2)) == lucas(1U << n); });
         }},
        {"phi-power-of-two-square-is-lucas",
         [](SuiteContext& ctx, const VerifyOptions& opt) {
             for (unsigned n = 1; n <= cap(8, opt); ++n)
                 ctx.run(idx("n", n), [n] { return substitute_square(phi_pow2(n + 1)) == lucas(1U << n); });
         }},
        {"zpread-factorization",
         [](SuiteContext& ctx, const VerifyOptions& opt) {
             for (unsigned n = 1; n <= opt.sweep; ++n)
                 ctx.run(idx("n", n), [n] {
                     const auto rec = factor_zpread(n);
                     std::ptrdiff_t deg = 0;
                     for (const auto& f : rec.factors) deg += f.poly.degree();
                     return rec.product == zpread(n) && deg == static_cast<std::ptrdiff_t>(n);
                 });
         }},
        {"lucas-minus-two-factorization",
         [](SuiteContext& ctx, const VerifyOptions& opt) {
             for (unsigned n = 1; n <= opt.sweep; ++n)
                 ctx.run(idx("n", n), [n] { return factor_lucas_minus2(n).product == lucas(n) - IntPoly{2}; });
         }},
        {"phi-route-agreement",
         [](SuiteContext& ctx, const VerifyOptions& opt) {
             PhiTamper tamper;
             if (opt.inject_fault) {
                 tamper = [target = *opt.inject_fault](PhiRoute route, unsigned n, IntPoly& p) {
                     if (n == target && route != PhiRoute::MinimalPoly) p = p + IntPoly{1};
                 };
             }
             for (unsigned n = 1; n <= opt.sweep; ++n)
                 ctx.run(idx("n", n), [n, &tamper] { return cross_check_phi(n, tamper).routes.size() >= 2; });
         }},
        {"degrees-and-monicity",
         [](SuiteContext& ctx, const VerifyOptions& opt) {
             for (unsigned n = 1; n <= opt.sweep; ++n)
                 ctx.run(idx("n", n), [n] {
                     const auto t = static_cast<std::ptrdiff_t>(totient(n));
                     const auto ps = psi(n);
                     const auto ph = phi_min(n);
                     if (capital_phi(n).degree() != t) return false;
                     if (!ps.is_monic() || !ph.is_monic()) return false;
                     return n < 3 || (ps.degree() == t / 2 && ph.degree() == t / 2);
                 });
         }},
        {"zpread-commutes-with-capital-phi-pow2",
         [](SuiteContext& ctx, const VerifyOptions& opt) {
             for (unsigned m = 1; m <= cap(12, opt); ++m)
                 for (unsigned n = 2; n <= cap(5, opt); ++n)
                     ctx.run(idx("m", m) + ", " + idx("n", n), [m, n] {
                         // Odd m commute; even m satisfy Z_m(Phi(x)) = 4 - Phi(Z_m(x)).
                         const IntPoly z = zpread(m);
                         const IntPoly c = capital_phi(1U << n);
                         const IntPoly rhs = compose(c, z);
                         return compose(z, c) == (m % 2 == 1 ? rhs : IntPoly{4} - rhs);
                     });
         }},
        {"capital-phi-reflection",
         [](SuiteContext& ctx, const VerifyOptions& opt) {
             for (unsigned m = 3; m <= cap(49, opt); m += 2)
                 ctx.run(idx("m", m), [m] { return capital_phi(2 * m) == compose(capital_phi(m), IntPoly{4, -1}); });
         }},
        {"phi-no-integer-roots",
         [](SuiteContext& ctx, const VerifyOptions& opt) {
             for (unsigned n : {5U, 7U, 9U, 11U, 13U, 25U}) {
                 if (n > opt.sweep) continue;
                 ctx.run(idx("n", n), [n] {
                     const IntPoly p = phi_min(n);
                     const BigInt c0 = abs(p.coeff(0));
                     if (c0 == 0) return false;
                     for (BigInt r = 1; r <= c0; ++r) {
                         if (c0 % r != 0) continue;
                         if (eval_int(p, r) == 0 || eval_int(p, -r) == 0) return false;
                     }
                     return true;
                 });
             }
         }},
        {"fibonacci-primitive-parts",
         [](SuiteContext& ctx, const VerifyOptions& opt) {
             for (unsigned n = 1; n <= cap(200, opt); ++n)
                 ctx.run(idx("n", n), [n] { return fib_factorization(n).reconstructed == fibonacci(n); });
         }},
        {"zpread-at-five",
         [](SuiteContext& ctx, const VerifyOptions& opt) {
             for (unsigned n = 1; n <= cap(200, opt); ++n)
                 ctx.run(idx("n", n), [n] {
                     zpread_at5_identity(n);
                     return true;
                 });
         }},
        {"fibonacci-divisibility",
         [](SuiteContext& ctx, const VerifyOptions& opt) {
             for (unsigned n = 1; n <= cap(200, opt); ++n)
                 ctx.run(idx("n", n), [n] {
                     const BigInt f = fibonacci(n);
                     for (unsigned d : divisors(n))
                         if (f % fibonacci(d) != 0) return false;
                     return true;
                 });
         }},
        {"phi-float-roots",
         [](SuiteContext& ctx, const VerifyOptions& opt) {
             for (unsigned n = 3; n <= cap(50, opt); ++n)
                 ctx.run(idx("n", n), [n, tol = opt.tol] {
                     float_root_check(n, tol);
                     return true;
                 });
         }},
        {"kernel-ring-properties",
         [](SuiteContext& ctx, const VerifyOptions& opt) {
             std::mt19937_64 rng(20260101);
             const unsigned count = cap(1000, opt);
             for (unsigned i = 0; i < count; ++i) {
                 const IntPoly p = random_poly(rng, 16);
                 const IntPoly q = random_poly(rng, 16);
                 const IntPoly r = random_poly(rng, 16);
                 ctx.run(idx("instance", i), [&] {
                     const BigInt a = 7;
                     return p * q == q * p && (p * q) * r == p * (q * r) && p * (q + r) == p * q + p * r &&
                            (p + q) + r == p + (q + r) && div_exact(p * q, q) == p &&
                            mul_karatsuba(p, q, 2) == mul_schoolbook(p, q) &&
                            eval_int(p * q, a) == eval_int(p, a) * eval_int(q, a);
                 });
             }
         }},
    };
    return table;
}

}  // namespace

bool VerifyReport::passed() const { return failed_suites() == 0; }

std::size_t VerifyReport::failed_suites() const {
    return static_cast<std::size_t>(std::count_if(suites.begin(), suites.end(), [](const auto& s) { return !s.passed(); }));
}

std::vector<std::string> suite_names() {
    std::vector<std::string> names;
    for (const auto& [name, fn] : suites()) names.push_back(name);
    return names;
}

VerifyReport run_verify(const VerifyOptions& options) {
    const auto& table = suites();
    VerifyReport report;
    report.sweep = options.sweep;
    report.suites.resize(table.size());

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < table.size(); i = next++) {
            SuiteResult& result = report.suites[i];
            result.name = table[i].first;
            SuiteContext ctx(result);
            const auto start = std::chrono::steady_clock::now();
            table[i].second(ctx, options);
            result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        }
    };

    unsigned jobs = options.jobs != 0 ? options.jobs : std::max(1U, std::thread::hardware_concurrency());
    jobs = std::min<unsigned>(jobs, static_cast<unsigned>(table.size()));
    std::vector<std::jthread> threads;
    for (unsigned t = 1; t < jobs; ++t) threads.emplace_back(worker);
    worker();
    threads.clear();
    return report;
}

}  // namespace spreadpoly::cli
