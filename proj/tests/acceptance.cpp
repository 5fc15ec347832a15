// One PASS/FAIL line per acceptance criterion. Tolerances are fixed here.
// Usage: acceptance [--expect-fail 3,7] ; exit 0 iff the failing set equals the expected set.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <gsl/gsl_errno.h>
#include <gsl/gsl_sf_hyperg.h>

#include "mops/errors.hpp"
#include "mops/numweights.hpp"
#include "mops/spectra.hpp"
#include "mops/symmetry.hpp"
#include "mops/type1.hpp"
#include "mops/type2.hpp"

using namespace mops;

namespace {

constexpr int kExactN = 24;
constexpr int kType1N = 12;
constexpr int kAsymM = 1000;
constexpr double kAsymTol = 0.005;
constexpr double kMomentTol = 1e-8;
constexpr double kKummerTol = 1e-8;
constexpr double kRatioTol = 1e-9;
constexpr int kCfDepth = 200;
constexpr int kZerosN = 60;
constexpr int kHessN = 30;
constexpr double kHessTol = 1e-8;
constexpr double kBound = 3.484;
constexpr double kEvenTol = 1e-9;
constexpr double kConfLo = 1.8, kConfHi = 2.2;
constexpr int kConfN = 8;
constexpr int kBesselN = 12;
constexpr int kSymN = 30;
constexpr double kTime1 = 30, kTime8 = 120;

Rational q(long n, long d = 1) { return Rational(n, d); }

std::vector<ParamSet> grid() {
    std::vector<ParamSet> g;
    for (int d = 0; d < 2; ++d)
        for (auto [a, b, c] : {std::tuple{q(0), q(0), q(1)}, std::tuple{q(1, 2), q(1, 3), q(2)},
                               std::tuple{q(2), q(3, 2), q(5)}, std::tuple{q(-1, 3), q(-2, 3), q(2, 3)}})
            g.emplace_back(a, b, c, d);
    return g;
}

struct Outcome {
    bool pass = true;
    std::string detail;
};

void fail(Outcome& o, const std::string& why) {
    if (o.pass) o.detail = why;
    o.pass = false;
}

std::string fmt(const char* f, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

// ---------------------------------------------------------------------------

Outcome c1() {
    Outcome o;
    for (const auto& p : grid())
        for (int n = 0; n <= kExactN; ++n)
            for (int k = 0; 2 * k <= n + 1; ++k) {
                if (n >= 2 * k + 1 && !orthogonality_residual(n, k, 0, p).is_zero())
                    fail(o, "nonzero residual " + p.str() + " n=" + std::to_string(n));
                if (n >= 2 * k + 2 && !orthogonality_residual(n, k, 1, p).is_zero())
                    fail(o, "nonzero residual " + p.str() + " n=" + std::to_string(n));
                if (n == 2 * k && orthogonality_residual(n, k, 0, p) != normalization(n, p))
                    fail(o, "diagonal mismatch " + p.str() + " n=" + std::to_string(n));
                if (n == 2 * k + 1 && orthogonality_residual(n, k, 1, p) != normalization(n, p))
                    fail(o, "diagonal mismatch " + p.str() + " n=" + std::to_string(n));
            }
    if (o.pass) o.detail = "8 parameter sets, n <= 24, residuals exactly 0, diagonals equal N_n";
    return o;
}

Outcome c2() {
    Outcome o;
    for (const auto& p : grid()) {
        auto rec = generate_by_recurrence(kExactN + 1, p);
        for (int n = 0; n <= kExactN + 1; ++n)
            if (rec[n] != explicit_poly(n, p)) fail(o, "recurrence != explicit " + p.str());
        std::vector<Poly> P;
        for (int n = 0; n <= kExactN + 1; ++n) P.push_back(explicit_poly(n, p));
        for (int n = 0; n <= kExactN; ++n) {
            // x P_n - P_{n+1} = beta P_n + alpha P_{n-1} + gamma P_{n-2}, peeled from the top
            Poly r = Poly::x() * P[n] - P[n + 1];
            Rational beta = r.coeff(n);
            r -= beta * P[n];
            Rational alpha = n >= 1 ? r.coeff(n - 1) : Rational(0);
            if (n >= 1) r -= alpha * P[n - 1];
            Rational gamma = n >= 2 ? r.coeff(n - 2) : Rational(0);
            if (n >= 2) r -= gamma * P[n - 2];
            if (!r.is_zero()) fail(o, "coefficient matching left a residual " + p.str());
            auto t = recurrence_coeffs(n, p);
            if (t.beta != beta || t.alpha != alpha || t.gamma != gamma)
                fail(o, "closed form mismatch " + p.str() + " n=" + std::to_string(n));
            if (n >= 1 && gamma_coeff(n, p).sign() <= 0) fail(o, "gamma not positive " + p.str());
        }
    }
    if (o.pass) o.detail = "explicit == recurrence, matched coefficients == closed forms, gamma > 0";
    return o;
}

Outcome c3() {
    Outcome o;
    const Rational m(kAsymM);
    const Rational targets[5] = {q(28, 9), q(20, 9), q(208, 81), q(64, 729), q(64, 27)};
    const char* names[5] = {"beta(d)/m", "beta(1-d)/m", "alpha/m^2", "gamma(d)/m^3", "gamma(1-d)/m^3"};
    double worst = 0;
    std::string where;
    int bad_sets = 0;
    for (const auto& p : grid()) {
        int d = p.d(), n = 2 * kAsymM + d;
        ParamSet other = p.with_d(1 - d);
        Rational vals[5] = {beta_coeff(n, p) / m, beta_coeff(n, other) / m, alpha_coeff(n, p) / m.pow(2),
                            gamma_coeff(n, p) / m.pow(3), gamma_coeff(n, other) / m.pow(3)};
        bool set_ok = true;
        for (int i = 0; i < 5; ++i) {
            double rel = ((vals[i] - targets[i]) / targets[i]).abs().to_double();
            if (rel > worst) {
                worst = rel;
                where = std::string(names[i]) + " at " + p.str();
            }
            if (rel > kAsymTol) set_ok = false;
        }
        if (!set_ok) ++bad_sets;
    }
    o.pass = worst <= kAsymTol;
    o.detail = "worst " + fmt("%.4f%%", 100 * worst) + " (" + where + "), tolerance 0.5%, " +
               std::to_string(8 - bad_sets) + "/8 sets within";
    return o;
}

Outcome c4() {
    Outcome o;
    for (const auto& p : grid())
        for (int n = 0; n <= kExactN; ++n) {
            if (!ode_residual(n, p).is_zero()) fail(o, "ODE residual " + p.str() + " n=" + std::to_string(n));
            if (!derivative_shift_residual(n, p).is_zero())
                fail(o, "derivative shift residual " + p.str() + " n=" + std::to_string(n));
        }
    if (o.pass) o.detail = "all residuals are the zero polynomial, n <= 24";
    return o;
}

Outcome c5() {
    Outcome o;
    for (const auto& p : grid()) {
        if (!weight_ode_residual(p).is_zero()) fail(o, "weight ODE not annihilated " + p.str());
        for (int n = 1; n <= kType1N; ++n) {
            try {
                auto r = rodrigues_type1(n, p);  // throws if negative powers survive
                auto s = type1_solve(n, p);
                if (r.A != s.A || r.B != s.B) fail(o, "rodrigues != solve " + p.str() + " n=" + std::to_string(n));
                if (type1_combo(s, p).is_zero()) fail(o, "type I function vanished " + p.str());
            } catch (const InvariantError& e) {
                fail(o, std::string(e.what()) + " " + p.str() + " n=" + std::to_string(n));
            }
        }
    }
    if (o.pass) o.detail = "rodrigues == linear solve for n <= 12, weight ODE reduces to zero, no negative powers";
    return o;
}

Outcome c6() {
    Outcome o;
    double worst_m = 0, worst_k = 0;
    for (const auto& p : grid()) {
        if (p.d() == 1) continue;  // moments do not depend on d
        for (int t = 0; t < 2; ++t)
            for (int k = 0; k <= 10; ++k) {
                double want = moment(p, t, k).to_double();
                double got = quad_moment(p, t, k).value;
                worst_m = std::max(worst_m, std::fabs(got - want) / std::fabs(want));
            }
        double beta = (p.a() - p.b() + q(1)).to_double();
        for (int t = 0; t < 2; ++t) {
            double alpha = (p.c() + q(t)).to_double();
            for (double x : {0.5, 1.0, 5.0}) worst_k = std::max(worst_k, kummer_residual(alpha, beta, x));
        }
    }
    o.pass = worst_m <= kMomentTol && worst_k <= kKummerTol;
    o.detail = "moment rel err " + fmt("%.2e", worst_m) + " (tol 1e-8, k <= 10), Kummer residual " + fmt("%.2e", worst_k) +
               " (tol 1e-8)";
    return o;
}

Outcome c7() {
    Outcome o;
    gsl_set_error_handler_off();
    double worst = 0;
    for (const auto& p : {ParamSet(q(0), q(0), q(1), 0), ParamSet(q(2), q(3, 2), q(5), 0)}) {
        double c = p.c().to_double(), b = p.b().to_double(), beta = (p.a() - p.b() + q(1)).to_double();
        for (double x : {0.5, 1.0, 5.0}) {
            double want = (c + b + 1) * gsl_sf_hyperg_U(c + 1, beta, x) / gsl_sf_hyperg_U(c, beta, x);
            double got = nikishin_ratio(p, x, kCfDepth).value;
            worst = std::max(worst, std::fabs(got - want) / std::fabs(want));
        }
    }
    o.pass = worst <= kRatioTol;
    o.detail = "depth 200 fraction vs independent U ratio: rel err " + fmt("%.2e", worst) + " (tol 1e-9)";
    return o;
}

Outcome c8() {
    Outcome o;
    for (const auto& p : grid()) {
        auto all = zeros_up_to(p, kZerosN);
        for (int n = 1; n <= kZerosN; ++n) {
            if (!zeros_simple(all[n - 1])) fail(o, "zeros not positive/simple " + p.str() + " n=" + std::to_string(n));
            if (n > 1 && !strictly_interlaced(all[n - 2], all[n - 1]))
                fail(o, "interlacing " + p.str() + " n=" + std::to_string(n));
        }
        for (int n = 1; n <= kHessN; ++n) {
            auto ev = hessenberg_eigenvalues(p, n);
            std::vector<double> re;
            for (auto e : ev) {
                if (std::fabs(e.imag()) > kHessTol * std::max(1.0, std::abs(e))) fail(o, "complex eigenvalue " + p.str());
                re.push_back(e.real());
            }
            std::sort(re.begin(), re.end());
            for (int i = 0; i < n; ++i) {
                double z = all[n - 1].zeros[i];
                if (std::fabs(re[i] - z) > kHessTol * std::max(1.0, z))
                    fail(o, "eigenvalue mismatch " + p.str() + " n=" + std::to_string(n));
            }
        }
    }
    ParamSet f0(q(2), q(3, 2), q(5), 0);
    auto s0 = zero_ratio_scan(f0, 40, 100), s1 = zero_ratio_scan(f0.with_d(1), 40, 100);
    double worst_ratio = 0, worst_even = 0;
    for (std::size_t i = 0; i < s0.size(); ++i) {
        worst_ratio = std::max({worst_ratio, s0[i].ratio, s1[i].ratio});
        if (s0[i].n % 2 == 0) worst_even = std::max(worst_even, std::fabs(s0[i].x_max - s1[i].x_max));
    }
    if (!(worst_ratio < kBound)) fail(o, "ratio " + fmt("%.6f", worst_ratio) + " not below 3.484");
    if (worst_even > kEvenTol) fail(o, "even-n largest zeros differ by " + fmt("%.2e", worst_even));
    if (o.pass)
        o.detail = "n <= 60 positive/simple/interlaced, Hessenberg agrees for n <= 30, max x_max/n = " +
                   fmt("%.5f", worst_ratio) + " < 3.484, even-n gap " + fmt("%.1e", worst_even);
    return o;
}

Outcome c9() {
    Outcome o;
    double lo = 1e9, hi = 0;
    for (const auto& p : grid())
        for (int n = 1; n <= kConfN; ++n) {
            double r = (confluence_gap(n, p, q(1000)) / confluence_gap(n, p, q(2000))).to_double();
            lo = std::min(lo, r);
            hi = std::max(hi, r);
        }
    if (lo < kConfLo || hi > kConfHi) fail(o, "gap ratio range [" + fmt("%.4f", lo) + ", " + fmt("%.4f", hi) + "]");
    for (const auto& p : grid())
        for (int n = 0; n <= kBesselN; ++n)
            if (!bessel_derivative_residual(n, p.a(), p.b()).is_zero()) fail(o, "Bessel derivative shift " + p.str());
    if (o.pass)
        o.detail = "gap(c=1000)/gap(c=2000) in [" + fmt("%.4f", lo) + ", " + fmt("%.4f", hi) +
                   "] for n <= 8, Bessel shift exact for n <= 12";
    return o;
}

Outcome c10() {
    Outcome o;
    for (auto [f, par, name] : {std::tuple{CubicFamily::B1, q(3), "B1"}, std::tuple{CubicFamily::B2, q(5), "B2"}}) {
        auto seq = compose_threefold(f, par, kSymN);
        if (!threefold_support_ok(seq)) fail(o, std::string(name) + " support not congruent mod 3");
        try {
            auto g = threefold_recurrence_check(seq);
            for (const auto& x : g)
                if (x.sign() <= 0) fail(o, std::string(name) + " gamma not positive");
        } catch (const InvariantError& e) {
            fail(o, std::string(name) + ": " + e.what());
        }
    }
    if (o.pass) o.detail = "B1 (mu=3) and B2 (rho=5): beta = alpha = 0 exactly, gamma > 0, N <= 30";
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    std::set<int> expected;
    for (int i = 1; i < argc; ++i) {
        std::string a = argv[i];
        if (a == "--expect-fail" && i + 1 < argc) {
            std::stringstream ss(argv[++i]);
            std::string tok;
            while (std::getline(ss, tok, ',')) expected.insert(std::stoi(tok));
        } else {
            std::fprintf(stderr, "usage: acceptance [--expect-fail N[,N...]]\n");
            return 2;
        }
    }

    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
        {"exact orthogonality", c1},    {"construction equivalence", c2}, {"asymptotic constants", c3},
        {"ODE and derivative shift", c4}, {"type I routes", c5},          {"numeric weights", c6},
        {"Nikishin ratio", c7},         {"zeros", c8},                    {"confluence", c9},
        {"threefold symmetry", c10}};

    std::set<int> failed;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        int id = static_cast<int>(i) + 1;
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (id == 1 && secs > kTime1) fail(o, "runtime " + fmt("%.1f s", secs) + " over 30 s");
        if (id == 8 && secs > kTime8) fail(o, "runtime " + fmt("%.1f s", secs) + " over 120 s");
        if (!o.pass) failed.insert(id);
        std::printf("criterion %2d %s  %-26s %s [%.2f s]%s\n", id, o.pass ? "PASS" : "FAIL", criteria[i].first,
                    o.detail.c_str(), secs, (!o.pass && expected.count(id)) ? " (known failure)" : "");
        std::fflush(stdout);
    }
    std::printf("summary: %zu/%zu pass\n", criteria.size() - failed.size(), criteria.size());
    if (failed != expected) {
        std::printf("failing set differs from the expected set\n");
        return 1;
    }
    return 0;
}
