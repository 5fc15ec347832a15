#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "mops/errors.hpp"
#include "mops/spectra.hpp"
#include "mops/type2.hpp"

using namespace mops;

namespace {
Rational q(long n, long d = 1) { return Rational(n, d); }

std::vector<ParamSet> grid(int d) {
    return {ParamSet(q(0), q(0), q(1), d), ParamSet(q(1, 2), q(1, 3), q(2), d), ParamSet(q(2), q(3, 2), q(5), d),
            ParamSet(q(-1, 3), q(-2, 3), q(2, 3), d)};
}

Rational exact(double x) { return Rational(mpq_class(x)); }

int exact_sign(const Poly& P, double x) { return P(exact(x)).sign(); }
}  // namespace

TEST_CASE("eval_recurrence small cases") {
    ParamSet p(q(0), q(0), q(1), 0);
    CHECK(eval_recurrence(p, 1, 0.5) == doctest::Approx(0.0));
    CHECK(eval_recurrence(p, 2, 0.0) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK(eval_recurrence(p, 0, 7.0) == 1.0);
    CHECK_THROWS_AS(eval_recurrence(p, -1, 1.0), ParameterError);
}

TEST_CASE("eval_recurrence against exact evaluation") {
    for (int d = 0; d < 2; ++d)
        for (const auto& p : grid(d)) {
            auto t = recurrence_table(p, 20);
            for (int n = 0; n <= 20; ++n) {
                Poly P = explicit_poly(n, p);
                for (double x : {0.0, 0.37, 1.0, 2.5, 6.0, 10.0}) {
                    double want = P(exact(x)).to_double();
                    // scale of the sum; relative error near roots is meaningless
                    double scale = 0;
                    for (int j = 0; j <= n; ++j) scale += std::fabs(P.coeff(j).to_double()) * std::pow(x, j);
                    double got = static_cast<double>(eval_recurrence_scaled(t, n, x).value());
                    CHECK(std::fabs(got - want) <= 1e-12 * scale);
                }
            }
        }
}

TEST_CASE("rescaling keeps sign and magnitude") {
    ParamSet p(q(2), q(3, 2), q(5), 0);
    auto t = recurrence_table(p, 200);
    auto v = eval_recurrence_scaled(t, 200, 5000.0);
    CHECK(v.rescaled);
    CHECK(v.sign == 1);
    // far to the right of every zero, P_n(x) ~ x^n
    CHECK(v.log_abs == doctest::Approx(200 * std::log(5000.0)).epsilon(0.05));
    auto w = eval_recurrence_scaled(t, 10, 3.0);
    CHECK_FALSE(w.rescaled);
}

TEST_CASE("zeros for small n") {
    ParamSet p(q(0), q(0), q(1), 0);
    auto z1 = zeros(p, 1);
    REQUIRE(z1.zeros.size() == 1);
    CHECK(z1.zeros[0] == doctest::Approx(0.5).epsilon(1e-14));
    auto z2 = zeros(p, 2);
    REQUIRE(z2.zeros.size() == 2);
    CHECK(z2.zeros[0] == doctest::Approx(1 - std::sqrt(2.0 / 3)).epsilon(1e-13));
    CHECK(z2.zeros[1] == doctest::Approx(1 + std::sqrt(2.0 / 3)).epsilon(1e-13));
    CHECK_THROWS_AS(zeros(p, 0), ParameterError);
}

TEST_CASE("zeros bracket sign changes of the exact polynomial") {
    for (int d = 0; d < 2; ++d)
        for (const auto& p : grid(d))
            for (int n : {3, 8, 15}) {
                Poly P = explicit_poly(n, p);
                auto z = zeros(p, n);
                for (std::size_t i = 0; i < z.zeros.size(); ++i) {
                    double x = z.zeros[i];
                    double h = std::max(1e-10 * x, 4 * z.err[i]);
                    CHECK(exact_sign(P, x - h) * exact_sign(P, x + h) < 0);
                    CHECK(z.err[i] <= 1e-12 * x);
                }
            }
}

TEST_CASE("positivity, simplicity and interlacing up to n = 60") {
    for (int d = 0; d < 2; ++d)
        for (const auto& p : grid(d)) {
            auto all = zeros_up_to(p, 60);
            for (int n = 1; n <= 60; ++n) {
                const auto& z = all[n - 1];
                CHECK(z.n == n);
                CHECK(zeros_simple(z));
                CHECK(std::is_sorted(z.zeros.begin(), z.zeros.end()));
                if (n > 1) CHECK(strictly_interlaced(all[n - 2], z));
            }
        }
}

TEST_CASE("interlacing helpers reject bad input") {
    ZeroSet a{{1.0, 3.0}, 2, {0, 0}};
    ZeroSet b{{0.5, 2.0, 2.5}, 3, {0, 0, 0}};
    CHECK_FALSE(strictly_interlaced(a, b));
    ZeroSet c{{0.5, 2.0, 4.0}, 3, {0, 0, 0}};
    CHECK(strictly_interlaced(a, c));
    ZeroSet dup{{1.0, 1.0}, 2, {0, 0}};
    CHECK_FALSE(zeros_simple(dup));
    ZeroSet neg{{-1.0, 1.0}, 2, {0, 0}};
    CHECK_FALSE(zeros_simple(neg));
}

TEST_CASE("hessenberg structure") {
    ParamSet p(q(0), q(0), q(1), 0);
    auto H1 = hessenberg(p, 1);
    CHECK(H1[0][0] == 0.5);
    ParamSet r(q(2), q(3, 2), q(5), 1);
    auto H = hessenberg(r, 8);
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) {
            auto c = recurrence_coeffs(i, r);
            if (j == i + 1) CHECK(H[i][j] == 1.0);
            else if (j == i) CHECK(H[i][j] == c.beta.to_double());
            else if (j == i - 1) CHECK(H[i][j] == c.alpha.to_double());
            else if (j == i - 2) CHECK(H[i][j] == c.gamma.to_double());
            else CHECK(H[i][j] == 0.0);
        }
}

TEST_CASE("eigen solver on known matrices") {
    // companion-style matrix of (x-1)(x-2)(x-3)
    std::vector<std::vector<double>> C = {{6, -11, 6}, {1, 0, 0}, {0, 1, 0}};
    auto ev = eigenvalues(C);
    std::vector<double> re;
    for (auto e : ev) {
        CHECK(std::fabs(e.imag()) < 1e-12);
        re.push_back(e.real());
    }
    std::sort(re.begin(), re.end());
    CHECK(re[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(re[1] == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(re[2] == doctest::Approx(3.0).epsilon(1e-12));
    // rotation has eigenvalues +-i
    auto rot = eigenvalues({{0, -1}, {1, 0}});
    CHECK(std::fabs(std::fabs(rot[0].imag()) - 1) < 1e-14);
    CHECK(std::fabs(rot[0].real()) < 1e-14);
}

TEST_CASE("hessenberg eigenvalues reproduce the zeros for n <= 30") {
    for (int d = 0; d < 2; ++d)
        for (const auto& p : grid(d)) {
            auto all = zeros_up_to(p, 30);
            for (int n : {3, 10, 20, 25, 30}) {
                auto ev = hessenberg_eigenvalues(p, n);
                std::vector<double> re;
                for (auto e : ev) {
                    CHECK(std::fabs(e.imag()) <= 1e-8 * std::max(1.0, std::abs(e)));
                    re.push_back(e.real());
                }
                std::sort(re.begin(), re.end());
                const auto& z = all[n - 1].zeros;
                for (int i = 0; i < n; ++i) CHECK(std::fabs(re[i] - z[i]) <= 1e-8 * std::max(1.0, z[i]));
            }
        }
}

TEST_CASE("double-precision eigenvalues agree while the matrix is still well conditioned") {
    ParamSet p(q(2), q(3, 2), q(5), 0);
    auto z = zeros(p, 12);
    auto ev = eigenvalues(hessenberg(p, 12));
    std::vector<double> re;
    for (auto e : ev) re.push_back(e.real());
    std::sort(re.begin(), re.end());
    for (int i = 0; i < 12; ++i) CHECK(std::fabs(re[i] - z.zeros[i]) <= 1e-10 * z.zeros[i]);
}

TEST_CASE("largest zero bound constants") {
    auto b = family_bound();
    CHECK(b.delta == q(1119104, 14348907));
    CHECK(b.M == doctest::Approx(3.484).epsilon(5e-4));
    double al = b.alpha.to_double(), g = b.gamma.to_double();
    CHECK(std::fabs(b.tau * b.tau * b.tau - al * b.tau - 2 * g) < 1e-12);
    double f2 = 2 * al / std::pow(b.tau, 3) + 6 * g / std::pow(b.tau, 4);
    CHECK(f2 > 0);
    // M is the minimum of s + beta + alpha/s + gamma/s^2
    auto f = [&](double s) { return s + b.beta.to_double() + al / s + g / (s * s); };
    CHECK(f(b.tau) == doctest::Approx(b.M).epsilon(1e-14));
    for (double s : {0.5, 0.9, 1.1, 2.0}) CHECK(f(s * b.tau) > b.M);
}

TEST_CASE("bound in the symmetric case matches direct minimization") {
    auto b = largest_zero_bound(q(0), q(0), q(8, 27));
    // golden-section search on s + gamma/s^2
    double g = 8.0 / 27, lo = 0.1, hi = 5.0, phi = (std::sqrt(5.0) - 1) / 2;
    auto f = [&](double s) { return s + g / (s * s); };
    for (int i = 0; i < 200; ++i) {
        double x1 = hi - phi * (hi - lo), x2 = lo + phi * (hi - lo);
        if (f(x1) < f(x2)) hi = x2;
        else lo = x1;
    }
    double smin = 0.5 * (lo + hi);
    CHECK(b.tau == doctest::Approx(smin).epsilon(1e-7));
    CHECK(b.M == doctest::Approx(f(smin)).epsilon(1e-12));
    CHECK(b.tau == doctest::Approx(std::cbrt(2 * g)).epsilon(1e-14));
}

TEST_CASE("bound formula inapplicable") {
    CHECK_THROWS_AS(largest_zero_bound(q(3), q(0), q(1)), std::domain_error);
    CHECK_THROWS_AS(largest_zero_bound(q(0), q(0), q(0)), std::domain_error);
    CHECK_THROWS_AS(largest_zero_bound(q(0), q(0), q(-1)), std::domain_error);
}

TEST_CASE("zero ratio scan") {
    ParamSet p0(q(2), q(3, 2), q(5), 0), p1 = p0.with_d(1);
    auto r0 = zero_ratio_scan(p0, 40, 100);
    auto r1 = zero_ratio_scan(p1, 40, 100);
    REQUIRE(r0.size() == 61);
    double M = family_bound().M;
    for (std::size_t i = 0; i < r0.size(); ++i) {
        CHECK(r0[i].n == 40 + static_cast<int>(i));
        CHECK(r0[i].ratio < 3.484);
        CHECK(r1[i].ratio < M);
        CHECK(r0[i].ratio == doctest::Approx(r0[i].x_max / r0[i].n));
        if (r0[i].n % 2 == 0) CHECK(std::fabs(r0[i].x_max - r1[i].x_max) <= 1e-9);
    }
    // upward trend, separately along each parity
    for (std::size_t i = 2; i < r0.size(); ++i) {
        CHECK(r0[i].ratio > r0[i - 2].ratio);
        CHECK(r1[i].ratio > r1[i - 2].ratio);
    }
    CHECK_THROWS_AS(zero_ratio_scan(p0, 5, 4), ParameterError);
}
