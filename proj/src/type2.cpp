#include "mops/type2.hpp"

#include <stdexcept>

#include "mops/hypergeometric.hpp"

namespace mops {

namespace {

const Rational kOne(1);

Rational R(long v) { return Rational(v); }

// k (a+k) (b+k)
Rational F(const Rational& a, const Rational& b, long k) { return R(k) * (a + R(k)) * (b + R(k)); }

// beta_{2m+d}^{(d)}
Rational beta_same(long m, int d, const Rational& a, const Rational& b, const Rational& c) {
    long n = 2 * m + d;
    Rational r = F(a, b, n + 1) / (c + b + R(3 * m + 2 * d + 1));
    if (n > 0) r -= F(a, b, n) / (c + b + R(3 * m + 2 * d));
    return r;
}

// beta_{2m+d}^{(1-d)}
Rational beta_other(long m, int d, const Rational& a, const Rational& b, const Rational& c) {
    long n = 2 * m + d;
    Rational r = F(a, b, n + 1) / (c + b + R(3 * m + d + 2));
    if (n > 0) r -= F(a, b, n) / (c + b + R(3 * m + d));
    return r;
}

// alpha_{2m+d}^{(d)}
Rational alpha_same(long m, int d, const Rational& a, const Rational& b, const Rational& c) {
    long n = 2 * m + d;
    if (n == 0) return Rational(0);
    Rational E = c + b + R(3 * m + 2 * d);
    Rational inner = F(a, b, n + 1) / (R(2) * (E + kOne)) - F(a, b, n) / E;
    if (n > 1) inner += F(a, b, n - 1) / (R(2) * (E - kOne));  // E - 1 may vanish at n = 1
    return F(a, b, n) / E * inner;
}

// gamma_{2m+d}^{(d)}
Rational gamma_same(long m, int d, const Rational& a, const Rational& b, const Rational& c) {
    long n = 2 * m + d;
    if (n == 0) return Rational(0);
    Rational num = pochhammer(R(n), 2) * pochhammer(a + R(n), 2) * pochhammer(b + R(n), 2) *
                   (c + R(m + d)) * (c + b - a + R(m + d)) * (c + b + R(m + d));
    Rational den = pochhammer(c + b + R(3 * m - 1 + 2 * d), 3) * pochhammer(c + b + R(3 * m + 2 * d), 3);
    return num / den;
}

// gamma_{2m+d}^{(1-d)}
Rational gamma_other(long m, int d, const Rational& a, const Rational& b, const Rational& c) {
    long n = 2 * m + d;
    if (n == 0) return Rational(0);
    return pochhammer(R(n), 2) * pochhammer(a + R(n), 2) * pochhammer(b + R(n), 2) /
           pochhammer(c + b + R(3 * m + d), 3);
}

}  // namespace

Rational tau_coeff(int n, int j, const ParamSet& p) {
    if (j < 0 || j > n) return Rational(0);
    int k = n - j;
    Rational e = p.c() + p.b() + kOne + R(half_floor(n, p.d()) + j);
    Rational v = binomial(n, j) * pochhammer(p.a() + kOne + R(j), k) *
                 pochhammer(p.b() + kOne + R(j), k) / pochhammer(e, k);
    return (k % 2) ? -v : v;
}

Poly explicit_poly(int n, const ParamSet& p) {
    if (n < 0) throw std::invalid_argument("negative degree");
    std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
    for (int j = 0; j <= n; ++j) c[static_cast<std::size_t>(j)] = tau_coeff(n, j, p);
    return Poly(std::move(c));
}

Poly explicit_poly_2f2(int n, const ParamSet& p) {
    Rational e = p.c() + p.b() + kOne + R(half_floor(n, p.d()));
    Rational a1 = p.a() + kOne, b1 = p.b() + kOne;
    Poly f = pfq_terminating({R(-n), e}, {a1, b1}, Poly::x(), 0);
    Rational s = pochhammer(a1, n) * pochhammer(b1, n) / pochhammer(e, n);
    return f * ((n % 2) ? -s : s);
}

Rational beta_coeff(int n, const ParamSet& p) {
    if (n < 0) throw std::invalid_argument("negative index");
    int d = p.d();
    if ((n - d) % 2 == 0) return beta_same((n - d) / 2, d, p.a(), p.b(), p.c());
    int dp = 1 - d;
    return beta_other((n - dp) / 2, dp, p.a(), p.b(), p.c());
}

Rational alpha_coeff(int n, const ParamSet& p) {
    if (n < 0) throw std::invalid_argument("negative index");
    int d = p.d();
    if ((n - d) % 2 == 0) return alpha_same((n - d) / 2, d, p.a(), p.b(), p.c());
    // alpha^{(1-d')}(c) = alpha^{(d')}(c - d') on indices n = 2m + d'
    int dp = 1 - d;
    return alpha_same((n - dp) / 2, dp, p.a(), p.b(), p.c() - R(dp));
}

Rational gamma_coeff(int n, const ParamSet& p) {
    if (n <= 0) return Rational(0);
    int d = p.d();
    if ((n - d) % 2 == 0) return gamma_same((n - d) / 2, d, p.a(), p.b(), p.c());
    int dp = 1 - d;
    return gamma_other((n - dp) / 2, dp, p.a(), p.b(), p.c());
}

RecurrenceTriple recurrence_coeffs(int n, const ParamSet& p) {
    return {beta_coeff(n, p), alpha_coeff(n, p), gamma_coeff(n - 1, p)};
}

std::vector<Poly> generate_by_recurrence(int n_max, const ParamSet& p) {
    if (n_max < 0) throw std::invalid_argument("negative n_max");
    std::vector<Poly> P;
    P.reserve(static_cast<std::size_t>(n_max) + 1);
    P.push_back(Poly::constant(kOne));
    for (int n = 0; n < n_max; ++n) {
        auto [beta, alpha, gamma] = recurrence_coeffs(n, p);
        Poly next = Poly{-beta, kOne} * P[static_cast<std::size_t>(n)];
        if (n >= 1) next -= P[static_cast<std::size_t>(n - 1)] * alpha;
        if (n >= 2) next -= P[static_cast<std::size_t>(n - 2)] * gamma;
        P.push_back(std::move(next));
    }
    return P;
}

Rational normalization(int n, const ParamSet& p) {
    if (n < 0) throw std::invalid_argument("negative index");
    const Rational &a = p.a(), &b = p.b(), &c = p.c();
    Rational cb1 = c + b + kOne, cb2 = c + b + R(2);
    // (c+b-a+1)_k (c+1)_k (c+b+1)_k
    auto triple = [&](int k) {
        return pochhammer(c + b - a + kOne, k) * pochhammer(c + kOne, k) * pochhammer(cb1, k);
    };
    Rational core = factorial(n) * pochhammer(a + kOne, n) * pochhammer(b + kOne, n);
    int k = n / 2;
    if (n % 2 == 0) {
        if (p.d() == 0) return core / pochhammer(cb1, 3 * k);
        return core * triple(k) / (pochhammer(cb1, 3 * k) * pochhammer(cb2, 3 * k));
    }
    if (p.d() == 0) return -core * triple(k) / (pochhammer(cb1, 3 * k + 1) * pochhammer(cb2, 3 * k + 1));
    return core / pochhammer(cb1, 3 * k + 2);
}

Rational orthogonality_residual(int n, int k, int which, const ParamSet& p) {
    if (n < 0 || k < 0) throw std::invalid_argument("negative index");
    if (which != 0 && which != 1) throw std::invalid_argument("which must be 0 or 1");
    int t = which == 0 ? p.d() : 1 - p.d();
    auto mom = moment_vector(p, t, n + k);
    Rational s(0);
    for (int j = 0; j <= n; ++j) s += tau_coeff(n, j, p) * mom[static_cast<std::size_t>(j + k)];
    return s;
}

Poly derivative_shift_residual(int n, const ParamSet& p) {
    return explicit_poly(n + 1, p).derivative() - explicit_poly(n, p.derivative_shift()) * R(n + 1);
}

ODESpec ode_spec(int n, const ParamSet& p) {
    const Rational &a = p.a(), &b = p.b(), &c = p.c();
    int d = p.d();
    Poly phi{-(a + b + R(3)), kOne};
    Poly psi{(a + kOne) * (b + kOne), R(half_floor(n + 1, -d)) - (c + b + R(2))};
    Rational eps = c + b + kOne + R(half_floor(n, d));
    return {phi, psi, eps};
}

Poly ode_residual(int n, const ParamSet& p) {
    auto [phi, psi, eps] = ode_spec(n, p);
    Poly P = explicit_poly(n, p);
    Poly x = Poly::x();
    return P.derivative(3).shift_up(2) - x * phi * P.derivative(2) + psi * P.derivative() + P * (R(n) * eps);
}

Poly bessel_poly(int n, const Rational& a, const Rational& b) {
    if (!(a > R(-1) && b > R(-1))) throw std::invalid_argument("invalid parameters: need a, b > -1");
    Rational a1 = a + kOne, b1 = b + kOne;
    Poly f = pfq_terminating({R(-n)}, {a1, b1}, Poly::x(), 0);
    Rational s = pochhammer(a1, n) * pochhammer(b1, n);
    return f * ((n % 2) ? -s : s);
}

Poly bessel_derivative_residual(int n, const Rational& a, const Rational& b) {
    return bessel_poly(n + 1, a, b).derivative() - bessel_poly(n, a + kOne, b + kOne) * R(n + 1);
}

Rational confluence_gap(int n, const ParamSet& p, const Rational& c_value) {
    ParamSet q(p.a(), p.b(), c_value, p.d());
    Poly r = bessel_poly(n, p.a(), p.b());
    Rational gap(0), cp(1);
    for (int j = n; j >= 0; --j) {
        Rational diff = (cp * tau_coeff(n, j, q) - r.coeff(j)).abs();
        if (diff > gap) gap = diff;
        cp *= c_value;
    }
    return gap;
}

}  // namespace mops
