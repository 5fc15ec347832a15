#include "mops/numweights.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "mops/errors.hpp"

namespace mops {

namespace {

double softplus(double u) { return u > 30 ? u + std::log1p(std::exp(-u)) : std::log1p(std::exp(u)); }

}  // namespace

// U = 1/Gamma(alpha) * int_R exp(alpha u + (beta-alpha-1) log(1+e^u) - x e^u) du, t = e^u
EvalResult tricomi_u_log(double alpha, double beta, double x) {
    if (!(alpha > 0) || !(x > 0) || !std::isfinite(beta)) throw std::domain_error("tricomi_u needs alpha > 0, x > 0");
    const double g = beta - alpha - 1;
    auto lf = [&](double u) { return alpha * u + g * softplus(u) - x * std::exp(u); };
    // locate the peak on a coarse grid; the exponent is unimodal in practice
    double u_hi_guess = std::log(std::max(1.0, 60.0 + std::fabs(g)) / x) + 2.0;
    double u_lo_guess = -60.0 / alpha - 2.0;
    double best_u = 0, best = -std::numeric_limits<double>::infinity();
    const int n_scan = 96;
    for (int i = 0; i <= n_scan; ++i) {
        double u = u_lo_guess + (u_hi_guess - u_lo_guess) * i / n_scan;
        double v = lf(u);
        if (v > best) {
            best = v;
            best_u = u;
        }
    }
    const double drop = 48.0;
    double lo = best_u, hi = best_u;
    while (lf(lo) > best - drop) lo -= 1.0;
    while (lf(hi) > best - drop) hi += 0.5;
    // analytic in a strip around the real u-axis: the trapezoid rule converges geometrically
    auto f = [&](double u) { return std::exp(lf(u) - best); };
    double h = 0.5;
    int n = static_cast<int>(std::ceil((hi - lo) / h));
    double sum = 0.5 * (f(lo) + f(lo + n * h));
    for (int i = 1; i < n; ++i) sum += f(lo + i * h);
    double T = h * sum, err = std::numeric_limits<double>::infinity();
    for (int level = 0; level < 8; ++level) {
        for (int i = 0; i < n; ++i) sum += f(lo + (i + 0.5) * h);
        n *= 2;
        h *= 0.5;
        double Tn = h * sum;
        err = std::fabs(Tn - T);
        T = Tn;
        // halving h roughly squares the error, so a 1e-8 step change leaves ~1e-16 behind
        if (err <= 1e-8 * T) break;
    }
    if (!(err <= 1e-8 * T)) throw NumericError("quadrature tolerance not met", T, err);
    EvalResult I{T, std::max(10 * err * err / T, 4e-16 * T)};
    double val = best + std::log(I.value) - std::lgamma(alpha);
    return {val, I.err_estimate / I.value + 1e-15};
}

EvalResult tricomi_u(double alpha, double beta, double x) {
    auto r = tricomi_u_log(alpha, beta, x);
    double v = std::exp(r.value);
    return {v, v * r.err_estimate};
}

EvalResult weight_eval_log(const ParamSet& p, int t, double x) {
    if (!(x > 0)) throw std::domain_error("weight needs x > 0");
    double a = p.a().to_double(), b = p.b().to_double(), c = p.c().to_double() + t;
    auto u = tricomi_u_log(c, a - b + 1, x);
    double lw = std::lgamma(c + b + 1) - std::lgamma(a + 1) - std::lgamma(b + 1) - x + a * std::log(x) + u.value;
    return {lw, u.err_estimate};
}

EvalResult weight_eval(const ParamSet& p, int t, double x) {
    auto r = weight_eval_log(p, t, x);
    double v = std::exp(r.value);
    return {v, v * r.err_estimate};
}

EvalResult quad_moment(const ParamSet& p, int t, int k, double rel_tol) {
    if (k < 0) throw std::invalid_argument("quad_moment needs k >= 0");
    double a = p.a().to_double(), b = p.b().to_double();
    // x = v^P flattens the x^{min(a,b)} endpoint behaviour
    double P = 1.0 / (1.0 + std::min({a, b, 0.0}));
    auto head = [&](double v) {
        double x = std::pow(v, P);
        double lw = weight_eval_log(p, t, x).value;
        return P * std::exp(lw + k * std::log(x) + (P - 1) * std::log(v));
    };
    auto tail = [&](double s) {
        double om = 1.0 - s;
        double x = 1.0 + s / om;
        double lw = weight_eval_log(p, t, x).value;
        return std::exp(lw + k * std::log(x) - 2 * std::log(om));
    };
    QuadOptions opt;
    opt.rel_tol = rel_tol * 0.25;
    opt.initial_panels = 4;
    // the total is known to be O(moment); give each half an absolute share
    EvalResult h, tl;
    try {
        tl = integrate(tail, 0.0, 1.0, opt);
        opt.abs_tol = rel_tol * 0.25 * std::fabs(tl.value);
        h = integrate(head, 0.0, 1.0, opt);
    } catch (const NumericError& e) {
        throw NumericError("quadrature tolerance not met", e.best_estimate(), e.error_estimate());
    }
    return {h.value + tl.value, h.err_estimate + tl.err_estimate};
}

EvalResult nikishin_ratio(const ParamSet& p, double x, int depth) {
    if (depth < 1) throw std::invalid_argument("depth must be >= 1");
    if (!(x > 0)) throw std::domain_error("nikishin_ratio needs x > 0");
    double a = p.a().to_double(), b = p.b().to_double(), c = p.c().to_double();
    auto num = [&](int j) { return (c + j - 1) * (c + b - a + j - 1); };
    auto den = [&](int j) { return x + 2 * c + b - a + 2 * j - 1; };
    auto eval = [&](int N) {
        double v = den(N);
        for (int j = N - 1; j >= 1; --j) v = den(j) - num(j + 1) / v;
        // a_1 = c(c+b-a) cancels the prefactor's denominator
        return (c + b + 1) / v;
    };
    double f = eval(depth);
    double err = depth > 1 ? std::fabs(f - eval(depth - 1)) : std::fabs(f);
    return {f, err};
}

double nikishin_ratio_plus_form(const ParamSet& p, double x, int depth) {
    double a = p.a().to_double(), b = p.b().to_double(), c = p.c().to_double();
    double v = x + 2 * c + b - a + 2 * depth - 1;
    for (int j = depth - 1; j >= 1; --j) v = (x + 2 * c + b - a + 2 * j - 1) + (c + j) * (c + b - a + j) / v;
    return (c + b + 1) / v;
}

EvalResult weight_ratio(const ParamSet& p, double x) {
    double a = p.a().to_double(), b = p.b().to_double(), c = p.c().to_double();
    auto u1 = tricomi_u_log(c + 1, a - b + 1, x), u0 = tricomi_u_log(c, a - b + 1, x);
    double r = (c + b + 1) * std::exp(u1.value - u0.value);
    return {r, r * (u1.err_estimate + u0.err_estimate)};
}

EvalResult type1_function_eval(const Type1Pair& pair, const ParamSet& p, double x) {
    // factor out W(c+d) so the sign survives underflow of both weights
    auto l0 = weight_eval_log(p, p.d(), x), l1 = weight_eval_log(p, 1 - p.d(), x);
    double ratio = std::exp(l1.value - l0.value);
    double A = pair.A.eval(x), B = pair.B.eval(x);
    double inner = A + B * ratio, scale = std::exp(l0.value);
    double err = (std::fabs(A) * l0.err_estimate + std::fabs(B) * ratio * (l0.err_estimate + l1.err_estimate)) * scale;
    return {inner * scale, err};
}

EvalResult numeric_derivative(const std::function<double(double)>& f, double x, double h, int order) {
    if (order != 1 && order != 2) throw std::invalid_argument("derivative order must be 1 or 2");
    constexpr int kN = 10;
    constexpr double con = 1.4, con2 = con * con;
    double tab[kN][kN];
    auto diff = [&](double hh) {
        if (order == 1) return (f(x + hh) - f(x - hh)) / (2 * hh);
        return (f(x + hh) - 2 * f(x) + f(x - hh)) / (hh * hh);
    };
    double hh = h, best = 0, err = std::numeric_limits<double>::max();
    tab[0][0] = diff(hh);
    best = tab[0][0];
    for (int i = 1; i < kN; ++i) {
        hh /= con;
        tab[0][i] = diff(hh);
        double fac = con2;
        for (int j = 1; j <= i; ++j) {
            tab[j][i] = (tab[j - 1][i] * fac - tab[j - 1][i - 1]) / (fac - 1);
            fac *= con2;
            double e = std::max(std::fabs(tab[j][i] - tab[j - 1][i]), std::fabs(tab[j][i] - tab[j - 1][i - 1]));
            if (e <= err) {
                err = e;
                best = tab[j][i];
            }
        }
        if (std::fabs(tab[i][i] - tab[i - 1][i - 1]) >= 2 * err) break;
    }
    return {best, err};
}

double kummer_residual(double alpha, double beta, double x) {
    auto U = [&](double y) { return tricomi_u(alpha, beta, y).value; };
    double h = 0.2 * x;
    double u = U(x);
    double d1 = numeric_derivative(U, x, h, 1).value;
    double d2 = numeric_derivative(U, x, h, 2).value;
    return std::fabs(x * d2 + (beta - x) * d1 - alpha * u);
}

int count_sign_changes(const std::function<double(double)>& f, double lo, double hi, int points) {
    if (!(lo > 0) || !(hi > lo) || points < 2) throw std::invalid_argument("bad sign-change grid");
    double r = std::log(hi / lo) / (points - 1);
    int changes = 0, last = 0;
    for (int i = 0; i < points; ++i) {
        double v = f(lo * std::exp(r * i));
        int s = (v > 0) - (v < 0);
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

}  // namespace mops
