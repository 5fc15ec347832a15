#pragma once

#include <functional>

#include "mops/moments.hpp"
#include "mops/quadrature.hpp"
#include "mops/type1.hpp"

namespace mops {

// log U(alpha, beta; x) with a relative error estimate; alpha > 0, x > 0
EvalResult tricomi_u_log(double alpha, double beta, double x);
EvalResult tricomi_u(double alpha, double beta, double x);

// W(x; a, b, c+t)
EvalResult weight_eval(const ParamSet& p, int t, double x);
EvalResult weight_eval_log(const ParamSet& p, int t, double x);

// integral of x^k W(x; a, b, c+t) over (0, inf)
EvalResult quad_moment(const ParamSet& p, int t, int k, double rel_tol = 1e-11);

// Truncated fraction for W(c+1)/W(c); err_estimate is the last-step change.
EvalResult nikishin_ratio(const ParamSet& p, double x, int depth);
// Same fraction with '+' links, kept only to show it is the wrong reading.
double nikishin_ratio_plus_form(const ParamSet& p, double x, int depth);
// (c+b+1) U(c+1, a-b+1; x) / U(c, a-b+1; x)
EvalResult weight_ratio(const ParamSet& p, double x);

EvalResult type1_function_eval(const Type1Pair& pair, const ParamSet& p, double x);

// Ridders-extrapolated derivative of order 1 or 2.
EvalResult numeric_derivative(const std::function<double(double)>& f, double x, double h, int order);
// |x U'' + (beta - x) U' - alpha U| with numeric derivatives
double kummer_residual(double alpha, double beta, double x);

// strict sign alternations of f on a geometric grid
int count_sign_changes(const std::function<double(double)>& f, double lo = 1e-6, double hi = 1e3, int points = 4096);

}  // namespace mops
