#pragma once

#include <functional>

namespace mops {

struct EvalResult {
    double value = 0.0;
    double err_estimate = 0.0;
};

struct QuadOptions {
    double abs_tol = 0.0;
    double rel_tol = 1e-12;
    int max_intervals = 2000;
    int initial_panels = 1;
};

// Globally adaptive Gauss-Kronrod (7/15) on a finite [lo, hi].
// On failure throws NumericError("quadrature tolerance not met") carrying the best estimate.
EvalResult integrate(const std::function<double(double)>& f, double lo, double hi, const QuadOptions& opt = {});

}  // namespace mops
