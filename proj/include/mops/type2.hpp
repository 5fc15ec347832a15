#pragma once

#include <vector>

#include "mops/moments.hpp"
#include "mops/poly.hpp"
#include "mops/rational.hpp"

namespace mops {

// P_{n+1} = (x - beta) P_n - alpha P_{n-1} - gamma P_{n-2}; gamma here is gamma_{n-1}.
struct RecurrenceTriple {
    Rational beta;
    Rational alpha;
    Rational gamma;
    friend bool operator==(const RecurrenceTriple&, const RecurrenceTriple&) = default;
};

struct ODESpec {
    Poly phi;
    Poly psi;
    Rational eps;
};

// tau_{n,j}: coefficient of x^j in P_n^{(d)}.
Rational tau_coeff(int n, int j, const ParamSet& p);
Poly explicit_poly(int n, const ParamSet& p);
// Same polynomial through the 2F2 representation (used as a cross-check).
Poly explicit_poly_2f2(int n, const ParamSet& p);

Rational beta_coeff(int n, const ParamSet& p);
Rational alpha_coeff(int n, const ParamSet& p);  // alpha_0 = 0
Rational gamma_coeff(int n, const ParamSet& p);  // gamma_n; gamma_0 = 0, gamma_{-1} = 0
RecurrenceTriple recurrence_coeffs(int n, const ParamSet& p);  // (beta_n, alpha_n, gamma_{n-1})

std::vector<Poly> generate_by_recurrence(int n_max, const ParamSet& p);

Rational normalization(int n, const ParamSet& p);
Rational orthogonality_residual(int n, int k, int which, const ParamSet& p);

Poly derivative_shift_residual(int n, const ParamSet& p);
ODESpec ode_spec(int n, const ParamSet& p);
Poly ode_residual(int n, const ParamSet& p);

Poly bessel_poly(int n, const Rational& a, const Rational& b);
Poly bessel_derivative_residual(int n, const Rational& a, const Rational& b);
// max_j |c^{n-j} tau_{n,j}(a,b,c) - [x^j] R_n(x;a,b)| with c = c_value
Rational confluence_gap(int n, const ParamSet& p, const Rational& c_value);

}  // namespace mops
