#pragma once

#include <vector>

#include "mops/moments.hpp"
#include "mops/poly.hpp"
#include "mops/rational.hpp"

namespace mops {

enum class CubicFamily { B1, B2 };

// k-th cubic component of the threefold-symmetric family; param is mu (B1) or rho (B2)
struct CubicCase {
    CubicFamily family;
    int k;
    Rational param;

    // B1: (a_k, b_k, mu/3, d_k); B2: (a_k, b_k, (rho-2)/3 + d_k, 1 - d_k).
    // Throws ParameterError("parameter below admissibility threshold").
    ParamSet params() const;
};

Rational cubic_a(int k);
Rational cubic_b(int k);
int cubic_d(int k);  // 0, 1, 0

Poly component_poly(const CubicCase& cc, int n);

// P_0 .. P_N with P_{3n+k}(x) = x^k P_n^{[k]}(x^3)
std::vector<Poly> compose_threefold(CubicFamily f, const Rational& param, int N);

// Fits P_{m+1} = x P_m - gamma_{m-1} P_{m-2} by coefficient matching and returns
// gamma_1 .. gamma_{N-2}. Throws InvariantError("threefold symmetry violated") on a
// nonzero residual or a non-positive gamma.
std::vector<Rational> threefold_recurrence_check(const std::vector<Poly>& seq);
std::vector<Rational> threefold_recurrence_check(CubicFamily f, const Rational& param, int N);

// every nonzero coefficient of P_m sits at an exponent congruent to m mod 3
bool threefold_support_ok(const std::vector<Poly>& seq);

}  // namespace mops
