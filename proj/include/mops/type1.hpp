#pragma once

#include <vector>

#include "mops/moments.hpp"
#include "mops/poly.hpp"

namespace mops {

// Q_n = A W(c+d) + B W(c+1-d)
struct Type1Pair {
    Poly A;
    Poly B;
    int n = 0;
    friend bool operator==(const Type1Pair&, const Type1Pair&) = default;
};

// degree caps on the step line: deg A <= floor((n-1)/2), deg B <= floor(n/2) - 1
inline int type1_size_a(int n) { return (n + 1) / 2; }
inline int type1_size_b(int n) { return n / 2; }

// Solves M x = rhs over the rationals by fraction-free elimination.
// Throws InvariantError("non-normal index") when M is singular.
std::vector<Rational> solve_exact(const std::vector<std::vector<Rational>>& M, const std::vector<Rational>& rhs);

Type1Pair type1_solve(int n, const ParamSet& p);

// mult * W(x; a+s, b+s, c+t) relative to a base (a, b, c)
struct WeightTerm {
    int s = 0;
    int t = 0;
    LaurentPoly mult;
};

// coeff0 W(c) + coeff1 W(c+1) + sum of pending terms
struct WeightCombo {
    ParamSet base;
    LaurentPoly coeff0;
    LaurentPoly coeff1;
    std::vector<WeightTerm> pending;

    explicit WeightCombo(ParamSet p) : base(std::move(p)) {}
    static WeightCombo term(const ParamSet& p, int s, int t, LaurentPoly mult);

    bool reduced() const { return pending.empty(); }
    // only meaningful once reduced
    bool is_zero() const { return pending.empty() && coeff0.is_zero() && coeff1.is_zero(); }

    WeightCombo& operator+=(const WeightCombo& o);
    WeightCombo& operator-=(const WeightCombo& o);
    WeightCombo& operator*=(const LaurentPoly& f);
    WeightCombo& operator*=(const Rational& s);
};

WeightCombo operator+(WeightCombo x, const WeightCombo& y);
WeightCombo operator-(WeightCombo x, const WeightCombo& y);
WeightCombo operator*(const LaurentPoly& f, WeightCombo x);
WeightCombo operator*(const Rational& s, WeightCombo x);

// One (a,b) step down: W(a+s, b+s, c+t) -> factor * x * W(a+s-1, b+s-1, c+t).
WeightTerm wa_ab_shift(const WeightTerm& src, const ParamSet& base);
// Lowers every pending term into span{W(c), W(c+1)}; s > 0 terms are ab-shifted first.
WeightCombo wa_c_reduce(const WeightCombo& combo);
// Exact derivative of a reduced combo (reduces first if needed).
WeightCombo wa_derive(const WeightCombo& combo);

// x^2 W'' + (x - (a+b-1)) x W' + (ab - (c+b-1) x) W, reduced
WeightCombo weight_ode_residual(const ParamSet& p);

// A W(c+d) + B W(c+1-d) as a reduced combo over p
WeightCombo type1_combo(const Type1Pair& q, const ParamSet& p);

Type1Pair rodrigues_type1(int n, const ParamSet& p);

// D[Q_n^{(1-d)}(a+1,b+1,c+d)] + n Q_{n+1}^{(d)}(a,b,c) from explicit pairs, reduced
WeightCombo type1_derivative_shift_residual(int n, const ParamSet& p, const Type1Pair& shifted,
                                            const Type1Pair& next);
bool type1_derivative_shift_check(int n, const ParamSet& p);

}  // namespace mops
