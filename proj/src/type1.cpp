#include "mops/type1.hpp"

#include <stdexcept>

#include "mops/errors.hpp"
#include "mops/hypergeometric.hpp"

namespace mops {

namespace {
const Rational kOne(1);
Rational R(long v) { return Rational(v); }
LaurentPoly L(const Rational& c, int k = 0) { return LaurentPoly::monomial(c, k); }
}  // namespace

std::vector<Rational> solve_exact(const std::vector<std::vector<Rational>>& M, const std::vector<Rational>& rhs) {
    const std::size_t n = M.size();
    if (rhs.size() != n) throw std::invalid_argument("rhs size mismatch");
    // integer augmented matrix, each row scaled by the lcm of its denominators
    std::vector<std::vector<mpz_class>> A(n, std::vector<mpz_class>(n + 1));
    for (std::size_t i = 0; i < n; ++i) {
        if (M[i].size() != n) throw std::invalid_argument("matrix is not square");
        mpz_class l = 1;
        for (std::size_t j = 0; j <= n; ++j) {
            const Rational& v = j < n ? M[i][j] : rhs[i];
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.raw().get_den_mpz_t());
        }
        for (std::size_t j = 0; j <= n; ++j) {
            const Rational& v = j < n ? M[i][j] : rhs[i];
            A[i][j] = v.raw().get_num() * (l / v.raw().get_den());
        }
    }
    mpz_class prev = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && A[piv][k] == 0) ++piv;
        if (piv == n) throw InvariantError("non-normal index");
        if (piv != k) std::swap(A[piv], A[k]);
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j <= n; ++j) {
                mpz_class v = A[i][j] * A[k][k] - A[i][k] * A[k][j];
                mpz_divexact(A[i][j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
            }
            A[i][k] = 0;
        }
        prev = A[k][k];
    }
    std::vector<Rational> x(n);
    for (std::size_t ii = n; ii-- > 0;) {
        Rational s(A[ii][n]);
        for (std::size_t j = ii + 1; j < n; ++j) s -= Rational(A[ii][j]) * x[j];
        x[ii] = s / Rational(A[ii][ii]);
    }
    return x;
}

Type1Pair type1_solve(int n, const ParamSet& p) {
    if (n < 1) throw std::invalid_argument("type I index must be >= 1");
    int na = type1_size_a(n), nb = type1_size_b(n);
    auto mA = moment_vector(p, p.d(), n + na);
    auto mB = moment_vector(p, 1 - p.d(), n + nb);
    std::vector<std::vector<Rational>> M(static_cast<std::size_t>(n));
    std::vector<Rational> rhs(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        auto& row = M[static_cast<std::size_t>(k)];
        for (int i = 0; i < na; ++i) row.push_back(mA[static_cast<std::size_t>(i + k)]);
        for (int i = 0; i < nb; ++i) row.push_back(mB[static_cast<std::size_t>(i + k)]);
    }
    rhs.back() = kOne;
    auto sol = solve_exact(M, rhs);
    std::vector<Rational> a(sol.begin(), sol.begin() + na), b(sol.begin() + na, sol.end());
    return {Poly(a), Poly(b), n};
}

// ------------------------------------------------------------ weight algebra

WeightCombo WeightCombo::term(const ParamSet& p, int s, int t, LaurentPoly mult) {
    WeightCombo w(p);
    if (!mult.is_zero()) w.pending.push_back({s, t, std::move(mult)});
    return w;
}

namespace {
void check_base(const WeightCombo& x, const WeightCombo& y) {
    // the basis W(c), W(c+1) does not depend on d
    if (x.base.with_d(0) != y.base.with_d(0))
        throw std::invalid_argument("weight combos over different bases");
}
}  // namespace

WeightCombo& WeightCombo::operator+=(const WeightCombo& o) {
    check_base(*this, o);
    coeff0 += o.coeff0;
    coeff1 += o.coeff1;
    pending.insert(pending.end(), o.pending.begin(), o.pending.end());
    return *this;
}

WeightCombo& WeightCombo::operator-=(const WeightCombo& o) {
    check_base(*this, o);
    coeff0 -= o.coeff0;
    coeff1 -= o.coeff1;
    for (const auto& t : o.pending) pending.push_back({t.s, t.t, -t.mult});
    return *this;
}

WeightCombo& WeightCombo::operator*=(const LaurentPoly& f) {
    coeff0 *= f;
    coeff1 *= f;
    for (auto& t : pending) t.mult *= f;
    return *this;
}

WeightCombo& WeightCombo::operator*=(const Rational& s) { return *this *= L(s); }

WeightCombo operator+(WeightCombo x, const WeightCombo& y) { return x += y; }
WeightCombo operator-(WeightCombo x, const WeightCombo& y) { return x -= y; }
WeightCombo operator*(const LaurentPoly& f, WeightCombo x) { return x *= f; }
WeightCombo operator*(const Rational& s, WeightCombo x) { return x *= s; }

WeightTerm wa_ab_shift(const WeightTerm& src, const ParamSet& base) {
    if (src.s <= 0) throw std::invalid_argument("term is already at the base (a,b) level");
    // W(a'+1, b'+1, c') = (c'+b'+1)/((a'+1)(b'+1)) x W(a', b', c')
    Rational a1 = base.a() + R(src.s), b1 = base.b() + R(src.s);
    Rational cp = base.c() + R(src.t);
    Rational f = (cp + b1) / (a1 * b1);
    return {src.s - 1, src.t, src.mult * L(f, 1)};
}

WeightCombo wa_c_reduce(const WeightCombo& combo) {
    const ParamSet& p = combo.base;
    const Rational &a = p.a(), &b = p.b(), &c = p.c();
    WeightCombo out(p);
    out.coeff0 = combo.coeff0;
    out.coeff1 = combo.coeff1;
    // basis[t] = (u, v) with W(c+t) = u W(c) + v W(c+1)
    std::vector<std::pair<LaurentPoly, LaurentPoly>> basis{{L(kOne), LaurentPoly()}, {LaurentPoly(), L(kOne)}};
    auto expand = [&](int t) {
        while (static_cast<int>(basis.size()) <= t) {
            int tt = static_cast<int>(basis.size());
            Rational C = c + R(tt - 2);
            Rational kappa = (C + b + R(2)) / ((C + kOne) * (C + b - a + kOne));
            LaurentPoly lin = L(kOne, 1) + L(R(2) * C + b - a + kOne);
            LaurentPoly m0 = L(-(C + b + kOne));
            const auto& w1 = basis[static_cast<std::size_t>(tt - 1)];
            const auto& w0 = basis[static_cast<std::size_t>(tt - 2)];
            basis.emplace_back(kappa * (lin * w1.first + m0 * w0.first), kappa * (lin * w1.second + m0 * w0.second));
        }
        return basis[static_cast<std::size_t>(t)];
    };
    for (WeightTerm term : combo.pending) {
        if (term.t < 0) throw std::invalid_argument("negative c-offset in weight term");
        while (term.s > 0) term = wa_ab_shift(term, p);
        if (term.s < 0) throw std::invalid_argument("negative (a,b) shift in weight term");
        auto [u, v] = expand(term.t);
        out.coeff0 += term.mult * u;
        out.coeff1 += term.mult * v;
    }
    return out;
}

WeightCombo wa_derive(const WeightCombo& combo) {
    WeightCombo w = combo.reduced() ? combo : wa_c_reduce(combo);
    const ParamSet& p = w.base;
    const Rational &a = p.a(), &b = p.b(), &c = p.c();
    const LaurentPoly &f0 = w.coeff0, &f1 = w.coeff1;
    // x W'(c)   = -(x + c - a) W(c) + c(c+b-a)/(c+b+1) W(c+1)
    // x W'(c+1) = (c+b) W(c+1) - (c+b+1) W(c)
    WeightCombo out(p);
    out.coeff0 = f0.derivative() - f0 * (L(kOne) + L(c - a, -1)) - f1 * L(c + b + kOne, -1);
    out.coeff1 = f1.derivative() + f0 * L(c * (c + b - a) / (c + b + kOne), -1) + f1 * L(c + b, -1);
    return out;
}

WeightCombo weight_ode_residual(const ParamSet& p) {
    const Rational &a = p.a(), &b = p.b(), &c = p.c();
    WeightCombo W(p);
    W.coeff0 = L(kOne);
    WeightCombo W1 = wa_derive(W), W2 = wa_derive(W1);
    LaurentPoly x = L(kOne, 1);
    return L(kOne, 2) * W2 + (x - L(a + b - kOne)) * x * W1 + (L(a * b) - L(c + b - kOne, 1)) * W;
}

WeightCombo type1_combo(const Type1Pair& q, const ParamSet& p) {
    WeightCombo w(p);
    LaurentPoly A(q.A), B(q.B);
    if (p.d() == 0) {
        w.coeff0 = A;
        w.coeff1 = B;
    } else {
        w.coeff0 = B;
        w.coeff1 = A;
    }
    return w;
}

Type1Pair rodrigues_type1(int n, const ParamSet& p) {
    if (n < 1) throw std::invalid_argument("type I index must be >= 1");
    WeightCombo w = wa_c_reduce(WeightCombo::term(p, n - 1, half_floor(n, p.d()), L(kOne)));
    for (int i = 0; i < n - 1; ++i) w = wa_c_reduce(wa_derive(w));
    Rational scale = factorial(n - 1).inverse();
    if ((n - 1) % 2) scale = -scale;
    w *= scale;
    if (w.coeff0.has_negative_powers() || w.coeff1.has_negative_powers()) throw InvariantError("reduction failure");
    Poly c0 = w.coeff0.to_poly(), c1 = w.coeff1.to_poly();
    return p.d() == 0 ? Type1Pair{c0, c1, n} : Type1Pair{c1, c0, n};
}

WeightCombo type1_derivative_shift_residual(int n, const ParamSet& p, const Type1Pair& shifted,
                                            const Type1Pair& next) {
    int d = p.d();
    // shifted pair lives on (a+1, b+1, c+d) with d' = 1-d: A W(a+1,b+1,c+1) + B W(a+1,b+1,c+2d)
    WeightCombo lhs = WeightCombo::term(p, 1, 1, LaurentPoly(shifted.A)) +
                      WeightCombo::term(p, 1, 2 * d, LaurentPoly(shifted.B));
    WeightCombo rhs = type1_combo(next, p);
    return wa_derive(wa_c_reduce(lhs)) + R(n) * rhs;
}

bool type1_derivative_shift_check(int n, const ParamSet& p) {
    if (n < 1) throw std::invalid_argument("type I index must be >= 1");
    auto shifted = type1_solve(n, p.derivative_shift());
    auto next = type1_solve(n + 1, p);
    return type1_derivative_shift_residual(n, p, shifted, next).is_zero();
}

}  // namespace mops
