#include "mops/symmetry.hpp"

#include "mops/errors.hpp"
#include "mops/type2.hpp"

namespace mops {

namespace {
void check_k(int k) {
    if (k < 0 || k > 2) throw ParameterError("cubic component index must be 0, 1 or 2");
}
}  // namespace

// (a_k, b_k) = (-2/3, -1/3), (1/3, -1/3), (1/3, 2/3); with this ordering
// d_k = a_k - b_k + 1/3 and the composed sequence has beta = alpha = 0
Rational cubic_a(int k) {
    check_k(k);
    return k == 0 ? Rational(-2, 3) : Rational(1, 3);
}

Rational cubic_b(int k) {
    check_k(k);
    return k == 2 ? Rational(2, 3) : Rational(-1, 3);
}

int cubic_d(int k) {
    check_k(k);
    return k == 1 ? 1 : 0;
}

ParamSet CubicCase::params() const {
    Rational a = cubic_a(k), b = cubic_b(k);
    int dk = cubic_d(k);
    Rational c;
    int d;
    if (family == CubicFamily::B1) {
        c = param / Rational(3);
        d = dk;
    } else {
        c = (param - Rational(2)) / Rational(3) + Rational(dk);
        d = 1 - dk;
    }
    if (!ParamSet::admissible(a, b, c, d)) throw ParameterError("parameter below admissibility threshold");
    return ParamSet(a, b, c, d);
}

Poly component_poly(const CubicCase& cc, int n) { return explicit_poly(n, cc.params()); }

std::vector<Poly> compose_threefold(CubicFamily f, const Rational& param, int N) {
    if (N < 0) throw ParameterError("N must be non-negative");
    ParamSet ps[3] = {CubicCase{f, 0, param}.params(), CubicCase{f, 1, param}.params(),
                      CubicCase{f, 2, param}.params()};
    const Poly cube = Poly::monomial(Rational(1), 3);
    std::vector<Poly> out;
    out.reserve(N + 1);
    for (int m = 0; m <= N; ++m) {
        int n = m / 3, k = m % 3;
        out.push_back(explicit_poly(n, ps[k]).compose(cube).shift_up(k));
    }
    return out;
}

std::vector<Rational> threefold_recurrence_check(const std::vector<Poly>& seq) {
    const int N = static_cast<int>(seq.size()) - 1;
    if (N < 3) throw ParameterError("threefold check needs N >= 3");
    const Poly x = Poly::x();
    std::vector<Rational> gammas;
    for (int m = 0; m + 1 <= N; ++m) {
        Poly r = seq[m + 1] - x * seq[m];
        if (m >= 2) {
            const Poly& low = seq[m - 2];
            // r = -gamma_{m-1} P_{m-2}: match the top coefficient, then demand the rest vanish
            Rational g = r.degree() == low.degree() ? -r.leading() / low.leading() : Rational(0);
            r += g * low;
            if (g.sign() <= 0) throw InvariantError("threefold symmetry violated");
            gammas.push_back(g);
        }
        if (!r.is_zero()) throw InvariantError("threefold symmetry violated");
    }
    return gammas;
}

std::vector<Rational> threefold_recurrence_check(CubicFamily f, const Rational& param, int N) {
    return threefold_recurrence_check(compose_threefold(f, param, N));
}

bool threefold_support_ok(const std::vector<Poly>& seq) {
    for (int m = 0; m < static_cast<int>(seq.size()); ++m) {
        const auto& c = seq[m].coeffs();
        for (int j = 0; j < static_cast<int>(c.size()); ++j)
            if (!c[j].is_zero() && (j - m) % 3 != 0) return false;
    }
    return true;
}

}  // namespace mops
