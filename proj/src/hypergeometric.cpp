#include "mops/hypergeometric.hpp"

#include "mops/errors.hpp"

namespace mops {

Rational pochhammer(const Rational& z, int k) {
    if (k < 0) {
        int j = -k;
        Rational den = pochhammer(z - Rational(j), j);
        if (den.is_zero()) throw PoleError("pole in Pochhammer continuation");
        return den.inverse();
    }
    Rational r(1);
    for (int i = 0; i < k; ++i) r *= z + Rational(i);
    return r;
}

Rational factorial(int n) {
    if (n < 0) throw std::invalid_argument("negative factorial");
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return Rational(f);
}

Rational binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return Rational(0);
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(b);
}

namespace {

// term ratio coefficients c_j = prod(upper)_j / (prod(lower)_j j!) for j = 0..n
std::vector<Rational> pfq_coeffs(const std::vector<Rational>& upper, const std::vector<Rational>& lower,
                                 std::size_t idx) {
    if (idx >= upper.size()) throw std::invalid_argument("terminating index out of range");
    const Rational& t = upper[idx];
    if (!t.is_integer() || t.sign() > 0)
        throw std::invalid_argument("terminating parameter must be a nonpositive integer");
    long n = -t.floor_long();
    std::vector<Rational> c;
    c.reserve(static_cast<std::size_t>(n) + 1);
    Rational cur(1);
    c.push_back(cur);
    for (long j = 0; j < n; ++j) {
        Rational num(1), den(static_cast<long>(j + 1));
        for (const auto& u : upper) num *= u + Rational(j);
        for (const auto& l : lower) den *= l + Rational(j);
        if (den.is_zero()) throw PoleError("singular hypergeometric parameter");
        cur = cur * num / den;
        c.push_back(cur);
    }
    return c;
}

std::size_t find_terminating(const std::vector<Rational>& upper) {
    for (std::size_t i = 0; i < upper.size(); ++i)
        if (upper[i].is_integer() && upper[i].sign() <= 0) return i;
    throw std::invalid_argument("series does not terminate");
}

}  // namespace

Poly pfq_terminating(const std::vector<Rational>& upper, const std::vector<Rational>& lower,
                     const Poly& arg, std::size_t term_index) {
    auto c = pfq_coeffs(upper, lower, term_index);
    Poly acc;
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        acc *= arg;
        acc += Poly::constant(*it);
    }
    return acc;
}

Poly pfq_terminating(const std::vector<Rational>& upper, const std::vector<Rational>& lower,
                     const Poly& arg) {
    return pfq_terminating(upper, lower, arg, find_terminating(upper));
}

Rational pfq_terminating_at(const std::vector<Rational>& upper, const std::vector<Rational>& lower,
                            const Rational& z) {
    auto c = pfq_coeffs(upper, lower, find_terminating(upper));
    Rational acc(0);
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
    return acc;
}

Rational minton_value(int n, const Rational& beta, const std::vector<Rational>& f,
                      const std::vector<int>& m) {
    if (f.size() != m.size()) throw std::invalid_argument("f and m differ in length");
    if (n < 0) throw std::invalid_argument("negative n");
    int msum = 0;
    for (int mi : m) {
        if (mi < 0) throw std::invalid_argument("negative m_i");
        msum += mi;
    }
    if (msum > n) throw std::invalid_argument("sum of m_i exceeds n");
    Rational num = factorial(n), den = pochhammer(beta + Rational(1), n);
    for (std::size_t i = 0; i < f.size(); ++i) {
        num *= pochhammer(f[i] - beta, m[i]);
        den *= pochhammer(f[i], m[i]);
    }
    if (den.is_zero()) throw PoleError("singular Minton parameter");
    return num / den;
}

}  // namespace mops
