#pragma once

#include <string>
#include <vector>

#include "mops/rational.hpp"

namespace mops {

// (a, b, c, d) with a > -1, b > -1, c > max(0, a - b), d in {0, 1}.
class ParamSet {
public:
    ParamSet(Rational a, Rational b, Rational c, int d = 0);

    static bool admissible(const Rational& a, const Rational& b, const Rational& c, int d = 0);

    const Rational& a() const noexcept { return a_; }
    const Rational& b() const noexcept { return b_; }
    const Rational& c() const noexcept { return c_; }
    int d() const noexcept { return d_; }

    ParamSet with_d(int d) const { return ParamSet(a_, b_, c_, d); }
    ParamSet with_c(const Rational& c) const { return ParamSet(a_, b_, c, d_); }
    // (a+1, b+1, c+d, 1-d): the parameters of the derivative family
    ParamSet derivative_shift() const;

    std::string str() const;

    friend bool operator==(const ParamSet&, const ParamSet&) = default;

private:
    Rational a_, b_, c_;
    int d_;
};

// floor((n + d) / 2), valid for negative sums too
inline int half_floor(int n, int d) {
    int s = n + d;
    return s >= 0 ? s / 2 : -((1 - s) / 2);
}

// (a+1)_k (b+1)_k / (c+t+b+1)_k; negative k via the reciprocal Pochhammer extension.
Rational moment(const ParamSet& p, int t, int k);
std::vector<Rational> moment_vector(const ParamSet& p, int t, int k_max);

}  // namespace mops
