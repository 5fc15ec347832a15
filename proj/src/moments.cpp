#include "mops/moments.hpp"

#include "mops/errors.hpp"
#include "mops/hypergeometric.hpp"

namespace mops {

bool ParamSet::admissible(const Rational& a, const Rational& b, const Rational& c, int d) {
    return a > Rational(-1) && b > Rational(-1) && c > max(Rational(0), a - b) && (d == 0 || d == 1);
}

ParamSet::ParamSet(Rational a, Rational b, Rational c, int d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(d) {
    if (!admissible(a_, b_, c_, d_)) throw ParameterError("invalid parameters: " + str());
}

ParamSet ParamSet::derivative_shift() const {
    return ParamSet(a_ + Rational(1), b_ + Rational(1), c_ + Rational(d_), 1 - d_);
}

std::string ParamSet::str() const {
    return "(a=" + a_.str() + ", b=" + b_.str() + ", c=" + c_.str() + ", d=" + std::to_string(d_) + ")";
}

Rational moment(const ParamSet& p, int t, int k) {
    Rational one(1);
    return pochhammer(p.a() + one, k) * pochhammer(p.b() + one, k) /
           pochhammer(p.c() + Rational(t) + p.b() + one, k);
}

std::vector<Rational> moment_vector(const ParamSet& p, int t, int k_max) {
    if (k_max < 0) throw std::invalid_argument("k_max must be nonnegative");
    std::vector<Rational> out;
    out.reserve(static_cast<std::size_t>(k_max) + 1);
    Rational m(1);
    out.push_back(m);
    Rational den0 = p.c() + Rational(t) + p.b();
    for (int k = 1; k <= k_max; ++k) {
        m = m * (p.a() + Rational(k)) * (p.b() + Rational(k)) / (den0 + Rational(k));
        out.push_back(m);
    }
    return out;
}

}  // namespace mops
