#include "mops/poly.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "mops/errors.hpp"

namespace mops {

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
Poly::Poly(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::constant(const Rational& c) { return Poly(std::vector<Rational>{c}); }

Poly Poly::monomial(const Rational& c, int k) {
    if (k < 0) throw std::invalid_argument("negative monomial degree");
    std::vector<Rational> v(static_cast<std::size_t>(k) + 1);
    v.back() = c;
    return Poly(std::move(v));
}

Rational Poly::coeff(int i) const {
    if (i < 0 || i > degree()) return Rational(0);
    return c_[static_cast<std::size_t>(i)];
}

Rational Poly::leading() const { return c_.empty() ? Rational(0) : c_.back(); }

Poly Poly::derivative(int order) const {
    if (order <= 0) return *this;
    if (degree() < order) return Poly();
    std::vector<Rational> out(c_.size() - static_cast<std::size_t>(order));
    for (std::size_t i = 0; i < out.size(); ++i) {
        Rational f(1);
        for (int j = 0; j < order; ++j) f *= Rational(static_cast<long>(i) + order - j);
        out[i] = c_[i + static_cast<std::size_t>(order)] * f;
    }
    return Poly(std::move(out));
}

Rational Poly::operator()(const Rational& x) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

double Poly::eval(double x) const {
    double acc = 0.0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->to_double();
    return acc;
}

long double Poly::eval(long double x) const {
    long double acc = 0.0L;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->to_long_double();
    return acc;
}

Poly Poly::compose(const Poly& inner) const {
    Poly acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc *= inner;
        acc += constant(*it);
    }
    return acc;
}

Poly Poly::scale_arg(const Rational& t) const {
    std::vector<Rational> out(c_);
    Rational p(1);
    for (auto& v : out) {
        v *= p;
        p *= t;
    }
    return Poly(std::move(out));
}

Poly Poly::shift_up(int k) const {
    if (is_zero() || k == 0) return *this;
    if (k < 0) throw std::invalid_argument("negative shift");
    std::vector<Rational> out(static_cast<std::size_t>(k));
    out.insert(out.end(), c_.begin(), c_.end());
    return Poly(std::move(out));
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator*=(const Poly& o) {
    if (is_zero() || o.is_zero()) {
        c_.clear();
        return *this;
    }
    std::vector<Rational> out(c_.size() + o.c_.size() - 1);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
    }
    c_ = std::move(out);
    trim();
    return *this;
}

Poly& Poly::operator*=(const Rational& s) {
    if (s.is_zero()) {
        c_.clear();
        return *this;
    }
    for (auto& v : c_) v *= s;
    return *this;
}

Poly Poly::operator-() const {
    Poly r(*this);
    for (auto& v : r.c_) v = -v;
    return r;
}

std::string Poly::str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rational& v = c_[static_cast<std::size_t>(i)];
        if (v.is_zero()) continue;
        if (!first) os << (v.sign() < 0 ? " - " : " + ");
        else if (v.sign() < 0) os << "-";
        first = false;
        Rational a = v.abs();
        if (i == 0 || a != Rational(1)) os << a.str();
        if (i > 0) os << (a != Rational(1) ? "*" : "") << "x" << (i > 1 ? "^" + std::to_string(i) : "");
    }
    return os.str();
}

// ---------------------------------------------------------------- Laurent

LaurentPoly::LaurentPoly(const Poly& p) {
    for (int i = 0; i <= p.degree(); ++i)
        if (!p.coeff(i).is_zero()) t_.emplace(i, p.coeff(i));
}

LaurentPoly LaurentPoly::monomial(const Rational& c, int k) {
    LaurentPoly r;
    r.add_term(k, c);
    return r;
}

Rational LaurentPoly::coeff(int k) const {
    auto it = t_.find(k);
    return it == t_.end() ? Rational(0) : it->second;
}

int LaurentPoly::min_exponent() const {
    if (t_.empty()) throw std::logic_error("min_exponent of zero");
    return t_.begin()->first;
}

int LaurentPoly::max_exponent() const {
    if (t_.empty()) throw std::logic_error("max_exponent of zero");
    return t_.rbegin()->first;
}

Poly LaurentPoly::to_poly() const {
    if (has_negative_powers()) throw InvariantError("reduction failure");
    if (t_.empty()) return Poly();
    std::vector<Rational> v(static_cast<std::size_t>(max_exponent()) + 1);
    for (const auto& [k, c] : t_) v[static_cast<std::size_t>(k)] = c;
    return Poly(std::move(v));
}

void LaurentPoly::add_term(int k, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = t_.try_emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) t_.erase(it);
    }
}

LaurentPoly LaurentPoly::derivative() const {
    LaurentPoly r;
    for (const auto& [k, c] : t_)
        if (k != 0) r.t_.emplace(k - 1, c * Rational(k));
    return r;
}

LaurentPoly LaurentPoly::shift(int k) const {
    LaurentPoly r;
    for (const auto& [e, c] : t_) r.t_.emplace(e + k, c);
    return r;
}

double LaurentPoly::eval(double x) const {
    double s = 0.0;
    for (const auto& [k, c] : t_) s += c.to_double() * std::pow(x, k);
    return s;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [k, c] : o.t_) add_term(k, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [k, c] : o.t_) add_term(k, -c);
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
    LaurentPoly r;
    for (const auto& [i, a] : t_)
        for (const auto& [j, b] : o.t_) r.add_term(i + j, a * b);
    *this = std::move(r);
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Rational& s) {
    if (s.is_zero()) {
        t_.clear();
        return *this;
    }
    for (auto& [k, c] : t_) c *= s;
    return *this;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r(*this);
    for (auto& [k, c] : r.t_) c = -c;
    return r;
}

std::string LaurentPoly::str() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
        if (!first) os << " + ";
        first = false;
        os << "(" << it->second.str() << ")x^" << it->first;
    }
    return os.str();
}

}  // namespace mops
