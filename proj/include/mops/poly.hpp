#pragma once

#include <initializer_list>
#include <map>
#include <string>
#include <vector>

#include "mops/rational.hpp"

namespace mops {

// Dense polynomial, coeffs[i] multiplies x^i; trailing zeros are trimmed.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rational> coeffs);
    Poly(std::initializer_list<Rational> coeffs);

    static Poly constant(const Rational& c);
    static Poly monomial(const Rational& c, int k);
    static Poly x() { return monomial(Rational(1), 1); }

    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    bool is_zero() const noexcept { return c_.empty(); }
    const std::vector<Rational>& coeffs() const noexcept { return c_; }
    Rational coeff(int i) const;
    Rational leading() const;

    Poly derivative(int order = 1) const;
    Rational operator()(const Rational& x) const;
    double eval(double x) const;
    long double eval(long double x) const;
    // p(q(x))
    Poly compose(const Poly& inner) const;
    // p(t x)
    Poly scale_arg(const Rational& t) const;
    // x^k p(x)
    Poly shift_up(int k) const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    Poly& operator*=(const Rational& s);

    friend Poly operator+(Poly p, const Poly& q) { return p += q; }
    friend Poly operator-(Poly p, const Poly& q) { return p -= q; }
    friend Poly operator*(Poly p, const Poly& q) { return p *= q; }
    friend Poly operator*(Poly p, const Rational& s) { return p *= s; }
    friend Poly operator*(const Rational& s, Poly p) { return p *= s; }
    Poly operator-() const;

    friend bool operator==(const Poly&, const Poly&) = default;

    std::string str() const;

private:
    void trim();
    std::vector<Rational> c_;
};

// Sparse Laurent polynomial; exponents may be negative, zero coefficients never stored.
class LaurentPoly {
public:
    LaurentPoly() = default;
    explicit LaurentPoly(const Poly& p);
    static LaurentPoly monomial(const Rational& c, int k);

    bool is_zero() const noexcept { return t_.empty(); }
    const std::map<int, Rational>& terms() const noexcept { return t_; }
    Rational coeff(int k) const;
    int min_exponent() const;  // undefined on zero; throws
    int max_exponent() const;
    bool has_negative_powers() const { return !t_.empty() && t_.begin()->first < 0; }
    Poly to_poly() const;  // throws InvariantError on negative powers

    LaurentPoly derivative() const;
    LaurentPoly shift(int k) const;  // x^k f
    double eval(double x) const;

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);
    LaurentPoly& operator*=(const Rational& s);
    void add_term(int k, const Rational& c);

    friend LaurentPoly operator+(LaurentPoly p, const LaurentPoly& q) { return p += q; }
    friend LaurentPoly operator-(LaurentPoly p, const LaurentPoly& q) { return p -= q; }
    friend LaurentPoly operator*(LaurentPoly p, const LaurentPoly& q) { return p *= q; }
    friend LaurentPoly operator*(LaurentPoly p, const Rational& s) { return p *= s; }
    friend LaurentPoly operator*(const Rational& s, LaurentPoly p) { return p *= s; }
    LaurentPoly operator-() const;

    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

    std::string str() const;

private:
    std::map<int, Rational> t_;
};

}  // namespace mops
