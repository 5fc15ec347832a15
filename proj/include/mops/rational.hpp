#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace mops {

// Canonical reduced fraction on top of mpq_class.
class Rational {
public:
    Rational() = default;
    template <std::integral T>
    Rational(T v) : q_(static_cast<long>(v)) {}  // NOLINT implicit
    Rational(long num, long den);
    explicit Rational(mpq_class q);
    explicit Rational(const mpz_class& z) : q_(z) {}

    // "7", "-3/4", "1.25", "-0.5", ".5", "2e-3" (decimal exponent allowed).
    static Rational parse(std::string_view s);

    const mpq_class& raw() const noexcept { return q_; }
    mpz_class num() const { return q_.get_num(); }
    mpz_class den() const { return q_.get_den(); }

    bool is_zero() const noexcept { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const noexcept { return sgn(q_); }
    double to_double() const { return q_.get_d(); }
    long double to_long_double() const;
    // Exact floor; value must fit in long.
    long floor_long() const;
    std::string str() const;

    Rational abs() const;
    Rational inverse() const;  // throws PoleError on zero
    Rational pow(int e) const;

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational x, const Rational& y) { return x += y; }
    friend Rational operator-(Rational x, const Rational& y) { return x -= y; }
    friend Rational operator*(Rational x, const Rational& y) { return x *= y; }
    friend Rational operator/(Rational x, const Rational& y) { return x /= y; }
    Rational operator-() const { return Rational(mpq_class(-q_)); }

    friend bool operator==(const Rational& x, const Rational& y) { return x.q_ == y.q_; }
    friend std::strong_ordering operator<=>(const Rational& x, const Rational& y) {
        int c = cmp(x.q_, y.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    mpq_class q_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

inline Rational max(const Rational& x, const Rational& y) { return x < y ? y : x; }
inline Rational min(const Rational& x, const Rational& y) { return y < x ? y : x; }

}  // namespace mops
