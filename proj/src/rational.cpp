#include "mops/rational.hpp"

#include <cctype>
#include <cmath>
#include <ostream>

#include "mops/errors.hpp"

namespace mops {

Rational::Rational(long num, long den) : q_(num, den) {
    if (den == 0) throw PoleError("zero denominator");
    q_.canonicalize();
}

Rational::Rational(mpq_class q) : q_(std::move(q)) {
    if (q_.get_den() == 0) throw PoleError("zero denominator");
    q_.canonicalize();
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char ch : s)
        if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    return true;
}

mpz_class parse_int(std::string_view s) { return mpz_class(std::string(s), 10); }

// unsigned decimal: digits[.digits][e[+-]digits]
mpq_class parse_decimal(std::string_view s) {
    std::string_view mant = s, expo;
    if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
        mant = s.substr(0, e);
        expo = s.substr(e + 1);
        if (expo.empty()) throw ParameterError("malformed number");
    }
    std::string_view ip = mant, fp;
    if (auto dot = mant.find('.'); dot != std::string_view::npos) {
        ip = mant.substr(0, dot);
        fp = mant.substr(dot + 1);
    }
    if (ip.empty() && fp.empty()) throw ParameterError("malformed number");
    if ((!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp)))
        throw ParameterError("malformed number");
    std::string digits = std::string(ip) + std::string(fp);
    long scale = -static_cast<long>(fp.size());
    if (!expo.empty()) {
        bool neg = false;
        if (expo[0] == '+' || expo[0] == '-') {
            neg = expo[0] == '-';
            expo.remove_prefix(1);
        }
        if (!all_digits(expo) || expo.size() > 6) throw ParameterError("malformed number");
        long e = std::stol(std::string(expo));
        scale += neg ? -e : e;
    }
    mpz_class m(digits, 10), p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(scale)));
    mpq_class q = scale >= 0 ? mpq_class(m * p) : mpq_class(m, p);
    q.canonicalize();
    return q;
}

}  // namespace

Rational Rational::parse(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    if (s.empty()) throw ParameterError("empty number");
    bool neg = false;
    if (s[0] == '+' || s[0] == '-') {
        neg = s[0] == '-';
        s.remove_prefix(1);
    }
    mpq_class q;
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        auto n = s.substr(0, slash), d = s.substr(slash + 1);
        if (!all_digits(n) || !all_digits(d)) throw ParameterError("malformed fraction");
        mpz_class dz = parse_int(d);
        if (dz == 0) throw ParameterError("zero denominator");
        q = mpq_class(parse_int(n), dz);
        q.canonicalize();
    } else {
        q = parse_decimal(s);
    }
    if (neg) q = -q;
    return Rational(q);
}

long double Rational::to_long_double() const {
    // hi + lo split; fine while the value stays inside double range
    mpf_class n(q_.get_num(), 128), d(q_.get_den(), 128);
    mpf_class r(n / d, 128);
    long exp = 0;
    double m = mpf_get_d_2exp(&exp, r.get_mpf_t());
    mpf_class rem(r - mpf_class(std::ldexp(m, static_cast<int>(exp)), 128), 128);
    return static_cast<long double>(std::ldexp(m, static_cast<int>(exp))) +
           static_cast<long double>(rem.get_d());
}

long Rational::floor_long() const {
    mpz_class f;
    mpz_fdiv_q(f.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
    if (!f.fits_slong_p()) throw std::overflow_error("floor out of range");
    return f.get_si();
}

std::string Rational::str() const {
    if (q_.get_den() == 1) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(q_))); }

Rational Rational::inverse() const {
    if (is_zero()) throw PoleError("inverse of zero");
    return Rational(mpq_class(1 / q_));
}

Rational Rational::pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), q_.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(d.get_mpz_t(), q_.get_den_mpz_t(), static_cast<unsigned long>(e));
    return Rational(mpq_class(n, d));
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw PoleError("division by zero");
    q_ /= o.q_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace mops
