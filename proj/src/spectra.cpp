#include "mops/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "mops/errors.hpp"
#include "mops/type2.hpp"

namespace mops {

namespace {

constexpr long double kRescaleAt = 1e300L;

long double to_ld(const Rational& r) { return r.to_long_double(); }

// The eigen routines are generic over the scalar: long double for plain
// matrices, __float128 for the Hessenberg cross-check (non-normal, so double
// entries lose about half their digits by n = 30).
using Quad = __float128;

inline long double abs_(long double x) { return std::fabs(x); }
inline Quad abs_(Quad x) { return x < 0 ? -x : x; }
inline long double sqrt_(long double x) { return std::sqrt(x); }
inline Quad sqrt_(Quad x) {
    if (x <= 0) return 0;
    Quad s = std::sqrt(static_cast<long double>(x));
    s = 0.5 * (s + x / s);
    return 0.5 * (s + x / s);
}
template <class T> T eps_();
template <> long double eps_<long double>() { return std::numeric_limits<long double>::epsilon(); }
template <> Quad eps_<Quad>() { return static_cast<Quad>(std::ldexp(1.0L, -112)); }

template <class T>
using Mat = std::vector<std::vector<T>>;

Quad to_quad(const Rational& r) {
    // three double limbs carry well past 113 bits
    Quad sum = 0;
    Rational rest = r;
    for (int i = 0; i < 3; ++i) {
        double h = rest.to_double();
        sum += h;
        rest = rest - Rational(mpq_class(h));
    }
    return sum;
}

template <class T>
void balance(Mat<T>& a) {
    const T radix = 2, sqrdx = radix * radix;
    const std::size_t n = a.size();
    bool done = false;
    while (!done) {
        done = true;
        for (std::size_t i = 0; i < n; ++i) {
            T r = 0, c = 0;
            for (std::size_t j = 0; j < n; ++j)
                if (j != i) {
                    c += abs_(a[j][i]);
                    r += abs_(a[i][j]);
                }
            if (c == 0 || r == 0) continue;
            T g = r / radix, f = 1, s = c + r;
            while (c < g) {
                f *= radix;
                c *= sqrdx;
            }
            g = r * radix;
            while (c > g) {
                f /= radix;
                c /= sqrdx;
            }
            if ((c + r) / f < T(0.95) * s) {
                done = false;
                g = 1 / f;
                for (std::size_t j = 0; j < n; ++j) a[i][j] *= g;
                for (std::size_t j = 0; j < n; ++j) a[j][i] *= f;
            }
        }
    }
}

// Gaussian reduction to upper Hessenberg form with pivoting
template <class T>
void to_hessenberg(Mat<T>& a) {
    const int n = static_cast<int>(a.size());
    for (int m = 1; m < n - 1; ++m) {
        T x = 0;
        int i = m;
        for (int j = m; j < n; ++j)
            if (abs_(a[j][m - 1]) > abs_(x)) {
                x = a[j][m - 1];
                i = j;
            }
        if (i != m) {
            for (int j = m - 1; j < n; ++j) std::swap(a[i][j], a[m][j]);
            for (int j = 0; j < n; ++j) std::swap(a[j][i], a[j][m]);
        }
        if (x == 0) continue;
        for (i = m + 1; i < n; ++i) {
            T y = a[i][m - 1];
            if (y == 0) continue;
            y /= x;
            a[i][m - 1] = y;
            for (int j = m; j < n; ++j) a[i][j] -= y * a[m][j];
            for (int j = 0; j < n; ++j) a[j][m] += y * a[j][i];
        }
    }
    for (int i = 2; i < n; ++i)
        for (int j = 0; j < i - 1; ++j) a[i][j] = 0;
}

template <class T>
T sign_of(T a, T b) { return b >= 0 ? abs_(a) : -abs_(a); }

// Francis double-shift QR on an upper Hessenberg matrix
template <class T>
std::vector<std::complex<double>> hqr(Mat<T>& a) {
    const int n = static_cast<int>(a.size());
    const T eps = eps_<T>();
    std::vector<std::complex<double>> w(n);
    T anorm = 0;
    for (int i = 0; i < n; ++i)
        for (int j = std::max(i - 1, 0); j < n; ++j) anorm += abs_(a[i][j]);

    int nn = n - 1, l = 0;
    T t = 0;
    T p = 0, q = 0, r = 0, s = 0, x = 0, y = 0, z = 0;
    while (nn >= 0) {
        int its = 0;
        do {
            for (l = nn; l > 0; --l) {
                s = abs_(a[l - 1][l - 1]) + abs_(a[l][l]);
                if (s == 0) s = anorm;
                if (abs_(a[l][l - 1]) <= eps * s) {
                    a[l][l - 1] = 0;
                    break;
                }
            }
            x = a[nn][nn];
            if (l == nn) {
                w[nn--] = static_cast<double>(x + t);
            } else {
                y = a[nn - 1][nn - 1];
                T ww = a[nn][nn - 1] * a[nn - 1][nn];
                if (l == nn - 1) {
                    p = T(0.5) * (y - x);
                    q = p * p + ww;
                    z = sqrt_(abs_(q));
                    x += t;
                    if (q >= 0) {
                        z = p + sign_of(z, p);
                        w[nn - 1] = w[nn] = static_cast<double>(x + z);
                        if (z != 0) w[nn] = static_cast<double>(x - ww / z);
                    } else {
                        w[nn] = {static_cast<double>(x + p), static_cast<double>(-z)};
                        w[nn - 1] = std::conj(w[nn]);
                    }
                    nn -= 2;
                } else {
                    if (its == 60) throw NumericError("eigenvalue iteration did not converge", 0, 0);
                    if (its == 10 || its == 20 || its == 40) {
                        t += x;
                        for (int i = 0; i <= nn; ++i) a[i][i] -= x;
                        s = abs_(a[nn][nn - 1]) + abs_(a[nn - 1][nn - 2]);
                        y = x = T(0.75) * s;
                        ww = -T(0.4375) * s * s;
                    }
                    ++its;
                    int m = nn - 2;
                    for (; m >= l; --m) {
                        z = a[m][m];
                        r = x - z;
                        s = y - z;
                        p = (r * s - ww) / a[m + 1][m] + a[m][m + 1];
                        q = a[m + 1][m + 1] - z - r - s;
                        r = a[m + 2][m + 1];
                        s = abs_(p) + abs_(q) + abs_(r);
                        p /= s;
                        q /= s;
                        r /= s;
                        if (m == l) break;
                        T u = abs_(a[m][m - 1]) * (abs_(q) + abs_(r));
                        T v = abs_(p) * (abs_(a[m - 1][m - 1]) + abs_(z) +
                                                        abs_(a[m + 1][m + 1]));
                        if (u <= eps * v) break;
                    }
                    for (int i = m; i < nn - 1; ++i) {
                        a[i + 2][i] = 0;
                        if (i != m) a[i + 2][i - 1] = 0;
                    }
                    for (int k = m; k < nn; ++k) {
                        if (k != m) {
                            p = a[k][k - 1];
                            q = a[k + 1][k - 1];
                            r = 0;
                            if (k + 1 != nn) r = a[k + 2][k - 1];
                            if ((x = abs_(p) + abs_(q) + abs_(r)) != 0) {
                                p /= x;
                                q /= x;
                                r /= x;
                            }
                        }
                        if ((s = sign_of(sqrt_(p * p + q * q + r * r), p)) == 0) continue;
                        if (k == m) {
                            if (l != m) a[k][k - 1] = -a[k][k - 1];
                        } else {
                            a[k][k - 1] = -s * x;
                        }
                        p += s;
                        x = p / s;
                        y = q / s;
                        z = r / s;
                        q /= p;
                        r /= p;
                        for (int j = k; j <= nn; ++j) {
                            p = a[k][j] + q * a[k + 1][j];
                            if (k + 1 != nn) {
                                p += r * a[k + 2][j];
                                a[k + 2][j] -= p * z;
                            }
                            a[k + 1][j] -= p * y;
                            a[k][j] -= p * x;
                        }
                        int mmin = nn < k + 3 ? nn : k + 3;
                        for (int i = l; i <= mmin; ++i) {
                            p = x * a[i][k] + y * a[i][k + 1];
                            if (k + 1 != nn) {
                                p += z * a[i][k + 2];
                                a[i][k + 2] -= p * r;
                            }
                            a[i][k + 1] -= p * q;
                            a[i][k] -= p;
                        }
                    }
                }
            }
        } while (l + 1 < nn);
    }
    return w;
}

int sign_at(const RecurrenceTable& t, int n, long double x) { return eval_recurrence_scaled(t, n, x).sign; }

// root of P_n in (lo, hi) given opposite signs at the ends
double bisect(const RecurrenceTable& t, int n, double lo, double hi, int s_lo, double& err) {
    for (int it = 0; it < 200; ++it) {
        double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        int s = sign_at(t, n, mid);
        if (s == 0) {
            err = 0;
            return mid;
        }
        if (s == s_lo)
            lo = mid;
        else
            hi = mid;
        if (hi - lo <= 1e-15 * hi) break;
    }
    err = 0.5 * (hi - lo);
    return 0.5 * (lo + hi);
}

}  // namespace

RecurrenceTable recurrence_table(const ParamSet& p, int n_max) {
    RecurrenceTable t;
    t.n_max = n_max;
    for (int n = 0; n <= n_max; ++n) {
        auto c = recurrence_coeffs(n, p);
        t.beta.push_back(to_ld(c.beta));
        t.alpha.push_back(to_ld(c.alpha));
        t.gamma.push_back(to_ld(c.gamma));
    }
    return t;
}

long double ScaledValue::value() const { return sign == 0 ? 0.0L : sign * std::exp(log_abs); }

ScaledValue eval_recurrence_scaled(const RecurrenceTable& t, int n, long double x) {
    if (n < 0) throw ParameterError("negative degree");
    if (n > t.n_max + 1) throw ParameterError("recurrence table too short");
    // window (P_{k-2}, P_{k-1}, P_k) sharing the scale exp(shift)
    long double pm2 = 0, pm1 = 0, pk = 1, shift = 0;
    bool rescaled = false;
    for (int k = 0; k < n; ++k) {
        long double next = (x - t.beta[k]) * pk - t.alpha[k] * pm1 - t.gamma[k] * pm2;
        pm2 = pm1;
        pm1 = pk;
        pk = next;
        long double m = std::max({std::fabs(pk), std::fabs(pm1), std::fabs(pm2)});
        if (m > kRescaleAt) {
            pk /= m;
            pm1 /= m;
            pm2 /= m;
            shift += std::log(m);
            rescaled = true;
        }
    }
    ScaledValue v;
    v.rescaled = rescaled;
    if (pk == 0) return v;
    v.sign = pk > 0 ? 1 : -1;
    v.log_abs = std::log(std::fabs(pk)) + shift;
    return v;
}

double eval_recurrence(const ParamSet& p, int n, double x) {
    if (n < 0) throw ParameterError("negative degree");
    auto t = recurrence_table(p, std::max(n - 1, 0));
    auto v = eval_recurrence_scaled(t, n, x);
    return static_cast<double>(v.value());
}

std::vector<ZeroSet> zeros_up_to(const ParamSet& p, int n_max) {
    if (n_max < 1) throw ParameterError("zeros require n >= 1");
    auto t = recurrence_table(p, n_max - 1);
    const double M = family_bound().M;
    std::vector<ZeroSet> out;
    std::vector<double> prev;
    for (int k = 1; k <= n_max; ++k) {
        double upper = M * (k + 1) + 10.0;
        if (!prev.empty()) upper = std::max(upper, 2.0 * prev.back() + 1.0);
        for (int grow = 0; sign_at(t, k, upper) <= 0; ++grow) {
            if (grow > 200) throw InvariantError("interlacing violated");
            upper *= 2.0;
        }
        std::vector<double> pts;
        pts.push_back(0.0);
        pts.insert(pts.end(), prev.begin(), prev.end());
        pts.push_back(upper);

        ZeroSet z;
        z.n = k;
        int s_lo = sign_at(t, k, pts[0]);
        for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
            int s_hi = sign_at(t, k, pts[i + 1]);
            if (s_lo == 0 || s_hi == 0 || s_lo == s_hi) throw InvariantError("interlacing violated");
            double e = 0;
            z.zeros.push_back(bisect(t, k, pts[i], pts[i + 1], s_lo, e));
            z.err.push_back(e);
            s_lo = s_hi;
        }
        prev = z.zeros;
        out.push_back(std::move(z));
    }
    return out;
}

ZeroSet zeros(const ParamSet& p, int n) { return zeros_up_to(p, n).back(); }

bool strictly_interlaced(const ZeroSet& lower, const ZeroSet& upper) {
    if (upper.zeros.size() != lower.zeros.size() + 1) return false;
    for (std::size_t i = 0; i < lower.zeros.size(); ++i)
        if (!(upper.zeros[i] < lower.zeros[i] && lower.zeros[i] < upper.zeros[i + 1])) return false;
    return true;
}

bool zeros_simple(const ZeroSet& z, double rel_gap) {
    if (static_cast<int>(z.zeros.size()) != z.n) return false;
    for (std::size_t i = 0; i < z.zeros.size(); ++i) {
        if (!(z.zeros[i] > 0)) return false;
        if (i > 0 && !(z.zeros[i] - z.zeros[i - 1] > rel_gap * z.zeros[i])) return false;
    }
    return true;
}

std::vector<std::vector<double>> hessenberg(const ParamSet& p, int n) {
    if (n < 1) throw ParameterError("hessenberg requires n >= 1");
    std::vector<std::vector<double>> H(n, std::vector<double>(n, 0.0));
    for (int i = 0; i < n; ++i) {
        auto c = recurrence_coeffs(i, p);
        H[i][i] = c.beta.to_double();
        if (i + 1 < n) H[i][i + 1] = 1.0;
        if (i >= 1) H[i][i - 1] = c.alpha.to_double();
        if (i >= 2) H[i][i - 2] = c.gamma.to_double();
    }
    return H;
}

std::vector<std::complex<double>> eigenvalues(std::vector<std::vector<double>> A) {
    const std::size_t n = A.size();
    for (auto& row : A)
        if (row.size() != n) throw ParameterError("matrix must be square");
    if (n == 0) return {};
    Mat<long double> a(n, std::vector<long double>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = A[i][j];
    balance(a);
    to_hessenberg(a);
    return hqr(a);
}

std::vector<std::complex<double>> hessenberg_eigenvalues(const ParamSet& p, int n) {
    if (n < 1) throw ParameterError("hessenberg requires n >= 1");
    // upper Hessenberg transpose, entries rounded once from the exact values
    Mat<Quad> a(n, std::vector<Quad>(n, 0));
    for (int i = 0; i < n; ++i) {
        auto c = recurrence_coeffs(i, p);
        a[i][i] = to_quad(c.beta);
        if (i + 1 < n) a[i + 1][i] = 1;
        if (i >= 1) a[i - 1][i] = to_quad(c.alpha);
        if (i >= 2) a[i - 2][i] = to_quad(c.gamma);
    }
    balance(a);
    return hqr(a);
}

BoundConstants largest_zero_bound(const Rational& alpha, const Rational& beta, const Rational& gamma) {
    BoundConstants b;
    b.alpha = alpha;
    b.beta = beta;
    b.gamma = gamma;
    b.delta = gamma * gamma - alpha.pow(3) / Rational(27);
    if (gamma.sign() <= 0 || b.delta.sign() <= 0) throw std::domain_error("bound formula inapplicable");
    long double g = gamma.to_long_double();
    long double sd = std::sqrt(b.delta.to_long_double());
    long double tau = std::cbrt(g + sd) + std::cbrt(g - sd);
    // one Newton step on tau^3 - alpha tau - 2 gamma to clean up cancellation
    long double al = alpha.to_long_double();
    tau -= (tau * tau * tau - al * tau - 2 * g) / (3 * tau * tau - al);
    b.tau = static_cast<double>(tau);
    b.M = static_cast<double>(1.5L * tau + beta.to_long_double() + al / (2 * tau));
    return b;
}

BoundConstants family_bound() { return largest_zero_bound(Rational(52, 81), Rational(14, 9), Rational(8, 27)); }

std::vector<ZeroRatioRow> zero_ratio_scan(const ParamSet& p, int n_min, int n_max) {
    if (n_min < 1 || n_min > n_max) throw ParameterError("invalid scan range");
    auto all = zeros_up_to(p, n_max);
    std::vector<ZeroRatioRow> rows;
    for (int n = n_min; n <= n_max; ++n) {
        double xm = all[n - 1].zeros.back();
        rows.push_back({n, xm, xm / n});
    }
    return rows;
}

}  // namespace mops
