#pragma once

#include <complex>
#include <vector>

#include "mops/moments.hpp"
#include "mops/rational.hpp"

namespace mops {

// Recurrence coefficients in floating point; gamma[n] holds gamma_{n-1}.
struct RecurrenceTable {
    std::vector<long double> beta, alpha, gamma;
    int n_max = -1;
};
RecurrenceTable recurrence_table(const ParamSet& p, int n_max);

// sign * exp(log_abs); sign 0 means an exact zero
struct ScaledValue {
    int sign = 0;
    long double log_abs = 0;
    bool rescaled = false;
    long double value() const;
};

double eval_recurrence(const ParamSet& p, int n, double x);
ScaledValue eval_recurrence_scaled(const RecurrenceTable& t, int n, long double x);

struct ZeroSet {
    std::vector<double> zeros;
    int n = 0;
    std::vector<double> err;  // bracket half-widths at termination
};

// Zeros of P_1 .. P_{n_max}, each level bracketed by the previous one.
// Throws InvariantError("interlacing violated") if a bracket loses its sign change.
std::vector<ZeroSet> zeros_up_to(const ParamSet& p, int n_max);
ZeroSet zeros(const ParamSet& p, int n);

bool strictly_interlaced(const ZeroSet& lower, const ZeroSet& upper);
bool zeros_simple(const ZeroSet& z, double rel_gap = 1e-9);

// Dense n x n matrix, row-major; lower Hessenberg with ones on the superdiagonal.
std::vector<std::vector<double>> hessenberg(const ParamSet& p, int n);
// Eigenvalues of a real square matrix (balancing + shifted QR), unsorted.
std::vector<std::complex<double>> eigenvalues(std::vector<std::vector<double>> A);
// Eigenvalues of hessenberg(p, n) computed in quad precision from exact entries.
std::vector<std::complex<double>> hessenberg_eigenvalues(const ParamSet& p, int n);

struct BoundConstants {
    Rational alpha, beta, gamma, delta;
    double tau = 0;
    double M = 0;
};
// Throws std::domain_error("bound formula inapplicable") unless gamma > 0 and delta > 0.
BoundConstants largest_zero_bound(const Rational& alpha, const Rational& beta, const Rational& gamma);
// the constants for this family: alpha = 52/81, beta = 14/9, gamma = 8/27
BoundConstants family_bound();

struct ZeroRatioRow {
    int n;
    double x_max;
    double ratio;
};
std::vector<ZeroRatioRow> zero_ratio_scan(const ParamSet& p, int n_min, int n_max);

}  // namespace mops
