#include "mops/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

#include "mops/errors.hpp"

namespace mops {

namespace {

// Kronrod nodes on [-1,1]; odd indices are the Gauss points
constexpr double kXk[8] = {0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
                           0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
                           0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
                           0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWk[8] = {0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
                           0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
                           0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
                           0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                           0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
    double lo, hi, value, err;
    bool operator<(const Panel& o) const { return err < o.err; }
};

Panel gk15(const std::function<double(double)>& f, double lo, double hi) {
    double c = 0.5 * (lo + hi), h = 0.5 * (hi - lo);
    double fl[7], fr[7];
    double fc = f(c);
    double k = fc * kWk[7], g = fc * kWg[3];
    for (int i = 0; i < 7; ++i) {
        double dx = h * kXk[i];
        fl[i] = f(c - dx);
        fr[i] = f(c + dx);
        k += kWk[i] * (fl[i] + fr[i]);
        if (i % 2 == 1) g += kWg[i / 2] * (fl[i] + fr[i]);
    }
    // QUADPACK-style error scaling
    double mean = 0.5 * k, asc = kWk[7] * std::fabs(fc - mean);
    for (int i = 0; i < 7; ++i) asc += kWk[i] * (std::fabs(fl[i] - mean) + std::fabs(fr[i] - mean));
    k *= h;
    g *= h;
    asc *= std::fabs(h);
    double err = std::fabs(k - g);
    if (asc != 0.0 && err != 0.0) err = asc * std::min(1.0, std::pow(200.0 * err / asc, 1.5));
    if (!std::isfinite(k)) err = std::numeric_limits<double>::infinity();
    return {lo, hi, k, err};
}

}  // namespace

EvalResult integrate(const std::function<double(double)>& f, double lo, double hi, const QuadOptions& opt) {
    if (!(hi > lo)) return {0.0, 0.0};
    std::priority_queue<Panel> heap;
    double total = 0.0, err = 0.0;
    int np = std::max(1, opt.initial_panels);
    for (int i = 0; i < np; ++i) {
        double a = lo + (hi - lo) * i / np, b = (i + 1 == np) ? hi : lo + (hi - lo) * (i + 1) / np;
        Panel p = gk15(f, a, b);
        total += p.value;
        err += p.err;
        heap.push(p);
    }
    int count = np;
    const double eps = std::numeric_limits<double>::epsilon();
    auto ok = [&] { return err <= std::max(opt.abs_tol, opt.rel_tol * std::fabs(total)); };
    bool converged = ok();
    while (!converged) {
        if (count >= opt.max_intervals) break;
        Panel p = heap.top();
        // interval no longer resolvable in double precision
        if (p.hi - p.lo <= 64 * eps * std::max(std::fabs(p.lo), std::fabs(p.hi))) break;
        heap.pop();
        double mid = 0.5 * (p.lo + p.hi);
        Panel l = gk15(f, p.lo, mid), r = gk15(f, mid, p.hi);
        total += l.value + r.value - p.value;
        err += l.err + r.err - p.err;
        heap.push(l);
        heap.push(r);
        ++count;
        converged = ok();
    }
    // re-sum to shed accumulated cancellation in the running totals
    total = 0.0;
    err = 0.0;
    std::vector<Panel> all;
    all.reserve(heap.size());
    while (!heap.empty()) {
        all.push_back(heap.top());
        heap.pop();
    }
    std::sort(all.begin(), all.end(), [](const Panel& a, const Panel& b) { return std::fabs(a.value) < std::fabs(b.value); });
    for (const auto& p : all) {
        total += p.value;
        err += p.err;
    }
    // floor on the attainable accuracy
    err = std::max(err, 4 * eps * std::fabs(total));
    if (!std::isfinite(total) || !converged) throw NumericError("quadrature tolerance not met", total, err);
    return {total, err};
}

}  // namespace mops
