#include "mops/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <mutex>
#include <optional>
#include <random>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "mops/errors.hpp"
#include "mops/numweights.hpp"
#include "mops/spectra.hpp"
#include "mops/symmetry.hpp"
#include "mops/type1.hpp"
#include "mops/type2.hpp"

namespace mops {

namespace {

using Json = nlohmann::ordered_json;

struct Config {
    std::string command;
    std::optional<std::string> a, b, c;
    std::optional<int> d;
    std::optional<int> n, n_max;
    std::string suite = "exact";
    std::string format = "json";
    std::string out;
    double tol_rel = 1e-8;
    int depth = 200;
    unsigned seed = 1;
    bool type1 = false;
};

struct Check {
    std::string id;
    bool pass = false;
    double residual = 0;
    double tolerance = 0;
    std::string detail;
};

Json strings(const std::vector<Rational>& v) {
    Json j = Json::array();
    for (const auto& r : v) j.push_back(r.str());
    return j;
}

std::string decimal(double x) {
    std::ostringstream s;
    s.imbue(std::locale::classic());
    s << std::setprecision(17) << x;
    return s.str();
}

Rational parse_param(const std::optional<std::string>& s, const char* fallback) {
    return Rational::parse(s ? *s : std::string(fallback));
}

// the user's ParamSet, or the default grid when no a/b/c was given
std::vector<ParamSet> param_grid(const Config& cfg) {
    std::vector<int> ds = cfg.d ? std::vector<int>{*cfg.d} : std::vector<int>{0, 1};
    std::vector<ParamSet> out;
    if (cfg.a || cfg.b || cfg.c) {
        Rational a = parse_param(cfg.a, "0"), b = parse_param(cfg.b, "0"), c = parse_param(cfg.c, "1");
        for (int d : ds) out.emplace_back(a, b, c, d);
        return out;
    }
    const Rational g[4][3] = {{0, 0, 1}, {Rational(1, 2), Rational(1, 3), 2}, {2, Rational(3, 2), 5},
                              {Rational(-1, 3), Rational(-2, 3), Rational(2, 3)}};
    for (int d : ds)
        for (const auto& row : g) out.emplace_back(row[0], row[1], row[2], d);
    return out;
}

Json params_json(const Config& cfg) {
    Json p = Json::object();
    if (cfg.a) p["a"] = Rational::parse(*cfg.a).str();
    if (cfg.b) p["b"] = Rational::parse(*cfg.b).str();
    if (cfg.c) p["c"] = Rational::parse(*cfg.c).str();
    if (cfg.d) p["d"] = *cfg.d;
    if (cfg.n) p["n"] = *cfg.n;
    if (cfg.n_max) p["n_max"] = *cfg.n_max;
    if (cfg.command == "verify") {
        p["suite"] = cfg.suite;
        p["tol_rel"] = cfg.tol_rel;
        p["depth"] = cfg.depth;
        p["seed"] = cfg.seed;
    }
    return p;
}

// ---- worker pool -----------------------------------------------------------

std::vector<Check> run_all(const std::vector<std::function<Check()>>& tasks) {
    std::vector<Check> out(tasks.size());
    std::size_t next = 0;
    std::mutex mu;
    auto worker = [&] {
        for (;;) {
            std::size_t i;
            {
                std::lock_guard<std::mutex> lk(mu);
                if (next == tasks.size()) return;
                i = next++;
            }
            try {
                out[i] = tasks[i]();
            } catch (const std::exception& e) {
                out[i].pass = false;
                out[i].detail = e.what();
            }
        }
    };
    int n = std::min<int>(worker_count(), static_cast<int>(tasks.size()));
    std::vector<std::thread> pool;
    for (int t = 1; t < n; ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    std::sort(out.begin(), out.end(), [](const Check& x, const Check& y) { return x.id < y.id; });
    return out;
}

// ---- exact suite -----------------------------------------------------------

Check exact_check(std::string id, bool ok, std::string detail = {}) {
    Check c;
    c.id = std::move(id);
    c.pass = ok;
    c.residual = ok ? 0 : 1;
    c.detail = std::move(detail);
    return c;
}

// (beta_n, alpha_n, gamma_{n-1}) from four consecutive polynomials, no closed forms involved
RecurrenceTriple fit_recurrence(const std::vector<Poly>& P, int n) {
    Poly r = Poly::x() * P[n] - P[n + 1];
    RecurrenceTriple t{r.coeff(n), Rational(0), Rational(0)};
    r -= t.beta * P[n];
    if (n >= 1) {
        t.alpha = r.coeff(n - 1);
        r -= t.alpha * P[n - 1];
    }
    if (n >= 2) {
        t.gamma = r.coeff(n - 2);
        r -= t.gamma * P[n - 2];
    }
    if (!r.is_zero()) throw InvariantError("recurrence fit left a residual");
    return t;
}

void exact_tasks(const Config& cfg, std::vector<std::function<Check()>>& tasks) {
    const int N = cfg.n_max.value_or(24);
    for (const auto& p : param_grid(cfg)) {
        std::string tag = p.str();
        tasks.push_back([p, N, tag] {
            bool ok = true;
            for (int n = 0; n <= N && ok; ++n)
                for (int k = 0; 2 * k <= n + 1 && ok; ++k) {
                    if (n >= 2 * k + 1) ok = ok && orthogonality_residual(n, k, 0, p).is_zero();
                    if (n >= 2 * k + 2) ok = ok && orthogonality_residual(n, k, 1, p).is_zero();
                    if (n == 2 * k) ok = ok && orthogonality_residual(n, k, 0, p) == normalization(n, p);
                    if (n == 2 * k + 1) ok = ok && orthogonality_residual(n, k, 1, p) == normalization(n, p);
                }
            return exact_check("exact/orthogonality " + tag, ok);
        });
        tasks.push_back([p, N, tag] {
            auto rec = generate_by_recurrence(N + 1, p);
            bool ok = true;
            for (int n = 0; n <= N + 1; ++n) ok = ok && rec[n] == explicit_poly(n, p);
            for (int n = 0; n <= N; ++n) {
                auto fit = fit_recurrence(rec, n);
                ok = ok && fit == recurrence_coeffs(n, p);
                if (n >= 1) ok = ok && gamma_coeff(n, p).sign() > 0;
            }
            return exact_check("exact/recurrence " + tag, ok);
        });
        tasks.push_back([p, N, tag] {
            bool ok = true;
            for (int n = 0; n <= N; ++n) ok = ok && ode_residual(n, p).is_zero() && derivative_shift_residual(n, p).is_zero();
            return exact_check("exact/ode-and-shift " + tag, ok);
        });
        tasks.push_back([p, N, tag] {
            bool ok = weight_ode_residual(p).is_zero();
            for (int n = 1; n <= std::min(N, 12); ++n) {
                auto s = type1_solve(n, p);
                auto r = rodrigues_type1(n, p);
                ok = ok && s.A == r.A && s.B == r.B && type1_derivative_shift_check(n, p);
            }
            return exact_check("exact/type1 " + tag, ok);
        });
    }
}

// ---- numeric suite ---------------------------------------------------------

Check numeric_check(std::string id, double residual, double tol, std::string detail = {}) {
    Check c;
    c.id = std::move(id);
    c.residual = residual;
    c.tolerance = tol;
    c.pass = std::isfinite(residual) && residual <= tol;
    c.detail = std::move(detail);
    return c;
}

void numeric_tasks(const Config& cfg, std::vector<std::function<Check()>>& tasks) {
    const double tol = cfg.tol_rel;
    const int depth = cfg.depth;
    for (const auto& p : param_grid(cfg)) {
        std::string tag = p.str();
        tasks.push_back([p, tol, tag] {
            double worst = 0;
            for (int t = 0; t < 2; ++t)
                for (int k = 0; k <= 10; ++k) {
                    double want = moment(p, t, k).to_double();
                    worst = std::max(worst, std::fabs(quad_moment(p, t, k).value - want) / std::fabs(want));
                }
            return numeric_check("numeric/moments " + tag, worst, tol);
        });
    }
    std::mt19937_64 rng(cfg.seed);
    std::uniform_real_distribution<double> pick(0.25, 8.0);
    std::vector<double> xs = {0.5, 1.0, 5.0};
    for (int i = 0; i < 3; ++i) xs.push_back(pick(rng));
    tasks.push_back([xs] {
        double worst = 0;
        const double ab[3][2] = {{1, 1}, {5, 1.5}, {2.0 / 3, 2.0 / 3}};
        for (const auto& v : ab)
            for (double x : xs) worst = std::max(worst, kummer_residual(v[0], v[1], x) / tricomi_u(v[0], v[1], x).value);
        return numeric_check("numeric/kummer", worst, 1e-8);
    });
    for (const auto& p : {ParamSet(0, 0, 1, 0), ParamSet(2, Rational(3, 2), 5, 0)}) {
        std::string tag = p.str();
        tasks.push_back([p, xs, depth, tag] {
            double worst = 0;
            for (double x : xs) {
                double want = weight_ratio(p, x).value;
                worst = std::max(worst, std::fabs(nikishin_ratio(p, x, depth).value - want) / std::fabs(want));
            }
            return numeric_check("numeric/nikishin " + tag, worst, 1e-9);
        });
    }
    for (const auto& p : param_grid(cfg)) {
        std::string tag = p.str();
        tasks.push_back([p, tag] {
            const int N = 30;
            auto all = zeros_up_to(p, N);
            bool ok = true;
            for (int n = 1; n <= N; ++n) {
                ok = ok && zeros_simple(all[n - 1]);
                if (n > 1) ok = ok && strictly_interlaced(all[n - 2], all[n - 1]);
            }
            double worst = 0;
            auto ev = hessenberg_eigenvalues(p, N);
            std::vector<double> re;
            for (auto e : ev) {
                worst = std::max(worst, std::fabs(e.imag()));
                re.push_back(e.real());
            }
            std::sort(re.begin(), re.end());
            for (int i = 0; i < N; ++i)
                worst = std::max(worst, std::fabs(re[i] - all[N - 1].zeros[i]) / std::max(1.0, all[N - 1].zeros[i]));
            Check c = numeric_check("numeric/zeros " + tag, worst, 1e-8);
            if (!ok) {
                c.pass = false;
                c.detail = "positivity, simplicity or interlacing failed";
            }
            return c;
        });
    }
}

// ---- symmetry suite --------------------------------------------------------

void symmetry_tasks(const Config& cfg, std::vector<std::function<Check()>>& tasks) {
    const int N = cfg.n_max.value_or(30);
    for (auto [f, par, name] : {std::tuple{CubicFamily::B1, Rational(3), "B1 mu=3"},
                                std::tuple{CubicFamily::B2, Rational(5), "B2 rho=5"}}) {
        std::string id = std::string("symmetry/") + name;
        tasks.push_back([f, par, N, id] {
            auto seq = compose_threefold(f, par, N);
            bool ok = threefold_support_ok(seq);
            threefold_recurrence_check(seq);  // throws on failure
            return exact_check(id, ok, ok ? "" : "coefficient support not congruent mod 3");
        });
    }
}

// ---- output ----------------------------------------------------------------

Json check_json(const Check& c) {
    Json j;
    j["id"] = c.id;
    j["status"] = c.pass ? "pass" : "fail";
    j["residual"] = c.residual;
    if (c.tolerance > 0) j["tolerance"] = c.tolerance;
    if (!c.detail.empty()) j["detail"] = c.detail;
    return j;
}

int emit(const Config& cfg, const std::string& text, std::ostream& out, std::ostream& err) {
    if (cfg.out.empty()) {
        out << text;
        return 0;
    }
    std::ofstream f(cfg.out, std::ios::binary);
    if (!f) {
        err << "error: cannot open " << cfg.out << "\n";
        return 2;
    }
    f << text;
    return 0;
}

std::string json_text(const Json& j) { return j.dump(2) + "\n"; }

int cmd_coeffs(const Config& cfg, std::ostream& out, std::ostream& err) {
    if (!cfg.n) throw ParameterError("--n is required");
    int n = *cfg.n;
    if (n < 0 || (cfg.type1 && n < 1)) throw ParameterError("--n out of range");
    ParamSet p(parse_param(cfg.a, "0"), parse_param(cfg.b, "0"), parse_param(cfg.c, "1"), cfg.d.value_or(0));
    Json res;
    std::ostringstream csv;
    if (cfg.type1) {
        auto q = type1_solve(n, p);
        res["A"] = strings(q.A.coeffs());
        res["B"] = strings(q.B.coeffs());
        csv << "poly,j,coeff\n";
        for (int j = 0; j <= q.A.degree(); ++j) csv << "A," << j << "," << decimal(q.A.coeff(j).to_double()) << "\n";
        for (int j = 0; j <= q.B.degree(); ++j) csv << "B," << j << "," << decimal(q.B.coeff(j).to_double()) << "\n";
    } else {
        Poly P = explicit_poly(n, p);
        res["coeffs"] = strings(P.coeffs());
        auto t = recurrence_coeffs(n, p);
        res["beta"] = t.beta.str();
        res["alpha"] = t.alpha.str();
        res["gamma"] = gamma_coeff(n, p).str();
        res["normalization"] = normalization(n, p).str();
        csv << "j,coeff\n";
        for (int j = 0; j <= P.degree(); ++j) csv << j << "," << decimal(P.coeff(j).to_double()) << "\n";
    }
    if (cfg.format == "csv") return emit(cfg, csv.str(), out, err);
    Json j;
    j["command"] = "coeffs";
    j["params"] = params_json(cfg);
    j["results"] = res;
    j["failures"] = Json::array();
    return emit(cfg, json_text(j), out, err);
}

int cmd_verify(const Config& cfg, std::ostream& out, std::ostream& err) {
    std::vector<std::function<Check()>> tasks;
    bool all = cfg.suite == "all";
    if (all || cfg.suite == "exact") exact_tasks(cfg, tasks);
    if (all || cfg.suite == "numeric") numeric_tasks(cfg, tasks);
    if (all || cfg.suite == "symmetry") symmetry_tasks(cfg, tasks);
    auto checks = run_all(tasks);
    Json results = Json::array(), failures = Json::array();
    std::ostringstream csv;
    csv << "id,status,residual,tolerance\n";
    for (const auto& c : checks) {
        results.push_back(check_json(c));
        if (!c.pass) failures.push_back(c.id);
        csv << '"' << c.id << "\"," << (c.pass ? "pass" : "fail") << "," << decimal(c.residual) << ","
            << decimal(c.tolerance) << "\n";
    }
    int rc;
    if (cfg.format == "csv") {
        rc = emit(cfg, csv.str(), out, err);
    } else {
        Json j;
        j["command"] = "verify";
        j["params"] = params_json(cfg);
        j["results"] = results;
        j["failures"] = failures;
        rc = emit(cfg, json_text(j), out, err);
    }
    if (rc) return rc;
    return failures.empty() ? 0 : 1;
}

int cmd_figure(const Config& cfg, std::ostream& out, std::ostream& err) {
    int n0 = cfg.n.value_or(1), n1 = cfg.n_max.value_or(100);
    if (n0 < 1 || n1 < n0) throw ParameterError("invalid figure range");
    Rational a = parse_param(cfg.a, "2"), b = parse_param(cfg.b, "3/2"), c = parse_param(cfg.c, "5");
    std::vector<int> ds = cfg.d ? std::vector<int>{*cfg.d} : std::vector<int>{0, 1};
    const double M = family_bound().M;
    std::vector<std::vector<ZeroRatioRow>> scans;
    for (int d : ds) scans.push_back(zero_ratio_scan(ParamSet(a, b, c, d), n0, n1));

    Json results = Json::array(), failures = Json::array();
    std::ostringstream csv;
    csv.imbue(std::locale::classic());
    csv << "d,n,x_max,ratio,bound\n";
    for (std::size_t i = 0; i < ds.size(); ++i)
        for (const auto& r : scans[i]) {
            csv << ds[i] << "," << r.n << "," << decimal(r.x_max) << "," << decimal(r.ratio) << "," << decimal(M) << "\n";
            results.push_back({{"d", ds[i]}, {"n", r.n}, {"x_max", r.x_max}, {"ratio", r.ratio}, {"bound", M}});
            if (r.n >= 40 && !(r.ratio < M))
                failures.push_back("ratio above bound at d=" + std::to_string(ds[i]) + " n=" + std::to_string(r.n));
        }
    if (scans.size() == 2)
        for (std::size_t k = 0; k < scans[0].size(); ++k) {
            const auto &r0 = scans[0][k], &r1 = scans[1][k];
            if (r0.n % 2 == 0 && std::fabs(r0.x_max - r1.x_max) > 1e-9)
                failures.push_back("even-n largest zeros differ at n=" + std::to_string(r0.n));
        }
    int rc;
    if (cfg.format == "csv") {
        rc = emit(cfg, csv.str(), out, err);
        for (const auto& f : failures) err << "check failed: " << f.get<std::string>() << "\n";
    } else {
        Json j;
        Json p = params_json(cfg);
        p["a"] = a.str();
        p["b"] = b.str();
        p["c"] = c.str();
        j["command"] = "figure";
        j["params"] = p;
        j["results"] = results;
        j["failures"] = failures;
        rc = emit(cfg, json_text(j), out, err);
    }
    if (rc) return rc;
    return failures.empty() ? 0 : 1;
}

}  // namespace

int worker_count() {
    if (const char* s = std::getenv("MOPS_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(s, &end, 10);
        if (end != s && *end == '\0' && v > 0) return static_cast<int>(std::min(v, 256L));
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Config cfg;
    CLI::App app{"Multiple orthogonal polynomials for Tricomi-type weights"};
    app.require_subcommand(1);
    auto add_common = [&](CLI::App* s) {
        s->add_option("--a", cfg.a, "parameter a (fraction or decimal)");
        s->add_option("--b", cfg.b, "parameter b");
        s->add_option("--c", cfg.c, "parameter c");
        s->add_option("--d", cfg.d, "step-line parity 0 or 1")->check(CLI::Range(0, 1));
        s->add_option("--n", cfg.n, "degree, or first degree for figure");
        s->add_option("--n-max", cfg.n_max, "largest degree");
        s->add_option("--format", cfg.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
        s->add_option("--out", cfg.out, "write output to FILE");
        s->add_option("--tol-rel", cfg.tol_rel, "relative tolerance for numeric checks");
        s->add_option("--depth", cfg.depth, "continued fraction depth")->check(CLI::PositiveNumber);
        s->add_option("--seed", cfg.seed, "seed for sampled check points");
    };
    auto* coeffs = app.add_subcommand("coeffs", "exact polynomial coefficients");
    add_common(coeffs);
    coeffs->add_flag("--type1", cfg.type1, "type I pair (A, B) instead of the type II polynomial");
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    add_common(verify);
    verify->add_option("--suite", cfg.suite, "exact, numeric, symmetry or all")
        ->check(CLI::IsMember({"exact", "numeric", "symmetry", "all"}));
    auto* figure = app.add_subcommand("figure", "largest-zero ratios as CSV");
    add_common(figure);

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    if (figure->parsed()) cfg.format = figure->count("--format") ? cfg.format : "csv";
    try {
        if (coeffs->parsed()) {
            cfg.command = "coeffs";
            return cmd_coeffs(cfg, out, err);
        }
        if (verify->parsed()) {
            cfg.command = "verify";
            return cmd_verify(cfg, out, err);
        }
        cfg.command = "figure";
        return cmd_figure(cfg, out, err);
    } catch (const ParameterError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "check failed: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace mops
