#include "hyperalg/growth.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace hyperalg {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kNegInf = -std::numeric_limits<double>::infinity();
const double kSkipLog = std::log(1e-300);

// Quadrants by argument: I: Re>0,Im>=0  II: Re<=0,Im>0  III: Re<0,Im<=0  IV: Re>=0,Im<0.
int quadrant(Cplx z) {
    const double x = z.real(), y = z.imag();
    if (x > 0 && y >= 0) return 0;
    if (x <= 0 && y > 0) return 1;
    if (x < 0 && y <= 0) return 2;
    return 3;
}

struct TableEntry {
    double base;
    bool plus;
};

// Rows: quadrant of A2; columns: quadrant of A1.
constexpr TableEntry kTable[4][4] = {
    {{0.0, false}, {kPi, true}, {kPi, false}, {0.0, false}},
    {{-kPi / 2, true}, {-kPi / 2, true}, {kPi / 2, true}, {kPi / 2, true}},
    {{-kPi / 2, true}, {-kPi / 2, false}, {kPi / 2, false}, {kPi / 2, false}},
    {{0.0, true}, {kPi, true}, {kPi, true}, {0.0, true}},
};

bool direction_ok(Cplx A1, Cplx A2, double theta) {
    const double first = (A1 * std::polar(1.0, theta)).real();
    const double second = (A2 * std::polar(1.0, 2.0 * theta)).real();
    const bool first_ok = A1 == Cplx(0.0, 0.0) ? true : first > 0.0;
    return first_ok && second > 0.0;
}

double wrap_angle(double t) {
    t = std::remainder(t, 2.0 * kPi);
    return t <= -kPi ? t + 2.0 * kPi : t;
}

}  // namespace

std::string RayScan::to_csv() const {
    std::ostringstream os;
    os.precision(17);
    os << "t,modulus\n";
    for (std::size_t i = 0; i < t_grid.size(); ++i) os << t_grid[i] << "," << moduli[i] << "\n";
    return os.str();
}

std::string GrowthEstimate::to_csv() const {
    std::ostringstream os;
    os.precision(17);
    os << "r,logM\n";
    for (std::size_t i = 0; i < r.size(); ++i) os << r[i] << "," << log_m[i] << "\n";
    return os.str();
}

std::vector<double> geometric_grid(double lo, double hi, int n) {
    if (!(lo > 0.0) || !(hi > lo) || n < 2) throw InputError("geometric_grid: need 0 < lo < hi and n >= 2");
    std::vector<double> g(static_cast<std::size_t>(n));
    const double ratio = std::log(hi / lo) / (n - 1);
    for (int i = 0; i < n; ++i) g[static_cast<std::size_t>(i)] = lo * std::exp(ratio * i);
    g.back() = hi;
    return g;
}

std::vector<double> linear_grid(double lo, double hi, int n) {
    if (!(hi > lo) || n < 2) throw InputError("linear_grid: need lo < hi and n >= 2");
    std::vector<double> g(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) g[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (n - 1);
    return g;
}

double log_max_modulus(const SymbolSpec& phi, double r, int samples) {
    if (!(r > 0.0)) throw InputError("max_modulus: r must be > 0");
    if (samples < 16) throw InputError("max_modulus: need at least 16 samples");
    double best = kNegInf;
    for (int k = 0; k < samples; ++k)
        best = std::max(best, log_abs_symbol(phi, std::polar(r, 2.0 * kPi * k / samples)));
    return best;
}

double max_modulus(const SymbolSpec& phi, double r, int samples) {
    const double l = log_max_modulus(phi, r, samples);
    if (l > kExpBound) throw RangeError("max_modulus overflows", Cplx(r, 0.0));
    return std::exp(l);
}

GrowthEstimate estimate_order_type(const SymbolSpec& phi, const std::vector<double>& r_grid, int samples) {
    if (r_grid.size() < 8) throw InputError("estimate_order_type: need at least 8 radii");
    for (std::size_t i = 1; i < r_grid.size(); ++i)
        if (!(r_grid[i] > r_grid[i - 1])) throw InputError("estimate_order_type: radii must increase");
    GrowthEstimate g;
    g.r = r_grid;
    for (double r : r_grid) g.log_m.push_back(log_max_modulus(phi, r, samples));
    const std::size_t start = r_grid.size() / 2;
    g.r_lo = r_grid[start];
    g.r_hi = r_grid.back();

    std::vector<double> xs, ys;
    double type = 0.0;
    for (std::size_t i = start; i < r_grid.size(); ++i) {
        type = std::max(type, g.log_m[i] / r_grid[i]);
        if (g.log_m[i] > 0.0) {
            xs.push_back(std::log(r_grid[i]));
            ys.push_back(std::log(g.log_m[i]));
        }
    }
    if (xs.size() < 2) {
        g.degenerate = true;
        g.order = 0.0;
        return g;
    }
    const double n = static_cast<double>(xs.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sx += xs[i];
        sy += ys[i];
        sxx += xs[i] * xs[i];
        sxy += xs[i] * ys[i];
    }
    const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    const double icpt = (sy - slope * sx) / n;
    double ss = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double e = ys[i] - (icpt + slope * xs[i]);
        ss += e * e;
    }
    g.order = std::max(0.0, slope);
    g.quality = std::sqrt(ss / n);
    g.type_valid = std::abs(g.order - 1.0) <= 0.2;
    g.type = g.type_valid ? std::max(0.0, type) : 0.0;
    return g;
}

std::vector<double> default_growth_grid() { return geometric_grid(4.0, 64.0, 24); }

double indicator(const SymbolSpec& phi, double theta, const std::vector<double>& r_grid) {
    if (r_grid.empty()) throw InputError("indicator: empty radius grid");
    double best = kNegInf;
    for (std::size_t i = r_grid.size() / 2; i < r_grid.size(); ++i) {
        const double t = r_grid[i];
        const double l = log_abs_symbol(phi, std::polar(t, theta));
        if (l < kSkipLog) continue;
        best = std::max(best, l / t);
    }
    return best;
}

double tau0(const SymbolSpec& phi, Cplx z1, const std::vector<double>& r_grid) {
    if (z1 == Cplx(0.0, 0.0)) throw InputError("tau0: z1 must be nonzero");
    const auto sub = structurally_subexponential(phi);
    if (sub && *sub) return 0.0;
    return std::max(0.0, indicator(phi, std::arg(z1), r_grid));
}

RayScan scan_ray(const SymbolSpec& phi, double theta, const std::vector<double>& t_grid) {
    for (std::size_t i = 1; i < t_grid.size(); ++i)
        if (!(t_grid[i] > t_grid[i - 1])) throw InputError("scan_ray: t grid must be strictly increasing");
    RayScan s;
    s.theta = theta;
    s.t_grid = t_grid;
    for (double t : t_grid) s.moduli.push_back(std::exp(std::min(log_abs_symbol(phi, std::polar(t, theta)), 709.0)));
    return s;
}

namespace {

// Maximum of t -> log|phi(t e^{i theta})| on [lo, hi] by golden-section search.
std::pair<double, double> ray_peak(const SymbolSpec& phi, double theta, double lo, double hi) {
    const double g = 0.5 * (std::sqrt(5.0) - 1.0);
    auto f = [&](double t) { return log_abs_symbol(phi, std::polar(t, theta)); };
    double a = lo, b = hi;
    double c = b - g * (b - a), d = a + g * (b - a);
    double fc = f(c), fd = f(d);
    for (int it = 0; it < 80 && b - a > 1e-14 * std::max(1.0, hi); ++it) {
        if (fc >= fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - g * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + g * (b - a);
            fd = f(d);
        }
    }
    return fc >= fd ? std::make_pair(c, fc) : std::make_pair(d, fd);
}

}  // namespace

std::optional<double> ray_below_one(const SymbolSpec& phi, double theta, double t_max, int samples, double margin) {
    if (samples < 64) throw InputError("ray_below_one: need at least 64 samples");
    const double bound = std::log1p(-margin);
    std::vector<double> t(static_cast<std::size_t>(samples) + 1), l(t.size());
    for (int i = 0; i <= samples; ++i) {
        t[i] = t_max * i / samples;
        l[i] = log_abs_symbol(phi, std::polar(t[i], theta));
    }
    // |phi| can touch 1 between samples (|cos t| at t = pi); sampled local maxima are refined.
    std::optional<double> r;
    for (int i = 1; i <= samples; ++i) {
        if (l[i] > bound) break;
        if (i < samples && l[i - 1] <= l[i] && l[i] >= l[i + 1]) {
            const auto [tp, lp] = ray_peak(phi, theta, t[i - 1], t[i + 1]);
            if (lp > bound) {
                if (tp > t[i]) r = t[i];
                break;
            }
        }
        r = t[i];
    }
    return r;
}

std::optional<Cplx> find_arith_progression(const SymbolSpec& phi, int m, int directions,
                                           const std::vector<double>& a_grid, double margin) {
    if (m < 1) throw InputError("find_arith_progression: m must be >= 1");
    if (directions < 1) throw InputError("find_arith_progression: need at least one direction");
    std::vector<double> mags = a_grid;
    std::sort(mags.begin(), mags.end());
    const double bound = std::log1p(-margin);
    for (double mag : mags) {
        for (int k = 0; k < directions; ++k) {
            const Cplx a = std::polar(mag, 2.0 * kPi * k / directions);
            bool ok = true;
            for (int j = 1; j <= m && ok; ++j) ok = log_abs_symbol(phi, double(j) * a) <= bound;
            if (ok) return a;
        }
    }
    return std::nullopt;
}

double convex_direction(Cplx A1, Cplx A2) {
    if (A2 == Cplx(0.0, 0.0)) throw InputError("convex_direction: A2 must be nonzero");
    if (A1 == Cplx(0.0, 0.0)) return 0.5 * std::arg(std::conj(A2));

    const TableEntry e = kTable[quadrant(A2)][quadrant(A1)];
    if (!e.plus && direction_ok(A1, A2, e.base)) return wrap_angle(e.base);
    // "x+" entries: x nudged upward. Entries on a boundary of the first
    // inequality need the same nudge to become strict.
    for (double eps = kPi / 8; eps > 1e-15; eps *= 0.5) {
        if (direction_ok(A1, A2, e.base + eps)) return wrap_angle(e.base + eps);
        if (!e.plus && direction_ok(A1, A2, e.base - eps)) return wrap_angle(e.base - eps);
    }
    // Not reached for valid input; kept as a guard against rounding at the boundaries.
    double best = 0.0, score = -std::numeric_limits<double>::infinity();
    for (int k = 0; k < 4096; ++k) {
        const double t = -kPi + 2.0 * kPi * k / 4096;
        const double s = std::min((A1 * std::polar(1.0, t)).real() / std::abs(A1),
                                  (A2 * std::polar(1.0, 2.0 * t)).real() / std::abs(A2));
        if (s > score) {
            score = s;
            best = t;
        }
    }
    return best;
}

bool profile_convex_increasing(const SymbolSpec& phi, Cplx w0, Cplx w1, double lo, int points,
                               std::vector<double>* profile) {
    std::vector<double> g(static_cast<std::size_t>(points));
    for (int k = 0; k < points; ++k) {
        const double t = lo + (1.0 - lo) * k / (points - 1);
        g[static_cast<std::size_t>(k)] = log_abs_symbol(phi, w0 + t * (w1 - w0));
    }
    if (profile) *profile = g;
    for (std::size_t k = 1; k < g.size(); ++k)
        if (!(g[k] - g[k - 1] > 0.0)) return false;
    for (std::size_t k = 2; k < g.size(); ++k)
        if (!(g[k] - 2.0 * g[k - 1] + g[k - 2] > 0.0)) return false;
    return true;
}

ConvexRay find_convex_ray(const SymbolSpec& phi, Cplx w0, double delta, const ConvexRayOptions& opt) {
    if (!(delta > 0.0)) throw InputError("find_convex_ray: delta must be > 0");
    const DerivativeEstimate d = derivs_at(phi, w0, 2, opt.cauchy);
    const Cplx f0 = d.values[0], f1 = d.values[1], f2 = d.values[2];
    if (std::abs(f0) < 1e-12) throw HypothesisError("phi(w0) != 0", "phi vanishes at w0");
    const Cplx second = f2 * f0 - f1 * f1;
    const double margin = std::abs(second) / std::max(1.0, std::norm(f0));
    if (margin <= opt.hypothesis_margin)
        throw HypothesisError("phi''phi != phi'^2", "second-derivative margin " + std::to_string(margin) +
                                                         " at or below " + std::to_string(opt.hypothesis_margin));
    ConvexRay ray;
    ray.w0 = w0;
    ray.a1 = f1 / f0;
    ray.a2 = second / (2.0 * f0 * f0);
    const bool two_sided = std::abs(ray.a1) > 1e-8;
    ray.domain_lo = two_sided ? -1.0 : 0.0;
    ray.theta = convex_direction(two_sided ? ray.a1 : Cplx(0.0, 0.0), ray.a2);
    double eta = delta / 2.0;
    for (int h = 0; h <= opt.max_halvings; ++h, eta *= 0.5) {
        const Cplx w1 = w0 + std::polar(eta, ray.theta);
        if (profile_convex_increasing(phi, w0, w1, ray.domain_lo, opt.points, &ray.profile)) {
            ray.w1 = w1;
            ray.eta = eta;
            return ray;
        }
    }
    throw ConvergenceError("find_convex_ray: no step length validated after " + std::to_string(opt.max_halvings) +
                           " halvings");
}

std::optional<std::pair<double, double>> check_Tma_conditions(const SymbolSpec& phi, double theta, double t_max,
                                                              const std::vector<double>& R_grid, int samples) {
    const auto r = ray_below_one(phi, theta, t_max, std::max(samples, 64));
    if (!r) return std::nullopt;
    const double h = tau0(phi, std::polar(1.0, theta), R_grid);
    const double above = std::log1p(kAboveOneMargin);
    for (double R : R_grid) {
        if (R <= *r) continue;
        const double l = log_abs_symbol(phi, std::polar(R, theta));
        if (l > std::max(0.0, h * R) + above) return std::make_pair(*r, R);
    }
    return std::nullopt;
}

}  // namespace hyperalg
