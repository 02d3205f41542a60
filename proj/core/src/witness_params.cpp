#include "hyperalg/witness_params.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <sstream>

#include "hyperalg/classifier.hpp"
#include "hyperalg/growth.hpp"

namespace hyperalg {

namespace {

constexpr double kPi = 3.14159265358979323846;

Json ints(const IntVec& x) { return Json(x); }

Json tuple_to_json(const LatticeTuple& t) { return {{"u", t.u}, {"v", t.v}, {"l", t.l}}; }

std::string join(const IntVec& x, char sep) {
    std::string s;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (i) s += sep;
        s += std::to_string(x[i]);
    }
    return s;
}

bool below_one(const SymbolSpec& phi, Cplx z, double margin) {
    return log_abs_symbol(phi, z) <= std::log1p(-margin);
}

// s * D(w, delta): every sum of s points of D(w, delta) lies in this disk.
bool disks_inside(const SymbolSpec& phi, Cplx w, double delta, int m) {
    for (int s = 1; s <= m; ++s) {
        if (!below_one(phi, double(s) * w, kMembershipMargin)) return false;
        for (int k = 0; k < 16; ++k)
            if (!below_one(phi, double(s) * (w + std::polar(delta, 2.0 * kPi * k / 16)), kMembershipMargin))
                return false;
    }
    return true;
}

// w_1 + ... + w_s + v_1 + ... + v_d with w_i in D(w, delta) and v_i on [w0/(2m), w0/m].
bool sums_inside(const SymbolSpec& phi, Cplx w, double delta, Cplx w0, int m) {
    const double ts[] = {0.5, 0.75, 1.0};
    for (int s = 1; s <= m; ++s)
        for (int d = 0; d <= m - s; ++d)
            for (double t : ts)
                for (int k = -1; k < 8; ++k) {
                    const Cplx jitter = k < 0 ? Cplx(0.0, 0.0) : std::polar(delta, 2.0 * kPi * k / 8);
                    const Cplx z = double(s) * (w + jitter) + double(d) * t * w0 / double(m);
                    if (!below_one(phi, z, kMembershipMargin)) return false;
                }
    return true;
}

bool predicted_thetas_ok(const SymbolSpec& phi, const WitnessParams& p, Cplx beta) {
    const std::vector<Cplx> lambda{beta / double(p.m)};
    const std::vector<Cplx> alpha{p.w};
    if (!(log_abs_symbol(phi, beta) > std::log1p(1e-9))) return false;
    const LatticeSet set = enumerate_lattice(1, 1, p.m);
    auto check = [&](const LatticeTuple& t) {
        return theta_ratio(phi, t.u[0], t.v, lambda, alpha, p.m).theta <= 1.0 - p.theta_margin;
    };
    for (const auto& t : set.star)
        if (!check(t)) return false;
    for (const auto& level : set.lower)
        for (const auto& t : level)
            if (!check(t)) return false;
    return true;
}

std::vector<Cplx> segment_samples(Cplx lo, Cplx hi) {
    std::vector<Cplx> out;
    for (int k = 0; k <= 4; ++k) out.push_back(lo + (hi - lo) * (k / 4.0));
    return out;
}

}  // namespace

Json witness_params_to_json(const WitnessParams& p) {
    Json j{{"route", p.route},
           {"m", p.m},
           {"depth", p.depth},
           {"theta_margin", p.theta_margin},
           {"n_max", p.n_max},
           {"grid", grid_to_json(p.grid)},
           {"epsilon", p.epsilon}};
    Json lam = Json::array();
    for (Cplx l : p.lambda) lam.push_back(cplx_to_json(l));
    j["lambda"] = lam;
    if (p.route == "T:2") {
        j["w"] = cplx_to_json(p.w);
        j["delta"] = p.delta;
        j["w_star"] = cplx_to_json(p.w_star);
        j["w0"] = cplx_to_json(p.w0);
    } else {
        j["lambda_window"] = {cplx_to_json(p.lambda_lo), cplx_to_json(p.lambda_hi)};
        j["gamma_window"] = {cplx_to_json(p.gamma_lo), cplx_to_json(p.gamma_hi)};
        j["weights"] = p.weights;
        j["permutation"] = ints(p.perm);
        j["beta"] = ints(p.beta);
        j["d_A"] = p.d_A;
    }
    return j;
}

Json witness_report_to_json(const WitnessReport& r) {
    Json gens = Json::array();
    for (const auto& g : r.generators) gens.push_back(exppoly_to_json(g));
    Json targets = Json::array();
    for (const auto& t : r.targets) targets.push_back({{"exponents", ints(t.exponents)}, {"target", exppoly_to_json(t.target)}});
    Json table = Json::array();
    for (const auto& e : r.theta_table) {
        Json row = tuple_to_json(e.tuple);
        row["target"] = e.target;
        row["frequency"] = cplx_to_json(e.frequency);
        row["theta"] = e.theta;
        row["case"] = e.case_tag;
        row["decay"] = e.decay;
        table.push_back(std::move(row));
    }
    Json coeffs = Json::array();
    for (Cplx c : r.coefficients) coeffs.push_back(cplx_to_json(c));
    Json surv = Json::array();
    for (Cplx c : r.survivor_values) surv.push_back(cplx_to_json(c));
    Json trace = Json::array();
    for (const auto& s : r.trace)
        trace.push_back({{"q", s.q}, {"residual", s.residual}, {"bound", s.bound}, {"max_coeff", s.max_coeff}});
    return {{"route", r.route},
            {"generators", gens},
            {"q", r.q},
            {"targets", targets},
            {"residuals", r.residuals},
            {"bound_sum", r.bound_sum},
            {"coefficients", coeffs},
            {"survivor_values", surv},
            {"params", witness_params_to_json(r.params)},
            {"theta_table", table},
            {"trace", trace}};
}

WitnessReport witness_report_from_json(const Json& j) {
    if (!j.is_object()) throw SchemaError("witness report must be an object");
    WitnessReport r;
    r.route = require_field(j, "route", "witness report").get<std::string>();
    for (const auto& g : require_field(j, "generators", "witness report")) r.generators.push_back(exppoly_from_json(g));
    r.q = require_field(j, "q", "witness report").get<long long>();
    if (r.q < 0) throw SchemaError("witness report: q must be >= 0");
    for (const auto& t : require_field(j, "targets", "witness report")) {
        WitnessTarget wt;
        wt.exponents = require_field(t, "exponents", "target").get<IntVec>();
        wt.target = exppoly_from_json(require_field(t, "target", "target"));
        if (wt.exponents.size() != r.generators.size())
            throw SchemaError("witness report: exponent length differs from generator count");
        r.targets.push_back(std::move(wt));
    }
    if (r.generators.empty()) throw SchemaError("witness report: no generators");
    for (const auto& g : r.generators)
        if (g.is_zero()) throw SchemaError("witness report: generators must be nonzero");
    if (j.contains("residuals")) r.residuals = j["residuals"].get<std::vector<double>>();
    if (j.contains("params")) {
        const Json& p = j["params"];
        if (p.contains("grid")) r.params.grid = grid_from_json(p["grid"]);
        if (p.contains("epsilon")) r.params.epsilon = p["epsilon"].get<double>();
        if (p.contains("m")) r.params.m = p["m"].get<int>();
        r.params.route = r.route;
    }
    return r;
}

std::string trace_to_csv(const std::vector<TraceStep>& trace) {
    std::ostringstream os;
    os.precision(17);
    os << "q,residual,bound,max_coeff\n";
    for (const auto& s : trace) os << s.q << ',' << s.residual << ',' << s.bound << ',' << s.max_coeff << '\n';
    return os.str();
}

std::string theta_table_to_csv(const std::vector<ThetaEntry>& t) {
    std::ostringstream os;
    os.precision(17);
    os << "target,u,v,l,theta,case,decay\n";
    for (const auto& e : t) {
        std::string u;
        for (std::size_t i = 0; i < e.tuple.u.size(); ++i) {
            if (i) u += '|';
            u += join(e.tuple.u[i], ' ');
        }
        os << e.target << ',' << u << ',' << join(e.tuple.v, ' ') << ',' << join(e.tuple.l, ' ') << ',' << e.theta
           << ',' << e.case_tag << ',' << e.decay << '\n';
    }
    return os.str();
}

ThetaValue theta_ratio(const SymbolSpec& phi, const IntVec& u, const IntVec& v, const std::vector<Cplx>& lambda,
                       const std::vector<Cplx>& alpha, int m) {
    if (u.size() > alpha.size() || v.size() > lambda.size()) throw InputError("theta_ratio: index out of range");
    ThetaValue out;
    int su = 0, sv = 0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        out.frequency += double(u[i]) * alpha[i];
        su += u[i];
    }
    double log_den = 0.0;
    for (std::size_t j = 0; j < v.size(); ++j) {
        out.frequency += double(v[j]) * lambda[j];
        sv += v[j];
        if (v[j] > 0) log_den += double(v[j]) / m * log_abs_symbol(phi, double(m) * lambda[j]);
    }
    const bool survivor = su == 0 && sv == m && std::count(v.begin(), v.end(), m) == 1;
    if (survivor) {
        out.theta = 1.0;
        out.case_tag = 0;
        return out;
    }
    out.theta = std::exp(log_abs_symbol(phi, out.frequency) - log_den);
    if (su >= 1)
        out.case_tag = 2;
    else if (sv == m)
        out.case_tag = 1;
    else
        out.case_tag = 3;
    return out;
}

WitnessParams prepare_params_T2(const SymbolSpec& phi, int m, const DiskGrid& grid, double epsilon, long long n_max,
                                const T2ParamOptions& opt) {
    if (m < 2) throw InputError("witness: m must be >= 2");
    grid.validate();
    const auto mags = geometric_grid(1e-3, opt.t_max, opt.magnitudes);
    std::string last_failure = "no progression found";
    for (int r = 0; r <= opt.max_restarts; ++r) {
        WitnessParams p;
        p.route = "T:2";
        p.m = m;
        p.grid = grid;
        p.epsilon = epsilon;
        p.n_max = n_max;
        p.depth = std::min(0.95, opt.depth * std::pow(2.0, r));
        const auto w = find_arith_progression(phi, m, opt.directions, mags, p.depth);
        if (!w) {
            last_failure = "no progression {w, ..., mw} with |phi| <= " + std::to_string(1.0 - p.depth);
            continue;
        }
        p.w = *w;
        p.delta = std::abs(p.w) / 4.0;
        int h = 0;
        while (h < opt.max_halvings && !disks_inside(phi, p.w, p.delta, m)) {
            p.delta *= 0.5;
            ++h;
        }
        if (h == opt.max_halvings) {
            last_failure = "no continuity radius after " + std::to_string(h) + " halvings";
            continue;
        }
        const ConvexRay ray = find_convex_ray(phi, 0.0, 2.0 * m * std::abs(p.w));
        p.w_star = ray.w1;
        p.w0 = ray.w1;
        int shrinks = 0;
        while (shrinks < 200 && !sums_inside(phi, p.w, p.delta, p.w0, m)) {
            p.w0 *= 0.9;
            ++shrinks;
        }
        if (shrinks == 200) {
            last_failure = "no convex-ray window compatible with D(w, delta)";
            continue;
        }
        if (predicted_thetas_ok(phi, p, p.w0 / 2.0) && predicted_thetas_ok(phi, p, p.w0)) return p;
        last_failure = "predicted theta above 1 - margin";
    }
    throw HypothesisError("T:2 witness parameters", last_failure);
}

bool on_segment(Cplx z, Cplx lo, Cplx hi, double tol) {
    const Cplx d = hi - lo;
    if (std::abs(d) == 0.0) return std::abs(z - lo) <= tol;
    const Cplx t = (z - lo) / d;
    return std::abs(t.imag()) <= tol && t.real() >= -tol && t.real() <= 1.0 + tol;
}

void check_placement_T2(const WitnessParams& p, const ExpPoly& A, const ExpPoly& B) {
    if (A.is_zero() || B.is_zero()) throw InputError("witness targets must be nonzero");
    for (const auto& t : A.terms())
        if (std::abs(t.freq - p.w) > p.delta * (1.0 + 1e-12))
            throw InputError("frequency placement: A frequency outside D(w, delta)");
    for (const auto& t : B.terms())
        if (!on_segment(t.freq, p.w0 / 2.0, p.w0))
            throw InputError("frequency placement: B frequency outside [w0/2, w0]");
}

WitnessParams prepare_params_multi(const SymbolSpec& phi, const ExponentSet& A, const DiskGrid& grid, double epsilon,
                                   long long n_max, const MultiParamOptions& opt) {
    const WeightSelection sel = select_weights(A);
    if (!sel.injective || !sel.a1_holds) throw HypothesisError("weight selection", "functional not injective on A");
    grid.validate();
    const DerivativeEstimate d = derivs_at_zero(phi, 2);
    if (std::abs(d.values[0] - Cplx(1.0, 0.0)) > 1e-9)
        throw HypothesisError("phi(0) = 1", "phi(0) = " + std::to_string(std::abs(d.values[0])));
    if (std::abs(d.values[2] * d.values[0] - d.values[1] * d.values[1]) <= 1e-9)
        throw HypothesisError("phi''(0)phi(0) != phi'(0)^2", "second-derivative margin at or below 1e-9");

    WitnessParams p;
    p.m = sel.m;
    p.d_A = sel.d_A;
    p.weights = sel.k;
    p.perm = sel.perm;
    p.beta = sel.beta;
    p.grid = grid;
    p.epsilon = epsilon;
    p.n_max = n_max;
    const int m = sel.m, dA = sel.d_A;

    if (std::abs(d.values[1]) > 1e-8) {
        p.route = "T:2bisbis";
        const ConvexRay ray = find_convex_ray(phi, 0.0, 2.0);
        const Cplx w = ray.w1;
        const double a = 0.9 / (2.0 * dA);
        const double b = 0.9 * a / (2.0 * dA);
        p.lambda_lo = -2.0 * a * w;
        p.lambda_hi = -a * w;
        p.gamma_lo = b * w;
        p.gamma_hi = 2.0 * b * w;
        p.w0 = w;
        // Segment [-2 d_A a, -a + 2 d_A b] w lies inside phi^{-1}(D) by the convex ray.
        for (int k = 0; k <= 32; ++k) {
            const double t = -2.0 * dA * a + (-a + 2.0 * dA * b + 2.0 * dA * a) * k / 32.0;
            if (!(log_abs_symbol(phi, t * w) < 0.0))
                throw HypothesisError("T:2bisbis windows", "sampled window sum outside phi^{-1}(D)");
        }
        return p;
    }

    // phi'(0) = 0: the negative half of the convex ray is not inside phi^{-1}(D). The
    // lambda window moves onto a progression direction instead.
    p.route = "T:2bisbis-extended";
    const auto mags = geometric_grid(1e-3, opt.t_max, opt.magnitudes);
    for (double depth = opt.depth; depth < 0.96; depth *= 2.0) {
        p.depth = depth;
        const auto wp = find_arith_progression(phi, 2 * dA, opt.directions, mags, depth);
        if (!wp) continue;
        const Cplx u = *wp / std::abs(*wp);
        const double a = std::abs(*wp) / 2.0;
        p.lambda_lo = a * u;
        p.lambda_hi = 2.0 * a * u;
        bool lambda_ok = true;
        for (int s = 1; s <= dA && lambda_ok; ++s)
            for (Cplx z : segment_samples(p.lambda_lo, p.lambda_hi))
                lambda_ok = lambda_ok && below_one(phi, double(s) * z, kMembershipMargin);
        if (!lambda_ok) continue;

        const ConvexRay ray = find_convex_ray(phi, 0.0, 2.0 * dA * std::abs(*wp));
        const Cplx dir = ray.w1 / std::abs(ray.w1);
        p.w0 = ray.w1;
        double b = std::min(std::abs(ray.w1) / 2.0, a);
        bool ok = false;
        for (int k = 0; k < opt.max_shrinks && !ok; ++k, b *= 0.9) {
            ok = true;
            for (int s = 1; s < dA && ok; ++s)
                for (int dd = 1; dd <= std::min(m, dA - s) && ok; ++dd)
                    for (Cplx zl : segment_samples(p.lambda_lo, p.lambda_hi))
                        for (double t : {1.0, 1.5, 2.0}) {
                            const Cplx z = double(s) * zl + double(dd) * t * b * dir / double(m);
                            if (!below_one(phi, z, kMembershipMargin)) {
                                ok = false;
                                break;
                            }
                        }
            if (ok) {
                p.gamma_lo = b * dir;
                p.gamma_hi = 2.0 * b * dir;
            }
        }
        if (!ok) continue;
        if (!(log_abs_symbol(phi, p.gamma_lo) > std::log1p(1e-9))) continue;
        return p;
    }
    throw HypothesisError("T:2bisbis witness parameters", "no admissible lambda and gamma windows");
}

PlacementFit fit_on_segment(const TaylorPoly& target, Cplx lo, Cplx hi, const DiskGrid& grid, int count) {
    if (count < 1) throw InputError("fit_on_segment: count must be >= 1");
    grid.validate();
    const auto pts = grid.points();
    std::vector<Cplx> freqs;
    for (int k = 0; k < count; ++k) freqs.push_back(count == 1 ? lo : lo + (hi - lo) * (double(k) / (count - 1)));
    Eigen::MatrixXcd M(static_cast<Eigen::Index>(pts.size()), count);
    Eigen::VectorXcd y(static_cast<Eigen::Index>(pts.size()));
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const auto ii = static_cast<Eigen::Index>(i);
        y(ii) = eval_taylor(target, pts[i]);
        for (int k = 0; k < count; ++k) M(ii, k) = std::exp(freqs[static_cast<std::size_t>(k)] * pts[i]);
    }
    const Eigen::VectorXcd c = M.completeOrthogonalDecomposition().solve(y);
    std::vector<Term> terms;
    for (int k = 0; k < count; ++k) terms.push_back({c(k), freqs[static_cast<std::size_t>(k)]});
    PlacementFit fit{ExpPoly(std::move(terms)), 0.0};
    for (const Cplx z : pts) fit.fit_error = std::max(fit.fit_error, std::abs(eval_exppoly(fit.fitted, z) - eval_taylor(target, z)));
    return fit;
}

}  // namespace hyperalg
