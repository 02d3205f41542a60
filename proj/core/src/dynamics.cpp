#include "hyperalg/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace hyperalg {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

ExpPoly apply_symbol(const SymbolSpec& phi, const ExpPoly& f) {
    std::vector<Term> out;
    out.reserve(f.size());
    for (const auto& t : f.terms()) out.push_back({t.coeff * eval_symbol(phi, t.freq), t.freq});
    return ExpPoly(std::move(out));
}

ExpPoly apply_symbol_power(const SymbolSpec& phi, const ExpPoly& f, long long q) {
    if (q < 0) throw InputError("apply_symbol_power: q must be >= 0");
    if (q == 0) return f;
    std::vector<Term> out;
    out.reserve(f.size());
    for (const auto& t : f.terms()) {
        const double lm = log_abs_symbol(phi, t.freq);
        if (!std::isfinite(lm)) continue;  // phi(lambda) = 0
        const double log_mod = std::log(std::abs(t.coeff)) + double(q) * lm;
        if (log_mod > 709.0) throw RangeError("apply_symbol_power: |phi(lambda)|^q overflows", t.freq);
        const double arg_phi = std::arg(eval_symbol(phi, t.freq));
        const double ang = std::arg(t.coeff) + std::remainder(double(q) * arg_phi, 2.0 * kPi);
        out.push_back({std::polar(std::exp(log_mod), ang), t.freq});
    }
    return ExpPoly(std::move(out));
}

TaylorPoly apply_symbol_taylor(const TaylorPoly& phi, const TaylorPoly& f, int K, int guard) {
    if (K < 0 || guard < 0) throw InputError("apply_symbol_taylor: K and guard must be >= 0");
    const auto need = static_cast<std::size_t>(K + guard + 1);
    if (f.coeffs.size() < need || phi.coeffs.size() < static_cast<std::size_t>(guard + 1))
        throw InputError("apply_symbol_taylor: inputs shorter than K + guard");
    std::vector<Cplx> out(static_cast<std::size_t>(K + 1));
    for (int k = 0; k <= K; ++k) {
        Cplx acc(0.0, 0.0);
        double ratio = 1.0;  // (k+n)!/k!
        for (std::size_t n = 0; n < phi.coeffs.size() && k + n < f.coeffs.size(); ++n) {
            if (n > 0) ratio *= double(k + n);
            acc += phi.coeffs[n] * ratio * f.coeffs[static_cast<std::size_t>(k) + n];
        }
        out[static_cast<std::size_t>(k)] = acc;
    }
    return TaylorPoly(std::move(out), K);
}

double sup_norm(const ExpPoly& f, const DiskGrid& grid) {
    double s = 0.0;
    for (Cplx z : grid.points()) s = std::max(s, std::abs(eval_exppoly(f, z)));
    return s;
}

double sup_distance(const ExpPoly& f, const ExpPoly& g, const DiskGrid& grid) { return sup_norm(f - g, grid); }

double sup_distance(const TaylorPoly& f, const TaylorPoly& g, const DiskGrid& grid) {
    double s = 0.0;
    for (Cplx z : grid.points()) s = std::max(s, std::abs(eval_taylor(f, z) - eval_taylor(g, z)));
    return s;
}

std::string OrbitTrace::to_csv() const {
    std::ostringstream os;
    os.precision(17);
    os << "q,residual\n";
    for (const auto& [q, r] : iterates) os << q << ',' << r << '\n';
    return os.str();
}

Json orbit_trace_to_json(const OrbitTrace& t) {
    Json it = Json::array();
    for (const auto& [q, r] : t.iterates) it.push_back({{"q", q}, {"residual", r}});
    return {{"target", t.target}, {"grid", grid_to_json(t.grid)}, {"iterates", it}};
}

ExpPoly generator_product(const std::vector<ExpPoly>& gens, const IntVec& exps) {
    if (gens.size() != exps.size()) throw InputError("generator_product: one exponent per generator required");
    ExpPoly g = ExpPoly::constant(1.0);
    for (std::size_t i = 0; i < gens.size(); ++i)
        if (exps[i] > 0) g = g * pow_exppoly(gens[i], exps[i]);
    return g;
}

Json verify_result_to_json(const VerifyResult& v) {
    Json runs = Json::array();
    for (const auto& r : v.oracle_runs)
        runs.push_back({{"precision_bits", r.precision_bits},
                        {"series_degree", r.series_degree},
                        {"output_degree", r.output_degree},
                        {"phi_terms", r.phi_terms},
                        {"terms", r.terms}});
    return {{"pass", v.pass},
            {"diagonal_residuals", v.diagonal_residuals},
            {"oracle_residuals", v.oracle_residuals},
            {"agreement", v.agreement},
            {"oracle", runs},
            {"trace", orbit_trace_to_json(v.trace)},
            {"reason", v.reason}};
}

VerifyResult verify_witness(const SymbolSpec& phi, const WitnessReport& report, const DiskGrid& grid, double epsilon,
                            const VerifyOptions& opt) {
    grid.validate();
    if (report.generators.empty()) throw InputError("verify_witness: report has no generators");
    for (const auto& g : report.generators)
        if (g.is_zero()) throw InputError("verify_witness: generators must be nonzero");
    VerifyResult v;
    v.trace.grid = grid;
    const auto pts = grid.points();
    std::size_t main_target = 0;
    bool ok = true;
    for (std::size_t i = 0; i < report.targets.size(); ++i) {
        const auto& t = report.targets[i];
        if (!t.target.is_zero()) main_target = i;
        const ExpPoly g = generator_product(report.generators, t.exponents);
        const ExpPoly image = apply_symbol_power(phi, g, report.q);
        OracleResult o = taylor_oracle_power(phi, report.generators, t.exponents, report.q, grid, opt.oracle);
        double diag = 0.0, orc = 0.0, agree = 0.0;
        for (std::size_t k = 0; k < pts.size(); ++k) {
            const Cplx target = eval_exppoly(t.target, pts[k]);
            const Cplx d = eval_exppoly(image, pts[k]);
            diag = std::max(diag, std::abs(d - target));
            orc = std::max(orc, std::abs(o.values[k] - target));
            agree = std::max(agree, std::abs(d - o.values[k]));
        }
        v.diagonal_residuals.push_back(diag);
        v.oracle_residuals.push_back(orc);
        v.agreement.push_back(agree);
        v.oracle_runs.push_back(std::move(o));
        if (agree > opt.agreement_tol) {
            ok = false;
            v.reason += "target " + std::to_string(i) + ": diagonal and oracle differ by " + std::to_string(agree) + "; ";
        }
        if (diag > epsilon || orc > epsilon) {
            ok = false;
            std::ostringstream os;
            os << "target " << i << ": residual " << std::max(diag, orc) << " above epsilon; ";
            v.reason += os.str();
        }
    }
    v.pass = ok;
    if (ok) v.reason = "all residuals within epsilon";

    // Residual of the main target along q = 1, 2, 4, ..., q.
    if (!report.targets.empty()) {
        const auto& t = report.targets[main_target];
        v.trace.target = "exponents";
        for (int e : t.exponents) v.trace.target += " " + std::to_string(e);
        const ExpPoly g = generator_product(report.generators, t.exponents);
        std::vector<long long> qs;
        for (long long q = 1; q < report.q; q *= 2) qs.push_back(q);
        if (report.q > 0) qs.push_back(report.q);
        for (long long q : qs) {
            double r = 0.0;
            try {
                r = sup_distance(apply_symbol_power(phi, g, q), t.target, grid);
            } catch (const RangeError&) {
                r = std::numeric_limits<double>::infinity();
            }
            v.trace.iterates.emplace_back(q, r);
        }
    }
    return v;
}

}  // namespace hyperalg
