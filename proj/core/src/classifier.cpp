#include "hyperalg/classifier.hpp"

#include <algorithm>
#include <cmath>
#include <variant>

namespace hyperalg {

namespace {

bool is_constant(const SymbolSpec& s) {
    if (const auto* e = s.as<ExpPolySymbol>()) return e->f.max_freq_abs() == 0.0;
    if (const auto* p = s.as<PolyTimesExp>()) return p->poly.size() == 1 && p->a == Cplx(0.0, 0.0);
    if (const auto* h = s.as<HadamardTrunc>()) return h->truncation == 0 && h->a == Cplx(0.0, 0.0);
    return false;
}

Json opt_cplx(const std::optional<Cplx>& z) { return z ? cplx_to_json(*z) : Json(nullptr); }

struct GrowthDecision {
    bool subexponential = false;
    bool exact = false;
    std::optional<GrowthEstimate> estimate;
};

GrowthDecision decide_growth(const SymbolSpec& numeric, const SymbolSpec& structural, const ClassifierOptions& opt) {
    GrowthDecision d;
    if (auto s = structurally_subexponential(structural)) {
        d.subexponential = *s;
        d.exact = true;
        return d;
    }
    GrowthEstimate g = estimate_order_type(numeric, opt.growth_grid);
    d.subexponential = g.degenerate || g.order < 0.9 || (g.type_valid && g.type < 0.05);
    d.estimate = std::move(g);
    return d;
}

Json growth_to_json(const GrowthEstimate& g) {
    return {{"order", g.order},      {"type", g.type},         {"type_valid", g.type_valid},
            {"degenerate", g.degenerate}, {"r_window", {g.r_lo, g.r_hi}}, {"quality", g.quality}};
}

// Hadamard data attached to the symbol, either from its structural form or from a
// user-supplied zero summary (a then follows from phi'(0)/phi(0)).
struct HadamardData {
    ZeroSetSummary zeros;
    Cplx a;
    int genus = 0;
    bool exact = false;
};

std::optional<HadamardData> hadamard_data(const SymbolSpec& norm, const SymbolSpec& structural,
                                          const std::optional<ZeroSetSummary>& zeros) {
    if (const auto* h = structural.as<HadamardTrunc>()) {
        if (h->truncation == 0) return std::nullopt;
        return HadamardData{zeros ? *zeros : summarize_zeros(h->zeros, h->truncation), h->a, h->genus, true};
    }
    if (!zeros) return std::nullopt;
    const DerivativeEstimate d = derivs_at_zero(norm, 1);
    HadamardData hd;
    hd.zeros = *zeros;
    hd.genus = zeros->genus_guess;
    // log phi = a z + sum log E_p(z/z_n): derivative at 0 is a (genus 1) or a - sum 1/z_n (genus 0).
    hd.a = d.values[1] / d.values[0] + (hd.genus == 0 ? zeros->sum_inv : Cplx(0.0, 0.0));
    hd.exact = false;
    return hd;
}

}  // namespace

std::string outcome_name(Outcome o) {
    switch (o) {
        case Outcome::HasAlgebra: return "HasAlgebra";
        case Outcome::NoAlgebra: return "NoAlgebra";
        case Outcome::Unknown: return "Unknown";
    }
    return "?";
}

std::string confidence_name(Confidence c) { return c == Confidence::Exact ? "exact" : "numerical"; }

const EvidenceItem* Verdict::find(const std::string& name) const {
    for (const auto& e : evidence)
        if (e.name == name) return &e;
    return nullptr;
}

Json verdict_to_json(const Verdict& v) {
    Json ev = Json::array();
    for (const auto& e : v.evidence) ev.push_back({{"name", e.name}, {"value", e.value}});
    return {{"outcome", outcome_name(v.outcome)},
            {"route", v.route},
            {"confidence", confidence_name(v.confidence)},
            {"rotation", cplx_to_json(v.rotation)},
            {"reason", v.reason},
            {"evidence", ev}};
}

ZeroSetSummary summarize_zeros(const std::vector<Cplx>& zeros, std::size_t truncation) {
    if (truncation > zeros.size()) throw InputError("summarize_zeros: truncation exceeds list length");
    ZeroSetSummary s;
    s.truncation = truncation;
    std::vector<double> mods;
    for (std::size_t n = 0; n < truncation; ++n) {
        const Cplx z = zeros[n];
        if (z == Cplx(0.0, 0.0)) throw InputError("summarize_zeros: zeros must be nonzero");
        s.sum_inv += 1.0 / z;
        s.sum_inv_sq += 1.0 / (z * z);
        s.sum_inv_abs += 1.0 / std::abs(z);
        mods.push_back(std::abs(z));
    }
    if (mods.empty()) return s;
    std::sort(mods.begin(), mods.end());
    const double lo = mods.front(), hi = mods.back();
    if (hi > lo * (1.0 + 1e-12)) {
        s.r_grid = geometric_grid(lo, hi, 16);
    } else {
        s.r_grid = {lo};
    }
    for (double r : s.r_grid)
        s.counts.push_back(static_cast<std::size_t>(std::upper_bound(mods.begin(), mods.end(), r * (1.0 + 1e-12)) -
                                                    mods.begin()));
    // Convergence exponent from the slope of log n(r) against log r over the upper half.
    if (s.r_grid.size() >= 4) {
        const std::size_t start = s.r_grid.size() / 2;
        const double x0 = std::log(s.r_grid[start]), x1 = std::log(s.r_grid.back());
        const double y0 = std::log(double(s.counts[start])), y1 = std::log(double(s.counts.back()));
        const double slope = (y1 - y0) / (x1 - x0);
        s.genus_guess = slope < 0.9 ? 0 : 1;
    }
    return s;
}

Json zero_summary_to_json(const ZeroSetSummary& z) {
    Json counts = Json::array();
    for (std::size_t i = 0; i < z.r_grid.size(); ++i) counts.push_back({z.r_grid[i], z.counts[i]});
    return {{"sum_inv", cplx_to_json(z.sum_inv)},
            {"sum_inv_sq", cplx_to_json(z.sum_inv_sq)},
            {"sum_inv_abs", z.sum_inv_abs},
            {"genus_guess", z.genus_guess},
            {"truncation", z.truncation},
            {"counts", counts}};
}

NormalizedSymbol normalize_unimodular(const SymbolSpec& phi, double tol) {
    const Cplx p0 = eval_symbol(phi, 0.0);
    if (std::abs(std::abs(p0) - 1.0) > tol)
        throw HypothesisError("|phi(0)| = 1", "|phi(0)| = " + std::to_string(std::abs(p0)));
    if (std::abs(p0 - Cplx(1.0, 0.0)) <= 1e-15) return {phi, Cplx(1.0, 0.0)};
    const Cplx u = p0 / std::abs(p0);
    return {multiply_unimodular(phi, std::conj(u)), u};
}

Json t2_evidence_to_json(const T2Evidence& e) {
    Json prog = Json::array();
    for (const auto& [m, a] : e.progressions) prog.push_back({{"m", m}, {"a", opt_cplx(a)}});
    return {{"phi0", cplx_to_json(e.phi0)},
            {"phi1", cplx_to_json(e.phi1)},
            {"phi2", cplx_to_json(e.phi2)},
            {"second_deriv_margin", e.second_deriv_margin},
            {"margin_ok", e.margin_ok},
            {"progressions", prog},
            {"passes", e.passes}};
}

T2Evidence check_T2(const SymbolSpec& phi, int m_max, const ClassifierOptions& opt) {
    const NormalizedSymbol n = normalize_unimodular(phi);
    T2Evidence e;
    const DerivativeEstimate d = derivs_at_zero(n.phi, 2);
    e.phi0 = d.values[0];
    e.phi1 = d.values[1];
    e.phi2 = d.values[2];
    e.second_deriv_margin = std::abs(e.phi2 * e.phi0 - e.phi1 * e.phi1);
    e.margin_ok = e.second_deriv_margin > opt.second_deriv_tol;
    const auto grid = geometric_grid(1e-3, opt.progression_t_max, opt.progression_magnitudes);
    bool all = true;
    for (int m = 2; m <= m_max; ++m) {
        auto a = find_arith_progression(n.phi, m, opt.progression_directions, grid);
        all = all && a.has_value();
        e.progressions.emplace_back(m, a);
    }
    e.passes = e.margin_ok && all;
    return e;
}

Verdict classify(const SymbolSpec& phi, const std::optional<ZeroSetSummary>& zeros, const ClassifierOptions& opt) {
    Verdict v;
    const Cplx p0 = eval_symbol(phi, 0.0);
    v.evidence.push_back({"phi0", cplx_to_json(p0)});
    if (std::abs(std::abs(p0) - 1.0) > 1e-9) {
        v.reason = "|phi(0)| != 1: outside the unimodular setting";
        return v;
    }
    const NormalizedSymbol norm = normalize_unimodular(phi);
    v.rotation = norm.rotation;
    if (const auto* c = norm.phi.as<CatalogSymbol>(); c && c->kind == CatalogKind::Gaussian) {
        v.reason = "symbol is not of exponential type";
        return v;
    }
    const SymbolSpec structural = structural_form(norm.phi);
    if (is_constant(structural)) {
        v.reason = "constant symbol";
        return v;
    }

    const GrowthDecision growth = decide_growth(norm.phi, structural, opt);
    v.evidence.push_back({"subexponential", growth.subexponential});
    v.evidence.push_back({"growth_structural", growth.exact});
    if (growth.estimate) v.evidence.push_back({"growth_estimate", growth_to_json(*growth.estimate)});

    if (growth.subexponential) {
        v.outcome = Outcome::HasAlgebra;
        v.route = "T:Ts(a)";
        v.confidence = growth.exact ? Confidence::Exact : Confidence::Numerical;
        v.reason = "subexponential growth";
        return v;
    }

    if (structurally_zero_free(structural)) {
        v.outcome = Outcome::NoAlgebra;
        v.route = "T:Ts(b)1";
        v.confidence = growth.exact ? Confidence::Exact : Confidence::Numerical;
        v.reason = "zero-free symbol not of subexponential growth";
        v.evidence.push_back({"zero_free", true});
        return v;
    }

    if (const auto* p = structural.as<PolyTimesExp>()) {
        const Cplx a = p->a;
        const Cplx a1 = p->poly.size() > 1 ? p->poly[1] : Cplx(0.0, 0.0);
        const Cplx a2 = p->poly.size() > 2 ? p->poly[2] : Cplx(0.0, 0.0);
        const Cplx ratio = a1 / a;
        const double defect = std::abs(2.0 * a2 - a1 * a1);
        v.evidence.push_back({"a", cplx_to_json(a)});
        v.evidence.push_back({"a1_over_a", cplx_to_json(ratio)});
        v.evidence.push_back({"two_a2_minus_a1_sq", defect});
        if (std::abs(ratio.imag()) > 1e-12 || defect > 1e-12) {
            v.outcome = Outcome::HasAlgebra;
            v.route = "T:Ts(b)2";
            v.confidence = growth.exact ? Confidence::Exact : Confidence::Numerical;
            v.reason = std::abs(ratio.imag()) > 1e-12 ? "a1/a is not real" : "2 a2 != a1^2";
            return v;
        }
    }

    std::string pending_reason;
    if (auto hd = hadamard_data(norm.phi, structural, zeros)) {
        v.evidence.push_back({"zero_summary", zero_summary_to_json(hd->zeros)});
        v.evidence.push_back({"hadamard_a", cplx_to_json(hd->a)});
        v.evidence.push_back({"genus", hd->genus});
        const double s2 = std::abs(hd->zeros.sum_inv_sq);
        if (s2 <= opt.zero_sum_tol) {
            pending_reason = "sum of z_n^-2 vanishes on the truncated list";
        } else if (hd->genus == 0) {
            v.outcome = Outcome::HasAlgebra;
            v.route = "T:Ts(b)3(i)";
            v.confidence = hd->exact && growth.exact ? Confidence::Exact : Confidence::Numerical;
            v.reason = "convergent sum of 1/|z_n| and nonzero sum of z_n^-2";
            return v;
        } else if (std::abs(hd->a) > 1e-12) {
            v.outcome = Outcome::HasAlgebra;
            v.route = "T:Ts(b)3(ii)";
            v.confidence = hd->exact && growth.exact ? Confidence::Exact : Confidence::Numerical;
            v.reason = "divergent sum of 1/|z_n|, nonzero a and nonzero sum of z_n^-2";
            return v;
        } else {
            pending_reason = "genus 1 with a = 0: route (b)3(ii) does not apply";
        }
    }

    const T2Evidence t2 = check_T2(norm.phi, opt.m_max, opt);
    v.evidence.push_back({"T2", t2_evidence_to_json(t2)});
    if (t2.passes) {
        v.outcome = Outcome::HasAlgebra;
        v.route = "T:2";
        v.confidence = Confidence::Numerical;
        v.reason = "second-derivative condition and progressions up to m_max";
        return v;
    }

    const double pi = 3.14159265358979323846;
    for (int k = 0; k < opt.tma_directions; ++k) {
        const double theta = 2.0 * pi * k / opt.tma_directions;
        if (auto rr = check_Tma_conditions(norm.phi, theta, opt.progression_t_max, opt.growth_grid)) {
            v.evidence.push_back({"Tma", {{"theta", theta}, {"r", rr->first}, {"R", rr->second}}});
            v.outcome = Outcome::HasAlgebra;
            v.route = "T:ma";
            v.confidence = Confidence::Numerical;
            v.reason = "ray below one followed by growth beyond the indicator";
            return v;
        }
    }
    v.reason = pending_reason.empty() ? "no route of the decision tree applies" : pending_reason;
    return v;
}

Json tig_evidence_to_json(const TIGEvidence& e) {
    Json j{{"first_nonzero_index", e.first_nonzero_index},
           {"subexponential", e.subexponential ? Json(*e.subexponential) : Json(nullptr)},
           {"a_holds", e.a_holds},
           {"b_applicable", e.b_applicable},
           {"b_holds", e.b_holds},
           {"c_applicable", e.c_applicable},
           {"c_holds", e.c_holds},
           {"a1", cplx_to_json(e.a1)},
           {"a2", cplx_to_json(e.a2)},
           {"a", cplx_to_json(e.a)},
           {"holds", e.holds},
           {"free_generation_holds", e.free_generation_holds}};
    if (e.free_generation_ray)
        j["free_generation_ray"] = {{"theta", e.free_generation_ray->theta},
                                    {"r", e.free_generation_ray->r},
                                    {"R", e.free_generation_ray->R}};
    if (e.zeros) j["zeros"] = zero_summary_to_json(*e.zeros);
    return j;
}

TIGEvidence check_TIG(const SymbolSpec& phi, const std::optional<ZeroSetSummary>& zeros,
                      const ClassifierOptions& opt) {
    const NormalizedSymbol norm = normalize_unimodular(phi);
    const SymbolSpec structural = structural_form(norm.phi);
    TIGEvidence e;
    const TaylorPoly t = to_taylor(norm.phi, 12);
    for (int n = 1; n <= 12; ++n) {
        if (std::abs(t.coeffs[static_cast<std::size_t>(n)]) > 1e-10) {
            e.first_nonzero_index = n;
            break;
        }
    }
    if (!(norm.phi.as<CatalogSymbol>() && norm.phi.as<CatalogSymbol>()->kind == CatalogKind::Gaussian)) {
        const GrowthDecision g = decide_growth(norm.phi, structural, opt);
        e.subexponential = g.subexponential;
    }
    e.a_holds = e.subexponential.value_or(false) && e.first_nonzero_index > 0 && e.first_nonzero_index % 2 == 1;

    if (const auto* p = structural.as<PolyTimesExp>()) {
        e.a = p->a;
        e.a1 = p->poly.size() > 1 ? p->poly[1] : Cplx(0.0, 0.0);
        e.a2 = p->poly.size() > 2 ? p->poly[2] : Cplx(0.0, 0.0);
        e.b_applicable = p->a != Cplx(0.0, 0.0) && p->poly.size() > 1;
        if (e.b_applicable) {
            const bool nonreal = std::abs((e.a1 / e.a).imag()) > 1e-12;
            const bool second = std::abs(2.0 * e.a2 - e.a1 * e.a1) > 1e-12 && std::abs(e.a1 + e.a) > 1e-12;
            e.b_holds = nonreal || second;
        }
    }
    if (auto hd = hadamard_data(norm.phi, structural, zeros)) {
        e.zeros = hd->zeros;
        e.a = hd->a;
        e.c_applicable = true;
        const bool s2 = std::abs(hd->zeros.sum_inv_sq) > opt.zero_sum_tol;
        const bool a_nonzero = std::abs(hd->a) > 1e-12;
        const bool sum_ok = hd->genus == 1 || std::abs(hd->zeros.sum_inv - hd->a) > 1e-12;
        e.c_holds = s2 && a_nonzero && sum_ok;
    }
    if (e.first_nonzero_index > 0 && e.first_nonzero_index % 2 == 1) {
        const double pi = 3.14159265358979323846;
        for (int k = 0; k < opt.tma_directions && !e.free_generation_ray; ++k) {
            const double theta = 2.0 * pi * k / opt.tma_directions;
            if (auto rr = check_Tma_conditions(norm.phi, theta, opt.progression_t_max, opt.growth_grid))
                e.free_generation_ray = TIGEvidence::Ray{theta, rr->first, rr->second};
        }
        e.free_generation_holds = e.free_generation_ray.has_value();
    }
    if (e.a_holds) e.holds += "a";
    if (e.b_holds) e.holds += "b";
    if (e.c_holds) e.holds += "c";
    return e;
}

SymbolSpec rescale_symbol(const SymbolSpec& phi, Cplx a) {
    if (a == Cplx(0.0, 0.0)) throw InputError("rescale_symbol: factor must be nonzero");
    if (const auto* c = phi.as<CatalogSymbol>()) {
        CatalogSymbol r = *c;
        r.scale *= a;
        return SymbolSpec(r);
    }
    if (const auto* e = phi.as<ExpPolySymbol>()) {
        std::vector<Term> terms = e->f.terms();
        for (auto& t : terms) t.freq *= a;
        return SymbolSpec::exp_poly(ExpPoly(std::move(terms)));
    }
    if (const auto* p = phi.as<PolyTimesExp>()) {
        std::vector<Cplx> poly = p->poly;
        Cplx ak(1.0, 0.0);
        for (auto& x : poly) {
            x *= ak;
            ak *= a;
        }
        return SymbolSpec::poly_times_exp(std::move(poly), p->a * a, p->b);
    }
    const auto& h = *phi.as<HadamardTrunc>();
    std::vector<Cplx> zeros = h.zeros;
    for (auto& z : zeros) z /= a;
    return SymbolSpec::hadamard(h.a * a, h.b, std::move(zeros), h.genus, h.truncation);
}

}  // namespace hyperalg
