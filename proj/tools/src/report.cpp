#include "hyperalg_cli/report.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "hyperalg/dynamics.hpp"
#include "hyperalg/growth.hpp"
#include "hyperalg/witness.hpp"
#include "hyperalg/witness_params.hpp"

namespace hyperalg::cli {

namespace {

const char* placement_name(Placement p) {
    switch (p) {
        case Placement::Auto: return "auto";
        case Placement::Given: return "given";
        case Placement::LeastSquares: return "least_squares";
    }
    return "?";
}

Placement placement_from_name(const std::string& s) {
    if (s == "auto") return Placement::Auto;
    if (s == "given") return Placement::Given;
    if (s == "least_squares") return Placement::LeastSquares;
    throw SchemaError("placement: expected auto, given or least_squares, got '" + s + "'");
}

std::vector<Cplx> cplx_list(const Json& j, const char* what) {
    if (!j.is_array()) throw SchemaError(std::string(what) + ": expected an array");
    std::vector<Cplx> out;
    for (const auto& x : j) out.push_back(cplx_from_json(x, what));
    return out;
}

Json cplx_list_json(const std::vector<Cplx>& v) {
    Json a = Json::array();
    for (const auto& z : v) a.push_back(cplx_to_json(z));
    return a;
}

template <class T>
T get_as(const Json& j, const char* key) {
    try {
        return j.at(key).get<T>();
    } catch (const nlohmann::json::exception&) {
        throw SchemaError(std::string("config: field '") + key + "' has the wrong type");
    }
}

// Target blocks are checked here so malformed targets fail before any pipeline starts.
void validate_targets(const ExperimentConfig& c) {
    const Json& t = c.targets;
    if (!t.is_object()) throw SchemaError("targets: expected an object");
    if (c.command == Command::Witness) {
        switch (c.placement) {
            case Placement::Auto:
                require_keys(t, {"a_coeff", "b_coeff"}, "targets (auto)");
                if (t.contains("a_coeff")) cplx_from_json(t["a_coeff"], "a_coeff");
                if (t.contains("b_coeff")) cplx_from_json(t["b_coeff"], "b_coeff");
                break;
            case Placement::Given:
                require_keys(t, {"A", "B"}, "targets (given)");
                exppoly_from_json(require_field(t, "A", "targets"));
                exppoly_from_json(require_field(t, "B", "targets"));
                break;
            case Placement::LeastSquares:
                require_keys(t, {"A", "B"}, "targets (least_squares)");
                cplx_list(require_field(t, "A", "targets"), "A");
                cplx_list(require_field(t, "B", "targets"), "B");
                break;
        }
        return;
    }
    const auto dim = static_cast<std::size_t>(c.exponents.dim());
    switch (c.placement) {
        case Placement::Auto:
            require_keys(t, {"b_coeff"}, "targets (auto)");
            if (t.contains("b_coeff")) cplx_from_json(t["b_coeff"], "b_coeff");
            break;
        case Placement::Given: {
            require_keys(t, {"B", "L"}, "targets (given)");
            exppoly_from_json(require_field(t, "B", "targets"));
            const Json& L = require_field(t, "L", "targets");
            if (!L.is_array() || L.size() != dim) throw SchemaError("targets.L: one term list per generator");
            for (const auto& l : L) exppoly_from_json(l);
            break;
        }
        case Placement::LeastSquares: {
            require_keys(t, {"B", "L"}, "targets (least_squares)");
            cplx_list(require_field(t, "B", "targets"), "B");
            const Json& L = require_field(t, "L", "targets");
            if (!L.is_array() || L.size() != dim) throw SchemaError("targets.L: one polynomial per generator");
            for (const auto& l : L) cplx_list(l, "L");
            break;
        }
    }
}

}  // namespace

std::string command_name(Command c) {
    switch (c) {
        case Command::Analyze: return "analyze";
        case Command::Classify: return "classify";
        case Command::Witness: return "witness";
        case Command::WitnessMulti: return "witness-multi";
        case Command::Verify: return "verify";
    }
    return "?";
}

std::optional<Command> command_from_name(const std::string& name) {
    for (auto c : {Command::Analyze, Command::Classify, Command::Witness, Command::WitnessMulti, Command::Verify})
        if (command_name(c) == name) return c;
    return std::nullopt;
}

ExperimentConfig parse_config(const Json& j, const Overrides& ov) {
    if (!j.is_object()) throw SchemaError("config: expected a JSON object");
    if (!j.contains("command") || !j["command"].is_string()) throw SchemaError("config: missing field 'command'");
    const std::string name = j["command"].get<std::string>();
    const auto cmd = command_from_name(name);
    if (!cmd) throw SchemaError("config: unknown command '" + name + "'");

    ExperimentConfig c;
    c.command = *cmd;
    switch (c.command) {
        case Command::Analyze:
        case Command::Classify:
            require_keys(j, {"command", "symbol", "seed", "output", "m_max", "growth_grid", "directions", "zeros"},
                         "config");
            break;
        case Command::Witness:
            require_keys(j, {"command", "symbol", "seed", "output", "grid", "epsilon", "n_max", "m", "placement",
                             "targets", "fit_terms", "verify"},
                         "config");
            break;
        case Command::WitnessMulti:
            require_keys(j, {"command", "symbol", "seed", "output", "grid", "epsilon", "n_max", "exponents",
                             "placement", "targets", "fit_terms", "verify"},
                         "config");
            break;
        case Command::Verify:
            require_keys(j, {"command", "symbol", "seed", "output", "grid", "epsilon", "report"}, "config");
            break;
    }

    try {
        c.symbol = symbol_from_json(require_field(j, "symbol", "config"));
        if (j.contains("seed")) c.seed = get_as<long long>(j, "seed");
        if (j.contains("output") && !j["output"].is_null()) c.output = get_as<std::string>(j, "output");
        if (j.contains("grid")) c.grid = grid_from_json(j["grid"]);
        if (j.contains("epsilon")) c.epsilon = get_as<double>(j, "epsilon");
        if (j.contains("n_max")) c.n_max = get_as<long long>(j, "n_max");
        if (j.contains("m_max")) c.m_max = get_as<int>(j, "m_max");
        if (j.contains("growth_grid")) c.growth_grid = get_as<std::vector<double>>(j, "growth_grid");
        if (j.contains("directions")) c.directions = get_as<int>(j, "directions");
        if (j.contains("zeros")) {
            const Json& z = j["zeros"];
            require_keys(z, {"list", "truncation"}, "zeros");
            c.zeros = cplx_list(require_field(z, "list", "zeros"), "zeros.list");
            c.zero_truncation = z.contains("truncation") ? get_as<std::size_t>(z, "truncation") : c.zeros->size();
            if (c.zero_truncation > c.zeros->size()) throw SchemaError("zeros.truncation exceeds the list length");
        }
        if (j.contains("m")) c.m = get_as<int>(j, "m");
        if (j.contains("exponents")) c.exponents.tuples = get_as<std::vector<IntVec>>(j, "exponents");
        if (j.contains("placement")) c.placement = placement_from_name(get_as<std::string>(j, "placement"));
        if (j.contains("targets")) c.targets = j["targets"];
        if (j.contains("fit_terms")) c.fit_terms = get_as<int>(j, "fit_terms");
        if (j.contains("verify")) c.verify = get_as<bool>(j, "verify");
        if (j.contains("report")) c.report = j["report"];
    } catch (const SchemaError&) {
        throw;
    } catch (const InputError& e) {
        throw SchemaError(e.what());
    } catch (const nlohmann::json::exception& e) {
        throw SchemaError(std::string("config: ") + e.what());
    }

    if (ov.seed) c.seed = *ov.seed;
    if (ov.grid_radius) c.grid.radius = *ov.grid_radius;
    if (ov.grid_samples) c.grid.samples = *ov.grid_samples;
    if (ov.epsilon) c.epsilon = *ov.epsilon;
    if (ov.n_max) c.n_max = *ov.n_max;

    try {
        c.grid.validate();
    } catch (const InputError& e) {
        throw SchemaError(e.what());
    }
    if (!(c.epsilon > 0.0) || !std::isfinite(c.epsilon)) throw SchemaError("epsilon: must be a positive number");
    if (c.n_max < 8) throw SchemaError("n_max: must be at least 8");
    if (c.m_max < 2) throw SchemaError("m_max: must be at least 2");
    if (c.directions < 1) throw SchemaError("directions: must be positive");
    if (c.growth_grid.size() < 4) throw SchemaError("growth_grid: at least 4 radii required");
    for (std::size_t i = 0; i < c.growth_grid.size(); ++i)
        if (!(c.growth_grid[i] > 0.0) || (i > 0 && c.growth_grid[i] <= c.growth_grid[i - 1]))
            throw SchemaError("growth_grid: radii must be positive and increasing");
    if (c.fit_terms < 1 || c.fit_terms > 64) throw SchemaError("fit_terms: must lie in 1..64");

    if (c.command == Command::Witness) {
        if (c.m < 2) throw SchemaError("m: the witness construction needs m >= 2, got " + std::to_string(c.m));
    }
    if (c.command == Command::WitnessMulti) {
        if (!j.contains("exponents")) throw SchemaError("config: missing field 'exponents'");
        try {
            c.exponents.validate();
        } catch (const InputError& e) {
            throw SchemaError(std::string("exponents: ") + e.what());
        }
        if (c.exponents.dim() < 2) throw SchemaError("exponents: at least two generators required");
    }
    if (c.command == Command::Witness || c.command == Command::WitnessMulti) {
        if (c.placement != Placement::Auto && !j.contains("targets"))
            throw SchemaError("config: placement '" + std::string(placement_name(c.placement)) + "' needs 'targets'");
        try {
            validate_targets(c);
        } catch (const SchemaError&) {
            throw;
        } catch (const InputError& e) {
            throw SchemaError(e.what());
        } catch (const nlohmann::json::exception& e) {
            throw SchemaError(std::string("targets: ") + e.what());
        }
    }
    if (c.command == Command::Verify) {
        if (!j.contains("report")) throw SchemaError("config: missing field 'report'");
        if (c.report.is_string()) {
            std::ifstream in(c.report.get<std::string>());
            if (!in) throw SchemaError("report: cannot open '" + c.report.get<std::string>() + "'");
            try {
                c.report = Json::parse(in);
            } catch (const nlohmann::json::exception& e) {
                throw SchemaError(std::string("report: ") + e.what());
            }
        }
        if (c.report.is_object() && c.report.contains("schema")) {
            // A full run report: take the witness payload out of it.
            if (!c.report.contains("outcome") || !c.report["outcome"].contains("witness"))
                throw SchemaError("report: run report carries no witness");
            c.report = c.report["outcome"]["witness"];
        }
        WitnessReport w;
        try {
            w = witness_report_from_json(c.report);
        } catch (const SchemaError&) {
            throw;
        } catch (const nlohmann::json::exception& e) {
            throw SchemaError(std::string("report: ") + e.what());
        }
        if (!j.contains("grid") && !ov.grid_radius && !ov.grid_samples) c.grid = w.params.grid;
        if (!j.contains("epsilon") && !ov.epsilon) c.epsilon = w.params.epsilon;
    }
    return c;
}

Json config_to_json(const ExperimentConfig& c) {
    Json j;
    j["command"] = command_name(c.command);
    j["symbol"] = symbol_to_json(c.symbol);
    j["seed"] = c.seed;
    j["output"] = c.output ? Json(*c.output) : Json(nullptr);
    switch (c.command) {
        case Command::Analyze:
        case Command::Classify:
            j["m_max"] = c.m_max;
            j["growth_grid"] = c.growth_grid;
            j["directions"] = c.directions;
            if (c.zeros) j["zeros"] = {{"list", cplx_list_json(*c.zeros)}, {"truncation", c.zero_truncation}};
            break;
        case Command::Witness:
        case Command::WitnessMulti:
            j["grid"] = grid_to_json(c.grid);
            j["epsilon"] = c.epsilon;
            j["n_max"] = c.n_max;
            if (c.command == Command::Witness)
                j["m"] = c.m;
            else
                j["exponents"] = c.exponents.tuples;
            j["placement"] = placement_name(c.placement);
            j["targets"] = c.targets;
            j["fit_terms"] = c.fit_terms;
            j["verify"] = c.verify;
            break;
        case Command::Verify:
            j["grid"] = grid_to_json(c.grid);
            j["epsilon"] = c.epsilon;
            j["report"] = c.report;
            break;
    }
    return j;
}

Json RunReport::payload() const {
    Json j;
    j["schema"] = kReportSchema;
    j["version"] = kVersion;
    j["command"] = command;
    j["status"] = status;
    j["exit_code"] = exit_code;
    j["config"] = config;
    j["outcome"] = outcome;
    j["warnings"] = warnings;
    Json files = Json::array();
    for (const auto& f : side_files) files.push_back(f.name);
    j["side_files"] = files;
    return j;
}

Json RunReport::to_json() const {
    Json j = payload();
    j["wall_time"] = wall_time;
    return j;
}

namespace {

std::optional<ZeroSetSummary> zero_summary(const ExperimentConfig& c) {
    if (!c.zeros) return std::nullopt;
    return summarize_zeros(*c.zeros, c.zero_truncation);
}

ClassifierOptions classifier_options(const ExperimentConfig& c) {
    ClassifierOptions o;
    o.m_max = c.m_max;
    o.growth_grid = c.growth_grid;
    return o;
}

void add_confidence_warning(const Verdict& v, RunReport& r) {
    if (v.outcome != Outcome::Unknown && v.confidence == Confidence::Numerical)
        r.warnings.push_back("confidence=numerical: verdict " + v.route + " rests on sampled evidence");
    if (v.outcome == Outcome::Unknown) r.warnings.push_back("no criterion decided: " + v.reason);
}

void run_classify(const ExperimentConfig& c, RunReport& r) {
    const Verdict v = classify(c.symbol, zero_summary(c), classifier_options(c));
    r.outcome["verdict"] = verdict_to_json(v);
    add_confidence_warning(v, r);
}

void run_analyze(const ExperimentConfig& c, RunReport& r) {
    const auto zs = zero_summary(c);
    const ClassifierOptions opt = classifier_options(c);

    const GrowthEstimate g = estimate_order_type(c.symbol, c.growth_grid);
    r.outcome["growth"] = {{"order", g.order},       {"type", g.type},   {"type_valid", g.type_valid},
                           {"degenerate", g.degenerate}, {"r_lo", g.r_lo}, {"r_hi", g.r_hi},
                           {"quality", g.quality}};
    r.side_files.push_back({"growth.csv", g.to_csv()});

    std::ostringstream ind;
    ind.precision(17);
    ind << "theta,indicator\n";
    Json ind_json = Json::array();
    for (int k = 0; k < c.directions; ++k) {
        const double theta = 2.0 * std::numbers::pi * k / c.directions;
        const double h = indicator(c.symbol, theta, c.growth_grid);
        ind << theta << ',' << h << '\n';
        ind_json.push_back({theta, h});
    }
    r.outcome["indicator"] = ind_json;
    r.side_files.push_back({"indicator.csv", ind.str()});

    const DerivativeEstimate d = derivs_at_zero(c.symbol, 2);
    r.outcome["derivatives"] = {{"values", cplx_list_json(d.values)}, {"error", d.error}};

    try {
        const T2Evidence t2 = check_T2(c.symbol, c.m_max, opt);
        r.outcome["t2"] = t2_evidence_to_json(t2);
        // Ray scan through the first progression found, for plotting |phi| along it.
        for (const auto& [m, a] : t2.progressions) {
            if (!a) continue;
            const RayScan scan = scan_ray(c.symbol, std::arg(*a), linear_grid(0.0, (m + 1) * std::abs(*a), 200));
            r.side_files.push_back({"ray_scan.csv", scan.to_csv()});
            break;
        }
    } catch (const HypothesisError& e) {
        r.outcome["t2"] = nullptr;
        r.warnings.push_back(std::string("T:2 evidence skipped: ") + e.what());
    }

    const TIGEvidence tig = check_TIG(c.symbol, zs, opt);
    r.outcome["tig"] = tig_evidence_to_json(tig);
    if (zs) r.outcome["zeros"] = zero_summary_to_json(*zs);

    const Verdict v = classify(c.symbol, zs, opt);
    r.outcome["verdict"] = verdict_to_json(v);
    add_confidence_warning(v, r);
}

ExpPoly fit_target(const Json& coeffs, Cplx lo, Cplx hi, const DiskGrid& grid, int count, const char* what,
                   Json& fits) {
    const std::vector<Cplx> p = cplx_list(coeffs, what);
    const PlacementFit fit = fit_on_segment(TaylorPoly(p, static_cast<int>(p.size()) - 1), lo, hi, grid, count);
    fits.push_back({{"target", what}, {"fit_error", fit.fit_error}, {"terms", exppoly_to_json(fit.fitted)}});
    return fit.fitted;
}

void attach_witness(const ExperimentConfig& c, const WitnessReport& w, RunReport& r) {
    r.outcome["witness"] = witness_report_to_json(w);
    r.side_files.push_back({"trace.csv", trace_to_csv(w.trace)});
    r.side_files.push_back({"theta_table.csv", theta_table_to_csv(w.theta_table)});
    if (!c.verify) return;
    const VerifyResult v = verify_witness(c.symbol, w, c.grid, c.epsilon);
    r.outcome["verification"] = verify_result_to_json(v);
    r.side_files.push_back({"orbit_trace.csv", v.trace.to_csv()});
    if (!v.pass) {
        r.status = "failed";
        r.exit_code = kExitHypothesis;
        r.warnings.push_back("verification failed: " + v.reason);
    }
}

void run_witness(const ExperimentConfig& c, RunReport& r) {
    const WitnessParams p = prepare_params_T2(c.symbol, c.m, c.grid, c.epsilon, c.n_max);
    ExpPoly A, B;
    Json fits = Json::array();
    switch (c.placement) {
        case Placement::Auto: {
            const Cplx ac = c.targets.contains("a_coeff") ? cplx_from_json(c.targets["a_coeff"], "a_coeff") : Cplx(1.0, 0.0);
            const Cplx bc = c.targets.contains("b_coeff") ? cplx_from_json(c.targets["b_coeff"], "b_coeff") : Cplx(1.0, 0.0);
            A = ExpPoly::exponential(ac, p.w);
            B = ExpPoly::exponential(bc, p.w0);
            break;
        }
        case Placement::Given:
            A = exppoly_from_json(c.targets["A"]);
            B = exppoly_from_json(c.targets["B"]);
            break;
        case Placement::LeastSquares: {
            // A on a chord of D(w, delta) through its centre, B on [w0/2, w0].
            const Cplx dir = p.w / std::abs(p.w);
            const Cplx half = 0.9 * p.delta * dir;
            A = fit_target(c.targets["A"], p.w - half, p.w + half, c.grid, c.fit_terms, "A", fits);
            B = fit_target(c.targets["B"], p.w0 / 2.0, p.w0, c.grid, c.fit_terms, "B", fits);
            break;
        }
    }
    if (!fits.empty()) r.outcome["placement_fit"] = fits;
    const WitnessReport w = construct_witness_T2(c.symbol, c.m, A, B, c.epsilon, c.grid, c.n_max, p);
    attach_witness(c, w, r);
}

void run_witness_multi(const ExperimentConfig& c, RunReport& r) {
    const WitnessParams p = prepare_params_multi(c.symbol, c.exponents, c.grid, c.epsilon, c.n_max);
    const auto dim = static_cast<std::size_t>(c.exponents.dim());
    std::vector<ExpPoly> L;
    ExpPoly B;
    Json fits = Json::array();
    switch (c.placement) {
        case Placement::Auto: {
            const Cplx bc = c.targets.contains("b_coeff") ? cplx_from_json(c.targets["b_coeff"], "b_coeff") : Cplx(1.0, 0.0);
            L.assign(dim, ExpPoly::exponential(Cplx(1.0, 0.0), p.lambda_hi));
            B = ExpPoly::exponential(bc, p.gamma_hi);
            break;
        }
        case Placement::Given:
            for (const auto& l : c.targets["L"]) L.push_back(exppoly_from_json(l));
            B = exppoly_from_json(c.targets["B"]);
            break;
        case Placement::LeastSquares:
            for (const auto& l : c.targets["L"])
                L.push_back(fit_target(l, p.lambda_lo, p.lambda_hi, c.grid, c.fit_terms, "L", fits));
            B = fit_target(c.targets["B"], p.gamma_lo, p.gamma_hi, c.grid, c.fit_terms, "B", fits);
            break;
    }
    if (!fits.empty()) r.outcome["placement_fit"] = fits;
    const WitnessReport w = construct_witness_multi(c.symbol, c.exponents, B, L, c.epsilon, c.grid, c.n_max, p);
    attach_witness(c, w, r);
}

void run_verify(const ExperimentConfig& c, RunReport& r) {
    const WitnessReport w = witness_report_from_json(c.report);
    const VerifyResult v = verify_witness(c.symbol, w, c.grid, c.epsilon);
    r.outcome["verification"] = verify_result_to_json(v);
    r.outcome["orbit_trace"] = orbit_trace_to_json(v.trace);
    r.side_files.push_back({"orbit_trace.csv", v.trace.to_csv()});
    if (!v.pass) {
        r.status = "failed";
        r.exit_code = kExitHypothesis;
        r.warnings.push_back("verification failed: " + v.reason);
    }
}

void record_error(RunReport& r, const char* type, const std::string& message, int code,
                  const std::string& check = "") {
    r.status = "error";
    r.exit_code = code;
    r.outcome = Json::object();
    r.side_files.clear();
    Json e = {{"type", type}, {"message", message}};
    if (!check.empty()) e["check"] = check;
    r.outcome["error"] = e;
}

template <class F>
void guarded(RunReport& r, F&& body) {
    try {
        body();
    } catch (const SchemaError& e) {
        record_error(r, "schema", e.what(), kExitSchema);
    } catch (const InputError& e) {
        record_error(r, "input", e.what(), kExitSchema);
    } catch (const HypothesisError& e) {
        record_error(r, "hypothesis", e.what(), kExitHypothesis, e.check());
    } catch (const ExhaustionError& e) {
        record_error(r, "exhaustion", e.what(), kExitExhausted);
        r.side_files.push_back({"trace.csv", e.trace_csv()});
    } catch (const ConvergenceError& e) {
        record_error(r, "convergence", e.what(), kExitOther);
    } catch (const RangeError& e) {
        record_error(r, "range", e.what(), kExitOther);
    } catch (const Error& e) {
        record_error(r, "error", e.what(), kExitOther);
    } catch (const nlohmann::json::exception& e) {
        record_error(r, "schema", e.what(), kExitSchema);
    }
}

}  // namespace

RunReport run(const ExperimentConfig& config) {
    const auto t0 = std::chrono::steady_clock::now();
    RunReport r;
    r.command = command_name(config.command);
    r.status = "ok";
    r.config = config_to_json(config);
    r.outcome = Json::object();
    guarded(r, [&] {
        switch (config.command) {
            case Command::Analyze: run_analyze(config, r); break;
            case Command::Classify: run_classify(config, r); break;
            case Command::Witness: run_witness(config, r); break;
            case Command::WitnessMulti: run_witness_multi(config, r); break;
            case Command::Verify: run_verify(config, r); break;
        }
    });
    r.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

RunReport run_json(const Json& config, const Overrides& ov) {
    std::optional<ExperimentConfig> parsed;
    RunReport r;
    r.command = config.is_object() && config.contains("command") && config["command"].is_string()
                    ? config["command"].get<std::string>()
                    : "";
    r.config = config;
    r.outcome = Json::object();
    guarded(r, [&] { parsed = parse_config(config, ov); });
    if (!parsed) return r;
    return run(*parsed);
}

std::vector<CatalogEntry> catalog_list() {
    return {
        {"cos", SymbolSpec::cos(), Outcome::HasAlgebra, "T:2", "cos(z)"},
        {"sin+exp(-z)", SymbolSpec::sin_plus_exp_neg(), Outcome::HasAlgebra, "T:2", "sin(z) + exp(-z)"},
        {"sin(pi z)/(pi z)", SymbolSpec::sinc_pi(), Outcome::HasAlgebra, "T:2",
         "genus one with vanishing exponential part; decided by the second-derivative test"},
        {"exp(a z)", SymbolSpec::exp(Cplx(1.0, 0.0)), Outcome::NoAlgebra, "T:Ts(b)1",
         "zero-free; template with a = 1"},
        {"exp(a z) p(z)", SymbolSpec::exp_times_poly(Cplx(1.0, 0.0), {Cplx(1.0, 0.0), Cplx(0.0, 1.0)}),
         Outcome::HasAlgebra, "T:Ts(b)2", "template with a = 1, p(z) = 1 + iz"},
        {"exp(z^2)", SymbolSpec::gaussian(), Outcome::Unknown, "",
         "not of exponential type; used only by the witness constructions"},
    };
}

Json catalog_to_json(const std::vector<CatalogEntry>& entries) {
    Json a = Json::array();
    for (const auto& e : entries)
        a.push_back({{"name", e.name},
                     {"symbol", symbol_to_json(e.symbol)},
                     {"expected", outcome_name(e.expected)},
                     {"route", e.route},
                     {"note", e.note}});
    return a;
}

}  // namespace hyperalg::cli
