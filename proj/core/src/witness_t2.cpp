#include <algorithm>
#include <cmath>
#include <sstream>

#include "hyperalg/classifier.hpp"
#include "hyperalg/dynamics.hpp"
#include "hyperalg/witness.hpp"

namespace hyperalg {

namespace {

std::string tuple_text(const LatticeTuple& t) {
    std::ostringstream os;
    os << "u=(";
    for (std::size_t i = 0; i < t.u[0].size(); ++i) os << (i ? "," : "") << t.u[0][i];
    os << ") v=(";
    for (std::size_t i = 0; i < t.v.size(); ++i) os << (i ? "," : "") << t.v[i];
    os << ")";
    return os.str();
}

}  // namespace

WitnessReport construct_witness_T2(const SymbolSpec& phi, int m, const ExpPoly& A, const ExpPoly& B, double epsilon,
                                   const DiskGrid& grid, long long n_max, const std::optional<WitnessParams>& params,
                                   const WitnessOptions& opt) {
    if (m < 2) throw InputError("witness: m must be >= 2");
    if (!(epsilon > 0.0)) throw InputError("witness: epsilon must be > 0");
    if (n_max < opt.n_start) throw InputError("witness: N_max below the starting N");
    grid.validate();
    if (opt.check_hypotheses) {
        ClassifierOptions copt;
        copt.m_max = m;
        const T2Evidence ev = check_T2(phi, m, copt);
        if (!ev.passes) throw HypothesisError("T:2", "second-derivative margin or progressions fail for m = " + std::to_string(m));
    }

    WitnessReport rep;
    rep.route = "T:2";
    rep.params = params ? *params : prepare_params_T2(phi, m, grid, epsilon, n_max);
    if (rep.params.m != m) throw InputError("witness: parameters were prepared for another m");
    rep.params.grid = grid;
    rep.params.epsilon = epsilon;
    rep.params.n_max = n_max;
    rep.params.theta_margin = opt.theta_margin;
    check_placement_T2(rep.params, A, B);

    std::vector<Cplx> alpha, a, beta, b, lambda, phi_beta;
    for (const auto& t : A.terms()) {
        alpha.push_back(t.freq);
        a.push_back(t.coeff);
    }
    for (const auto& t : B.terms()) {
        beta.push_back(t.freq);
        b.push_back(t.coeff);
        lambda.push_back(t.freq / double(m));
        phi_beta.push_back(eval_symbol(phi, t.freq));
    }
    rep.params.lambda = lambda;
    const int pa = static_cast<int>(alpha.size()), pb = static_cast<int>(beta.size());

    for (int j = 1; j <= m; ++j) rep.targets.push_back({IntVec{j}, j == m ? B : ExpPoly()});

    // Theta table over L_m^* and L_1..L_{m-1}.
    const LatticeSet set = enumerate_lattice(pa, pb, m);
    auto add_rows = [&](const std::vector<LatticeTuple>& tuples, int target) {
        for (const auto& t : tuples) {
            const ThetaValue tv = theta_ratio(phi, t.u[0], t.v, lambda, alpha, m);
            ThetaEntry e;
            e.target = target;
            e.tuple = t;
            e.frequency = tv.frequency;
            e.theta = tv.theta;
            e.case_tag = tv.case_tag;
            e.decay = "geometric";
            double lc = std::log(std::abs(multinomial_gamma(t.u[0], t.v, a)));
            for (int i = 0; i < pb; ++i)
                lc += double(t.v[static_cast<std::size_t>(i)]) / m * std::log(std::abs(b[static_cast<std::size_t>(i)]));
            e.log_constant = lc + std::abs(tv.frequency) * grid.radius;
            rep.theta_table.push_back(std::move(e));
        }
    };
    for (int j = 1; j < m; ++j) add_rows(set.lower[static_cast<std::size_t>(j - 1)], j - 1);
    add_rows(set.star, m - 1);
    for (const auto& e : rep.theta_table)
        if (!(e.theta <= 1.0 - opt.theta_margin)) {
            std::ostringstream os;
            os << "tuple " << tuple_text(e.tuple) << " for power " << rep.targets[static_cast<std::size_t>(e.target)].exponents[0]
               << " has theta " << e.theta << " (case " << e.case_tag << ")";
            throw HypothesisError("theta <= 1 - margin", os.str());
        }

    for (long long N = opt.n_start; N <= n_max; N *= 2) {
        std::vector<Term> rterms = A.terms();
        std::vector<Cplx> c;
        for (int j = 0; j < pb; ++j) {
            const auto uj = static_cast<std::size_t>(j);
            c.push_back(solve_coeff(b[uj], m, phi_beta[uj], N));
            rterms.push_back({c.back(), lambda[uj]});
        }
        const ExpPoly f(std::move(rterms));
        TraceStep step;
        step.q = N;
        for (Cplx x : c) step.max_coeff = std::max(step.max_coeff, std::abs(x));
        for (const auto& e : rep.theta_table) step.bound += std::exp(e.log_constant + double(N) * std::log(e.theta));
        std::vector<double> residuals;
        for (const auto& t : rep.targets) {
            const ExpPoly image = apply_symbol_power(phi, pow_exppoly(f, t.exponents[0]), N);
            residuals.push_back(sup_distance(image, t.target, grid));
            step.residual = std::max(step.residual, residuals.back());
        }
        rep.trace.push_back(step);
        if (step.residual <= epsilon && step.bound <= epsilon) {
            rep.generators = {f};
            rep.q = N;
            rep.residuals = residuals;
            rep.coefficients = c;
            rep.bound_sum = step.bound;
            for (int j = 0; j < pb; ++j) {
                const auto uj = static_cast<std::size_t>(j);
                // c_j^m phi(m lambda_j)^N, evaluated in polar form
                const double lm = m * std::log(std::abs(c[uj])) + double(N) * std::log(std::abs(phi_beta[uj]));
                const double ang = m * std::arg(c[uj]) + std::remainder(double(N) * std::arg(phi_beta[uj]), 2.0 * 3.14159265358979323846);
                rep.survivor_values.push_back(std::polar(std::exp(lm), ang));
            }
            return rep;
        }
    }
    throw ExhaustionError("witness: N_max = " + std::to_string(n_max) + " reached before residuals fell below epsilon",
                          trace_to_csv(rep.trace));
}

}  // namespace hyperalg
