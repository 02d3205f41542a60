#include <algorithm>
#include <cmath>
#include <sstream>

#include "hyperalg/dynamics.hpp"
#include "hyperalg/witness.hpp"

namespace hyperalg {

namespace {

constexpr double kPi = 3.14159265358979323846;

int total(const IntVec& x) {
    int s = 0;
    for (int v : x) s += v;
    return s;
}

IntVec concat(IntVec a, const IntVec& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

}  // namespace

WitnessReport construct_witness_multi(const SymbolSpec& phi, const ExponentSet& A, const ExpPoly& B,
                                      const std::vector<ExpPoly>& L, double epsilon, const DiskGrid& grid,
                                      long long n_max, const std::optional<WitnessParams>& params,
                                      const WitnessOptions& opt) {
    A.validate();
    const int dim = A.dim();
    if (static_cast<int>(L.size()) != dim) throw InputError("witness-multi: one target per generator required");
    if (!(epsilon > 0.0)) throw InputError("witness-multi: epsilon must be > 0");
    if (n_max < opt.n_start) throw InputError("witness-multi: n_max below the starting n");
    if (B.is_zero()) throw InputError("witness-multi: B must be nonzero");
    for (const auto& l : L)
        if (l.is_zero()) throw InputError("witness-multi: generator targets must be nonzero");
    grid.validate();

    WitnessReport rep;
    rep.params = params ? *params : prepare_params_multi(phi, A, grid, epsilon, n_max);
    rep.params.grid = grid;
    rep.params.epsilon = epsilon;
    rep.params.n_max = n_max;
    rep.params.theta_margin = opt.theta_margin;
    rep.route = rep.params.route;
    const WeightSelection sel = select_weights(A);
    if (!sel.a1_holds) throw HypothesisError("lead-tuple weight dominance", "weight functional does not separate beta within A1");
    const int m = sel.m, dA = sel.d_A;
    const auto& perm = sel.perm;
    const auto& k = sel.k;

    // Work in permuted coordinates: generator i is L[perm[i]].
    std::vector<std::vector<Cplx>> lam(static_cast<std::size_t>(dim)), coef(static_cast<std::size_t>(dim));
    IntVec pu;
    std::vector<Cplx> a_flat;
    for (int i = 0; i < dim; ++i) {
        const auto ui = static_cast<std::size_t>(i);
        for (const auto& t : L[static_cast<std::size_t>(perm[ui])].terms()) {
            if (!on_segment(t.freq, rep.params.lambda_lo, rep.params.lambda_hi))
                throw InputError("frequency placement: generator frequency outside the lambda window");
            lam[ui].push_back(t.freq);
            coef[ui].push_back(t.coeff);
        }
        pu.push_back(static_cast<int>(lam[ui].size()));
    }
    std::vector<Cplx> gamma, b, phi_mg;
    for (const auto& t : B.terms()) {
        if (!on_segment(t.freq, rep.params.gamma_lo, rep.params.gamma_hi))
            throw InputError("frequency placement: B frequency outside the gamma window");
        gamma.push_back(t.freq / double(m));
        b.push_back(t.coeff);
        phi_mg.push_back(eval_symbol(phi, t.freq));
    }
    rep.params.lambda = gamma;
    const int pb = static_cast<int>(gamma.size());
    long long K_beta = 0;
    for (int i = 1; i < dim; ++i) K_beta += k[static_cast<std::size_t>(i)] * sel.beta_permuted[static_cast<std::size_t>(i)];

    for (const auto& alpha : A.tuples) rep.targets.push_back({alpha, alpha == sel.beta ? B : ExpPoly()});

    for (std::size_t ti = 0; ti < A.tuples.size(); ++ti) {
        const IntVec ap = permute(A.tuples[ti], perm);
        const bool is_beta = A.tuples[ti] == sel.beta;
        for (const auto& t : multi_lattice(ap, pu, pb)) {
            ThetaEntry e;
            e.target = static_cast<int>(ti);
            e.tuple = t;
            Cplx freq(0.0, 0.0), au(1.0, 0.0);
            int su = 0;
            double mult = multinomial(concat(t.u[0], t.v));
            for (int i = 0; i < dim; ++i) {
                const auto ui = static_cast<std::size_t>(i);
                if (i > 0) mult *= multinomial(concat(t.u[ui], IntVec{t.l[ui - 1]}));
                for (std::size_t j = 0; j < t.u[ui].size(); ++j) {
                    freq += double(t.u[ui][j]) * lam[ui][j];
                    for (int e2 = 0; e2 < t.u[ui][j]; ++e2) au *= coef[ui][j];
                    su += t.u[ui][j];
                }
            }
            double log_den = 0.0, log_b = 0.0;
            for (int j = 0; j < pb; ++j) {
                const auto uj = static_cast<std::size_t>(j);
                freq += double(t.v[uj]) * gamma[uj];
                log_den += double(t.v[uj]) / m * std::log(std::abs(phi_mg[uj]));
                log_b += double(t.v[uj]) / m * std::log(std::abs(b[uj]));
            }
            const int sv = total(t.v);
            const int vmax = t.v.empty() ? 0 : *std::max_element(t.v.begin(), t.v.end());
            double poly = double(K_beta) * sv / m;
            for (int i = 1; i < dim; ++i) poly -= double(k[static_cast<std::size_t>(i)] * t.l[static_cast<std::size_t>(i - 1)]);
            e.frequency = freq;
            e.poly_exponent = poly;
            e.log_constant = std::log(mult * std::abs(au)) + log_b + std::abs(freq) * grid.radius;
            if (su >= 1)
                e.case_tag = su < dA ? 1 : 2;
            else
                e.case_tag = vmax < m ? 3 : 4;
            const bool pure_v = su == 0 && (sv == 0 || (sv == m && vmax == m));
            if (pure_v) {
                e.theta = 1.0;
                e.decay = (is_beta && sv == m) ? "survivor" : "polynomial";
                if (e.decay == "polynomial" && !(poly < 0.0))
                    throw HypothesisError("lead-tuple weight dominance", "polynomially decaying tuple has exponent " + std::to_string(poly));
            } else {
                e.theta = std::exp(log_abs_symbol(phi, freq) - log_den);
                e.decay = "geometric";
                if (!(e.theta <= 1.0 - opt.theta_margin)) {
                    std::ostringstream os;
                    os << "tuple for alpha index " << ti << " (case " << e.case_tag << ") has theta " << e.theta;
                    throw HypothesisError("theta <= 1 - margin", os.str());
                }
            }
            rep.theta_table.push_back(std::move(e));
        }
    }

    for (long long n = opt.n_start; n <= n_max; n *= 2) {
        const double log_n = std::log(double(n));
        std::vector<Cplx> c;
        std::vector<ExpPoly> gens(static_cast<std::size_t>(dim));
        for (int i = 0; i < dim; ++i) {
            const auto ui = static_cast<std::size_t>(i);
            std::vector<Term> terms;
            for (std::size_t j = 0; j < lam[ui].size(); ++j) terms.push_back({coef[ui][j], lam[ui][j]});
            if (i == 0) {
                for (int j = 0; j < pb; ++j) {
                    const auto uj = static_cast<std::size_t>(j);
                    c.push_back(solve_coeff(b[uj], m, phi_mg[uj], n, double(K_beta) * log_n));
                    terms.push_back({c.back(), gamma[uj]});
                }
            } else {
                terms.push_back({Cplx(std::exp(-double(k[ui]) * log_n), 0.0), Cplx(0.0, 0.0)});
            }
            gens[static_cast<std::size_t>(perm[ui])] = ExpPoly(std::move(terms));
        }
        TraceStep step;
        step.q = n;
        for (Cplx x : c) step.max_coeff = std::max(step.max_coeff, std::abs(x));
        for (const auto& e : rep.theta_table) {
            if (e.decay == "survivor") continue;
            step.bound += std::exp(e.log_constant + e.poly_exponent * log_n + double(n) * std::log(e.theta));
        }
        std::vector<double> residuals;
        for (const auto& t : rep.targets) {
            const ExpPoly image = apply_symbol_power(phi, generator_product(gens, t.exponents), n);
            residuals.push_back(sup_distance(image, t.target, grid));
            step.residual = std::max(step.residual, residuals.back());
        }
        rep.trace.push_back(step);
        if (step.residual <= epsilon && step.bound <= epsilon) {
            rep.generators = gens;
            rep.q = n;
            rep.residuals = residuals;
            rep.coefficients = c;
            rep.bound_sum = step.bound;
            for (int j = 0; j < pb; ++j) {
                const auto uj = static_cast<std::size_t>(j);
                // X_beta(0, m e_j, beta, n) = c_j^m phi(m gamma_j)^n / n^{K_beta}
                const double lm = m * std::log(std::abs(c[uj])) + double(n) * std::log(std::abs(phi_mg[uj])) -
                                  double(K_beta) * log_n;
                const double ang = m * std::arg(c[uj]) + std::remainder(double(n) * std::arg(phi_mg[uj]), 2.0 * kPi);
                rep.survivor_values.push_back(std::polar(std::exp(lm), ang));
            }
            return rep;
        }
    }
    throw ExhaustionError("witness-multi: n_max = " + std::to_string(n_max) +
                              " reached before residuals fell below epsilon",
                          trace_to_csv(rep.trace));
}

}  // namespace hyperalg
