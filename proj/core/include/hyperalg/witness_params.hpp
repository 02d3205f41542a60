#pragma once

#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "hyperalg/disk_grid.hpp"
#include "hyperalg/exppoly.hpp"
#include "hyperalg/lattice.hpp"
#include "hyperalg/serialize.hpp"
#include "hyperalg/symbol.hpp"

namespace hyperalg {

inline constexpr double kThetaMargin = 1e-4;
// |phi| <= 1 - margin on sampled window points.
inline constexpr double kMembershipMargin = 1e-3;

// Parameters shared by both constructions. Fields that a route does not use stay at
// their defaults and are omitted from the JSON form.
struct WitnessParams {
    std::string route;  // "T:2", "T:2bisbis" or "T:2bisbis-extended"
    int m = 2;
    double depth = 0.2;  // progression search threshold: |phi(s w)| <= 1 - depth

    // single generator: A frequencies in D(w, delta), B frequencies on [w0/2, w0]
    Cplx w{0.0, 0.0};
    double delta = 0.0;
    Cplx w_star{0.0, 0.0};
    Cplx w0{0.0, 0.0};

    // several generators: L frequencies on lambda_window, B frequencies on m * gamma_window
    Cplx lambda_lo{0.0, 0.0}, lambda_hi{0.0, 0.0};
    Cplx gamma_lo{0.0, 0.0}, gamma_hi{0.0, 0.0};
    std::vector<long long> weights;
    IntVec perm;
    IntVec beta;
    int d_A = 0;

    std::vector<Cplx> lambda;  // frequencies of the solved terms (B frequencies / m)
    double theta_margin = kThetaMargin;
    long long n_max = 1LL << 20;
    DiskGrid grid;
    double epsilon = 1e-6;
};

Json witness_params_to_json(const WitnessParams& p);

struct ThetaEntry {
    int target = 0;  // index into WitnessReport::targets
    LatticeTuple tuple;
    Cplx frequency{0.0, 0.0};
    double theta = 0.0;
    int case_tag = 0;          // proof case; 0 for survivors
    std::string decay;         // "survivor", "geometric" or "polynomial"
    double log_constant = 0.0; // log of the q-independent factor of the term bound
    double poly_exponent = 0.0;// power of n in the term bound (several generators only)
};

struct WitnessTarget {
    IntVec exponents;  // power of each generator
    ExpPoly target;    // zero for the vanishing targets
};

struct TraceStep {
    long long q = 0;
    double residual = 0.0;  // max over targets
    double bound = 0.0;     // sum of term bounds over non-survivors
    double max_coeff = 0.0; // max |c_j(q)|
};

struct WitnessReport {
    std::string route;
    std::vector<ExpPoly> generators;
    long long q = 0;
    std::vector<WitnessTarget> targets;
    std::vector<double> residuals;  // sup on the grid, one per target
    std::vector<ThetaEntry> theta_table;
    WitnessParams params;
    std::vector<Cplx> coefficients;     // c_j at the returned q
    std::vector<Cplx> survivor_values;  // coefficient reproduced on each B term
    double bound_sum = 0.0;
    std::vector<TraceStep> trace;
};

Json witness_report_to_json(const WitnessReport& r);
// Reads back what verification needs: route, generators, q, targets, grid, epsilon.
WitnessReport witness_report_from_json(const Json& j);
std::string trace_to_csv(const std::vector<TraceStep>& trace);      // q,residual,bound,max_coeff
std::string theta_table_to_csv(const std::vector<ThetaEntry>& t);   // target,u,v,l,theta,case,decay

// Theta of a tuple: |phi(freq)| / prod |phi(m lambda_j)|^{v_j/m}, with freq = sum u.alpha + v.lambda.
struct ThetaValue {
    double theta = 0.0;
    int case_tag = 0;
    Cplx frequency{0.0, 0.0};
};
ThetaValue theta_ratio(const SymbolSpec& phi, const IntVec& u, const IntVec& v, const std::vector<Cplx>& lambda,
                       const std::vector<Cplx>& alpha, int m);

struct T2ParamOptions {
    double depth = 0.2;
    int directions = 360;
    int magnitudes = 200;
    double t_max = 10.0;
    int max_halvings = 30;
    int max_restarts = 4;
};

// Parameter selection for the single-generator construction. Throws HypothesisError
// when no admissible parameters are found.
WitnessParams prepare_params_T2(const SymbolSpec& phi, int m, const DiskGrid& grid, double epsilon,
                                long long n_max, const T2ParamOptions& opt = {});

// True when every frequency of A lies in D(w, delta) and every frequency of B on [w0/2, w0].
void check_placement_T2(const WitnessParams& p, const ExpPoly& A, const ExpPoly& B);

struct MultiParamOptions {
    double depth = 0.2;
    int directions = 360;
    int magnitudes = 200;
    double t_max = 10.0;
    int max_shrinks = 40;
};

WitnessParams prepare_params_multi(const SymbolSpec& phi, const ExponentSet& A, const DiskGrid& grid,
                                   double epsilon, long long n_max, const MultiParamOptions& opt = {});

bool on_segment(Cplx z, Cplx lo, Cplx hi, double tol = 1e-9);

// Least-squares placement: fits the polynomial `target` on the grid with `count` frequencies spread
// over the segment [lo, hi]. The fit error is reported separately from any dynamics error.
struct PlacementFit {
    ExpPoly fitted;
    double fit_error = 0.0;
};
PlacementFit fit_on_segment(const TaylorPoly& target, Cplx lo, Cplx hi, const DiskGrid& grid, int count = 8);

}  // namespace hyperalg
