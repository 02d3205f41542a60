#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hyperalg/disk_grid.hpp"
#include "hyperalg/exppoly.hpp"
#include "hyperalg/oracle.hpp"
#include "hyperalg/symbol.hpp"
#include "hyperalg/taylor.hpp"
#include "hyperalg/witness_params.hpp"

namespace hyperalg {

inline constexpr int kTaylorGuard = 20;

// Each term (c, lambda) becomes (c phi(lambda), lambda).
ExpPoly apply_symbol(const SymbolSpec& phi, const ExpPoly& f);

// Each term scaled by phi(lambda)^q through modulus and argument separately.
// Throws RangeError naming lambda when the modulus leaves double range.
ExpPoly apply_symbol_power(const SymbolSpec& phi, const ExpPoly& f, long long q);

// Coefficient k of the result is sum_n phi_n (k+n)!/k! f_{k+n}, for k <= K.
// Both inputs must carry at least K + guard coefficients.
TaylorPoly apply_symbol_taylor(const TaylorPoly& phi, const TaylorPoly& f, int K, int guard = kTaylorGuard);

double sup_norm(const ExpPoly& f, const DiskGrid& grid);
double sup_distance(const ExpPoly& f, const ExpPoly& g, const DiskGrid& grid);
double sup_distance(const TaylorPoly& f, const TaylorPoly& g, const DiskGrid& grid);

struct OrbitTrace {
    std::string target;
    DiskGrid grid;
    std::vector<std::pair<long long, double>> iterates;  // (q, residual), q strictly increasing

    std::string to_csv() const;  // columns: q,residual
};

Json orbit_trace_to_json(const OrbitTrace& t);

// prod_i f_i^{e_i}
ExpPoly generator_product(const std::vector<ExpPoly>& gens, const IntVec& exps);

struct VerifyOptions {
    double agreement_tol = 1e-6;
    OracleOptions oracle{};
};

struct VerifyResult {
    bool pass = false;
    std::vector<double> diagonal_residuals;
    std::vector<double> oracle_residuals;
    std::vector<double> agreement;  // sup distance between the two images, per target
    std::vector<OracleResult> oracle_runs;
    OrbitTrace trace;
    std::string reason;
};

Json verify_result_to_json(const VerifyResult& v);

// Recomputes every residual of the report along the diagonal path and through the
// Taylor oracle. Passes when both agree within the tolerance and both are <= epsilon.
VerifyResult verify_witness(const SymbolSpec& phi, const WitnessReport& report, const DiskGrid& grid, double epsilon,
                            const VerifyOptions& opt = {});

}  // namespace hyperalg
