#pragma once

#include <vector>

#include "hyperalg/disk_grid.hpp"
#include "hyperalg/exppoly.hpp"
#include "hyperalg/lattice.hpp"
#include "hyperalg/symbol.hpp"

namespace hyperalg {

struct OracleOptions {
    double abs_tol = 1e-10;      // absolute accuracy aimed for on the grid
    int phi_degree = 160;        // Taylor coefficients of phi kept before denoising
    int max_series_degree = 200000;
    int max_precision_bits = 60000;
};

struct OracleResult {
    std::vector<Cplx> values;  // on grid.points()
    int precision_bits = 0;
    int series_degree = 0;     // degree of the Taylor series of phi^q used
    int output_degree = 0;
    int phi_terms = 0;         // nonzero phi coefficients after denoising
    std::size_t terms = 0;     // exponential terms of the expanded product
};

// Phi(D)^q applied to prod_i f_i^{e_i}, computed from Taylor series in multiprecision:
// psi = phi^q by the power recurrence, then h_k = sum_n psi_n (k+n)!/k! g_{k+n}.
// Throws ConvergenceError when the required precision or degree exceeds the options.
OracleResult taylor_oracle_power(const SymbolSpec& phi, const std::vector<ExpPoly>& gens, const IntVec& exps,
                                 long long q, const DiskGrid& grid, const OracleOptions& opt = {});

}  // namespace hyperalg
