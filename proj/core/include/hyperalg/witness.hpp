#pragma once

#include <optional>
#include <vector>

#include "hyperalg/lattice.hpp"
#include "hyperalg/witness_params.hpp"

namespace hyperalg {

struct WitnessOptions {
    double theta_margin = kThetaMargin;
    long long n_start = 8;
    bool check_hypotheses = true;
};

// f = A + R_q with R_q = sum c_j e^{lambda_j z}, c_j^m phi(m lambda_j)^q = b_j, so that
// Phi(D)^q(f^m) is within epsilon of B and Phi(D)^q(f^j) within epsilon of 0 (j < m)
// on the grid. A's frequencies must lie in D(w, delta), B's on [w0/2, w0].
WitnessReport construct_witness_T2(const SymbolSpec& phi, int m, const ExpPoly& A, const ExpPoly& B, double epsilon,
                                   const DiskGrid& grid, long long n_max,
                                   const std::optional<WitnessParams>& params = std::nullopt,
                                   const WitnessOptions& opt = {});

// Generators f_1 = L_1 + R_n, f_i = L_i + n^{-k_i}; Phi(D)^n(f^beta) within epsilon of B and
// Phi(D)^n(f^alpha) within epsilon of 0 for the other alpha in A. `L` is indexed by the
// original coordinates of A.
WitnessReport construct_witness_multi(const SymbolSpec& phi, const ExponentSet& A, const ExpPoly& B,
                                      const std::vector<ExpPoly>& L, double epsilon, const DiskGrid& grid,
                                      long long n_max, const std::optional<WitnessParams>& params = std::nullopt,
                                      const WitnessOptions& opt = {});

}  // namespace hyperalg
