#pragma once

#include <vector>

#include "hyperalg/errors.hpp"
#include "hyperalg/exppoly.hpp"

namespace hyperalg {

// Truncated power series sum_k coeffs[k] z^k with coeffs.size() <= cap + 1.
struct TaylorPoly {
    std::vector<Cplx> coeffs;
    int cap = 0;

    TaylorPoly() = default;
    TaylorPoly(std::vector<Cplx> c, int cap_);

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
};

Cplx eval_taylor(const TaylorPoly& p, Cplx z);

// Taylor coefficients of an exponential polynomial up to degree K (exact formula).
TaylorPoly exppoly_to_taylor(const ExpPoly& f, int K);

}  // namespace hyperalg
