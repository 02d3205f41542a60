#pragma once

#include <vector>

#include "hyperalg/errors.hpp"

namespace hyperalg {

// Deterministic sample of the closed disk |z| <= radius: the centre plus
// `circles` concentric circles at radii radius*j/circles, each with `samples`
// equispaced points.
struct DiskGrid {
    double radius = 1.0;
    int samples = 32;
    int circles = 4;

    std::vector<Cplx> points() const;
    void validate() const;
};

}  // namespace hyperalg
