#include "hyperalg/disk_grid.hpp"

#include <cmath>
#include <numbers>

namespace hyperalg {

void DiskGrid::validate() const {
    if (!(radius > 0.0) || !std::isfinite(radius)) throw InputError("DiskGrid: radius must be > 0");
    if (samples < 8) throw InputError("DiskGrid: samples must be >= 8");
    if (circles < 2) throw InputError("DiskGrid: circles must be >= 2");
}

std::vector<Cplx> DiskGrid::points() const {
    validate();
    std::vector<Cplx> pts;
    pts.reserve(static_cast<std::size_t>(samples * circles + 1));
    pts.emplace_back(0.0, 0.0);
    for (int j = 1; j <= circles; ++j) {
        const double r = radius * j / circles;
        for (int k = 0; k < samples; ++k) pts.push_back(std::polar(r, 2.0 * std::numbers::pi * k / samples));
    }
    return pts;
}

}  // namespace hyperalg
