#include "hyperalg/errors.hpp"

#include <cmath>

namespace hyperalg {

bool is_finite(Cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

void require_finite(Cplx z, const char* what) {
    if (!is_finite(z)) throw InputError(std::string("non-finite value in ") + what);
}

}  // namespace hyperalg
