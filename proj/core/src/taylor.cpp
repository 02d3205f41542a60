#include "hyperalg/taylor.hpp"

namespace hyperalg {

TaylorPoly::TaylorPoly(std::vector<Cplx> c, int cap_) : coeffs(std::move(c)), cap(cap_) {
    if (cap < 0) throw InputError("TaylorPoly: negative cap");
    if (static_cast<int>(coeffs.size()) > cap + 1) coeffs.resize(static_cast<std::size_t>(cap) + 1);
    for (const auto& x : coeffs) require_finite(x, "TaylorPoly coefficient");
}

Cplx eval_taylor(const TaylorPoly& p, Cplx z) {
    Cplx acc(0.0, 0.0);
    for (auto it = p.coeffs.rbegin(); it != p.coeffs.rend(); ++it) acc = acc * z + *it;
    return acc;
}

TaylorPoly exppoly_to_taylor(const ExpPoly& f, int K) {
    if (K < 0) throw InputError("exppoly_to_taylor: negative degree");
    std::vector<Cplx> c(static_cast<std::size_t>(K) + 1, Cplx(0.0, 0.0));
    for (const auto& t : f.terms()) {
        Cplx w = t.coeff;  // coeff * freq^k / k!
        for (int k = 0; k <= K; ++k) {
            c[static_cast<std::size_t>(k)] += w;
            w *= t.freq / static_cast<double>(k + 1);
        }
    }
    return TaylorPoly(std::move(c), K);
}

}  // namespace hyperalg
