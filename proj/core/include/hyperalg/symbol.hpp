#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hyperalg/errors.hpp"
#include "hyperalg/exppoly.hpp"
#include "hyperalg/taylor.hpp"

namespace hyperalg {

enum class CatalogKind {
    Cos,            // cos(s z)
    SinPlusExpNeg,  // sin(s z) + exp(-s z)
    SincPi,         // sin(pi s z) / (pi s z)
    Exp,            // exp(a s z)
    ExpTimesPoly,   // exp(a s z) p(s z)
    Gaussian,       // exp((s z)^2), not of exponential type; witness tests only
};

std::string catalog_name(CatalogKind k);
std::optional<CatalogKind> catalog_kind_from_name(const std::string& name);

// Closed-form entries. `scale` is the argument dilation s (1 unless rescaled).
struct CatalogSymbol {
    CatalogKind kind = CatalogKind::Cos;
    Cplx a{1.0, 0.0};
    std::vector<Cplx> poly{Cplx(1.0, 0.0)};
    Cplx scale{1.0, 0.0};
};

struct ExpPolySymbol {
    ExpPoly f;
};

// exp(a z + b) p(z) with p(0) = 1 and Re(b) = 0.
struct PolyTimesExp {
    std::vector<Cplx> poly{Cplx(1.0, 0.0)};
    Cplx a{0.0, 0.0};
    Cplx b{0.0, 0.0};
};

// exp(a z + b) * prod_{n < truncation} E_genus(z / zeros[n]).
struct HadamardTrunc {
    Cplx a{0.0, 0.0};
    Cplx b{0.0, 0.0};
    std::vector<Cplx> zeros;
    int genus = 0;
    std::size_t truncation = 0;
};

using SymbolForm = std::variant<CatalogSymbol, ExpPolySymbol, PolyTimesExp, HadamardTrunc>;

// Validated symbol description. Construction checks the per-form invariants.
class SymbolSpec {
public:
    explicit SymbolSpec(SymbolForm form);

    static SymbolSpec cos();
    static SymbolSpec sin_plus_exp_neg();
    static SymbolSpec sinc_pi();
    static SymbolSpec exp(Cplx a);
    static SymbolSpec exp_times_poly(Cplx a, std::vector<Cplx> poly);
    static SymbolSpec exp_poly(ExpPoly f);
    static SymbolSpec poly_times_exp(std::vector<Cplx> poly, Cplx a, Cplx b = {});
    static SymbolSpec hadamard(Cplx a, Cplx b, std::vector<Cplx> zeros, int genus, std::size_t truncation);
    // exp(z^2), used by the witness constructions.
    static SymbolSpec gaussian();

    const SymbolForm& form() const { return form_; }
    template <class T>
    const T* as() const { return std::get_if<T>(&form_); }

    std::string describe() const;

private:
    SymbolForm form_;
};

// Number of zeros to keep so that sum_{n>M} |radius/z_n|^{genus+1} < tol,
// bounded by the list length.
std::size_t default_truncation(const std::vector<Cplx>& zeros, int genus, double radius, double tol = 1e-8);

Cplx weierstrass_factor(int p, Cplx z);

Cplx eval_symbol(const SymbolSpec& phi, Cplx z);
// log|phi(z)| without overflow; -inf at zeros.
double log_abs_symbol(const SymbolSpec& phi, Cplx z);

// Catalog entries rewritten as ExpPolySymbol / PolyTimesExp / HadamardTrunc.
// Other forms, and the Gaussian entry, are returned unchanged.
SymbolSpec structural_form(const SymbolSpec& phi);

// phi multiplied by the unimodular constant u (|u| = 1 within 1e-9).
SymbolSpec multiply_unimodular(const SymbolSpec& phi, Cplx u);

// True / false when growth class is decided by the form alone, nullopt otherwise.
std::optional<bool> structurally_subexponential(const SymbolSpec& phi);
// True when the form has no zeros at all (single exponential, exp(az+b)).
bool structurally_zero_free(const SymbolSpec& phi);

struct CauchyOptions {
    double radius = 0.5;
    int samples = 64;
    // Allowed difference between the two sample counts, relative to max|phi| on the circle.
    double tolerance = 1e-9;
};

struct CoefficientEstimate {
    std::vector<Cplx> coeffs;  // Taylor coefficients a_k about the centre
    std::vector<double> error;  // |a_k(S) - a_k(2S)|
    double circle_max = 0.0;    // max |phi| on the integration circle
    int samples_used = 0;
};

// Taylor coefficients of phi about `center` by the trapezoid rule on a circle.
CoefficientEstimate taylor_coefficients(const SymbolSpec& phi, Cplx center, int K, const CauchyOptions& opt = {});

struct DerivativeEstimate {
    std::vector<Cplx> values;  // phi^(n)(centre)
    std::vector<double> error;
};

DerivativeEstimate derivs_at(const SymbolSpec& phi, Cplx center, int n_max, const CauchyOptions& opt = {});
DerivativeEstimate derivs_at_zero(const SymbolSpec& phi, int n_max, const CauchyOptions& opt = {});
TaylorPoly to_taylor(const SymbolSpec& phi, int K, const CauchyOptions& opt = {});

}  // namespace hyperalg
