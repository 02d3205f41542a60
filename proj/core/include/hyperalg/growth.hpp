#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hyperalg/symbol.hpp"

namespace hyperalg {

// "|phi| < 1" is enforced as |phi| <= 1 - margin, "|phi| > 1" as |phi| >= 1 + margin.
inline constexpr double kBelowOneMargin = 1e-6;
inline constexpr double kAboveOneMargin = 1e-6;

struct RayScan {
    double theta = 0.0;
    std::vector<double> t_grid;
    std::vector<double> moduli;

    std::string to_csv() const;  // columns: t,modulus
};

struct GrowthEstimate {
    double order = 0.0;
    double type = 0.0;
    bool type_valid = false;  // order within 0.2 of 1
    bool degenerate = false;  // M(r) <= 1 over the whole upper window
    double r_lo = 0.0, r_hi = 0.0;
    double quality = 0.0;  // RMS residual of the log-log fit
    std::vector<double> r;
    std::vector<double> log_m;

    std::string to_csv() const;  // columns: r,logM
};

struct ConvexRay {
    Cplx w0, w1;
    double theta = 0.0;
    double eta = 0.0;
    double domain_lo = 0.0;  // 0 for [0,1], -1 for [-1,1]
    Cplx a1, a2;             // h'(w0) and h''(w0)/2 with h = log phi
    std::vector<double> profile;
};

std::vector<double> geometric_grid(double lo, double hi, int n);
std::vector<double> linear_grid(double lo, double hi, int n);

double max_modulus(const SymbolSpec& phi, double r, int samples);
double log_max_modulus(const SymbolSpec& phi, double r, int samples);

GrowthEstimate estimate_order_type(const SymbolSpec& phi, const std::vector<double>& r_grid, int samples = 256);

// Grid used by the classifier when no window is supplied.
std::vector<double> default_growth_grid();

double indicator(const SymbolSpec& phi, double theta, const std::vector<double>& r_grid);
double tau0(const SymbolSpec& phi, Cplx z1, const std::vector<double>& r_grid);

RayScan scan_ray(const SymbolSpec& phi, double theta, const std::vector<double>& t_grid);
std::optional<double> ray_below_one(const SymbolSpec& phi, double theta, double t_max, int samples,
                                    double margin = kBelowOneMargin);

// Scans magnitudes (ascending) x directions k*2pi/directions; first a with
// |phi(j a)| <= 1 - margin for j = 1..m.
std::optional<Cplx> find_arith_progression(const SymbolSpec& phi, int m, int directions,
                                           const std::vector<double>& a_grid, double margin = kBelowOneMargin);

// theta with Re(A1 e^{i theta}) >= 0 (strict when A1 != 0) and Re(A2 e^{2 i theta}) > 0.
double convex_direction(Cplx A1, Cplx A2);

struct ConvexRayOptions {
    double hypothesis_margin = 1e-9;
    int points = 64;
    int max_halvings = 40;
    CauchyOptions cauchy{};
};

ConvexRay find_convex_ray(const SymbolSpec& phi, Cplx w0, double delta, const ConvexRayOptions& opt = {});

// Sampled profile t -> log|phi(w0 + t (w1 - w0))| on [lo, 1]; true when strictly
// increasing and discretely convex.
bool profile_convex_increasing(const SymbolSpec& phi, Cplx w0, Cplx w1, double lo, int points,
                               std::vector<double>* profile = nullptr);

std::optional<std::pair<double, double>> check_Tma_conditions(const SymbolSpec& phi, double theta, double t_max,
                                                              const std::vector<double>& R_grid, int samples = 256);

}  // namespace hyperalg
