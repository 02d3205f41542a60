#include "hyperalg/symbol.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace hyperalg {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr std::size_t kSincZeros = 4000;  // zeros per side in the structural sinc product

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

Cplx eval_poly(const std::vector<Cplx>& p, Cplx z) {
    Cplx acc(0.0, 0.0);
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * z + *it;
    return acc;
}

Cplx checked_exp(Cplx arg, Cplx where) {
    if (arg.real() > kExpBound) throw RangeError("symbol value overflows", where);
    return std::exp(arg);
}

bool unit_constant_term(const std::vector<Cplx>& p) {
    return !p.empty() && std::abs(p[0] - Cplx(1.0, 0.0)) <= 1e-12;
}

std::string fmt(Cplx z) {
    std::ostringstream os;
    os.precision(6);
    os << "(" << z.real() << (z.imag() < 0 ? "" : "+") << z.imag() << "i)";
    return os.str();
}

ExpPoly sin_exppoly(Cplx s) {
    const Cplx i(0.0, 1.0);
    return ExpPoly({{1.0 / (2.0 * i), i * s}, {-1.0 / (2.0 * i), -i * s}});
}

double log_abs_sinc(Cplx u) {
    if (std::abs(u) < 1e-4) return std::log(std::abs(1.0 - u * u / 6.0 + u * u * u * u / 120.0));
    return log_abs_exppoly(sin_exppoly(1.0), u) - std::log(std::abs(u));
}

Cplx sinc(Cplx u) {
    if (std::abs(u) < 1e-4) return 1.0 - u * u / 6.0 + u * u * u * u / 120.0;
    if (std::abs(u.imag()) > kExpBound) throw RangeError("sinc overflows", u);
    return std::sin(u) / u;
}

Cplx hadamard_log(const HadamardTrunc& h, Cplx z, bool& vanishes) {
    Cplx acc = h.a * z + h.b;
    vanishes = false;
    for (std::size_t n = 0; n < h.truncation; ++n) {
        const Cplx u = z / h.zeros[n];
        const Cplx one_minus = 1.0 - u;
        if (one_minus == Cplx(0.0, 0.0)) {
            vanishes = true;
            return acc;
        }
        acc += std::log(one_minus);
        if (h.genus == 1) acc += u;
    }
    return acc;
}

void validate(const SymbolForm& form) {
    std::visit(overloaded{
                   [](const CatalogSymbol& c) {
                       require_finite(c.a, "catalog parameter a");
                       require_finite(c.scale, "catalog scale");
                       if (c.scale == Cplx(0.0, 0.0)) throw InputError("catalog scale must be nonzero");
                       if (c.kind == CatalogKind::ExpTimesPoly && !unit_constant_term(c.poly))
                           throw InputError("catalog exp(a z) p(z): p(0) must equal 1");
                       for (const auto& x : c.poly) require_finite(x, "catalog polynomial");
                   },
                   [](const ExpPolySymbol& e) {
                       if (e.f.is_zero()) throw InputError("ExpPolySymbol: zero function is not a symbol");
                   },
                   [](const PolyTimesExp& p) {
                       if (!unit_constant_term(p.poly)) throw InputError("PolyTimesExp: p(0) must equal 1");
                       for (const auto& x : p.poly) require_finite(x, "PolyTimesExp polynomial");
                       require_finite(p.a, "PolyTimesExp a");
                       require_finite(p.b, "PolyTimesExp b");
                       if (std::abs(p.b.real()) > 1e-12) throw InputError("PolyTimesExp: Re(b) must be 0");
                   },
                   [](const HadamardTrunc& h) {
                       if (h.genus != 0 && h.genus != 1) throw InputError("HadamardTrunc: genus must be 0 or 1");
                       if (h.truncation > h.zeros.size())
                           throw InputError("HadamardTrunc: truncation exceeds zero list length");
                       for (const auto& z : h.zeros) {
                           require_finite(z, "HadamardTrunc zero");
                           if (z == Cplx(0.0, 0.0)) throw InputError("HadamardTrunc: zeros must be nonzero");
                       }
                       require_finite(h.a, "HadamardTrunc a");
                       require_finite(h.b, "HadamardTrunc b");
                       if (std::abs(h.b.real()) > 1e-12) throw InputError("HadamardTrunc: Re(b) must be 0");
                   },
               },
               form);
}

}  // namespace

std::string catalog_name(CatalogKind k) {
    switch (k) {
        case CatalogKind::Cos: return "cos";
        case CatalogKind::SinPlusExpNeg: return "sin+exp(-z)";
        case CatalogKind::SincPi: return "sin(pi z)/(pi z)";
        case CatalogKind::Exp: return "exp(a z)";
        case CatalogKind::ExpTimesPoly: return "exp(a z) p(z)";
        case CatalogKind::Gaussian: return "exp(z^2)";
    }
    return "?";
}

std::optional<CatalogKind> catalog_kind_from_name(const std::string& name) {
    for (auto k : {CatalogKind::Cos, CatalogKind::SinPlusExpNeg, CatalogKind::SincPi, CatalogKind::Exp,
                   CatalogKind::ExpTimesPoly, CatalogKind::Gaussian})
        if (catalog_name(k) == name) return k;
    return std::nullopt;
}

SymbolSpec::SymbolSpec(SymbolForm form) : form_(std::move(form)) { validate(form_); }

SymbolSpec SymbolSpec::cos() { return SymbolSpec(CatalogSymbol{CatalogKind::Cos}); }
SymbolSpec SymbolSpec::sin_plus_exp_neg() { return SymbolSpec(CatalogSymbol{CatalogKind::SinPlusExpNeg}); }
SymbolSpec SymbolSpec::sinc_pi() { return SymbolSpec(CatalogSymbol{CatalogKind::SincPi}); }
SymbolSpec SymbolSpec::gaussian() { return SymbolSpec(CatalogSymbol{CatalogKind::Gaussian}); }

SymbolSpec SymbolSpec::exp(Cplx a) {
    CatalogSymbol c{CatalogKind::Exp};
    c.a = a;
    return SymbolSpec(c);
}

SymbolSpec SymbolSpec::exp_times_poly(Cplx a, std::vector<Cplx> poly) {
    CatalogSymbol c{CatalogKind::ExpTimesPoly};
    c.a = a;
    c.poly = std::move(poly);
    return SymbolSpec(c);
}

SymbolSpec SymbolSpec::exp_poly(ExpPoly f) { return SymbolSpec(ExpPolySymbol{std::move(f)}); }

SymbolSpec SymbolSpec::poly_times_exp(std::vector<Cplx> poly, Cplx a, Cplx b) {
    return SymbolSpec(PolyTimesExp{std::move(poly), a, b});
}

SymbolSpec SymbolSpec::hadamard(Cplx a, Cplx b, std::vector<Cplx> zeros, int genus, std::size_t truncation) {
    return SymbolSpec(HadamardTrunc{a, b, std::move(zeros), genus, truncation});
}

std::string SymbolSpec::describe() const {
    return std::visit(overloaded{
                          [](const CatalogSymbol& c) {
                              std::string s = "catalog " + catalog_name(c.kind);
                              if (c.kind == CatalogKind::Exp || c.kind == CatalogKind::ExpTimesPoly)
                                  s += " a=" + fmt(c.a);
                              if (c.scale != Cplx(1.0, 0.0)) s += " scale=" + fmt(c.scale);
                              return s;
                          },
                          [](const ExpPolySymbol& e) {
                              return "exp-poly with " + std::to_string(e.f.size()) + " terms";
                          },
                          [](const PolyTimesExp& p) {
                              return "exp(a z + b) p(z), a=" + fmt(p.a) + ", deg p=" +
                                     std::to_string(p.poly.size() - 1);
                          },
                          [](const HadamardTrunc& h) {
                              return "hadamard product, genus " + std::to_string(h.genus) + ", " +
                                     std::to_string(h.truncation) + " zeros, a=" + fmt(h.a);
                          },
                      },
                      form_);
}

std::size_t default_truncation(const std::vector<Cplx>& zeros, int genus, double radius, double tol) {
    const int p = genus + 1;
    std::vector<double> terms(zeros.size());
    for (std::size_t n = 0; n < zeros.size(); ++n) terms[n] = std::pow(radius / std::abs(zeros[n]), p);
    double tail = 0.0;
    std::size_t m = zeros.size();
    // Walk back from the end while the dropped tail stays under tol.
    while (m > 0 && tail + terms[m - 1] < tol) {
        tail += terms[m - 1];
        --m;
    }
    return m;
}

Cplx weierstrass_factor(int p, Cplx z) {
    if (p == 0) return 1.0 - z;
    if (p == 1) return (1.0 - z) * std::exp(z);
    throw InputError("weierstrass_factor: genus must be 0 or 1");
}

Cplx eval_symbol(const SymbolSpec& phi, Cplx z) {
    return std::visit(
        overloaded{
            [&](const CatalogSymbol& c) -> Cplx {
                const Cplx w = c.scale * z;
                switch (c.kind) {
                    case CatalogKind::Cos:
                        if (std::abs(w.imag()) > kExpBound) throw RangeError("cos overflows", z);
                        return std::cos(w);
                    case CatalogKind::SinPlusExpNeg:
                        if (std::abs(w.imag()) > kExpBound) throw RangeError("sin overflows", z);
                        return std::sin(w) + checked_exp(-w, z);
                    case CatalogKind::SincPi: return sinc(kPi * w);
                    case CatalogKind::Exp: return checked_exp(c.a * w, z);
                    case CatalogKind::ExpTimesPoly: return checked_exp(c.a * w, z) * eval_poly(c.poly, w);
                    case CatalogKind::Gaussian: return checked_exp(w * w, z);
                }
                return {};
            },
            [&](const ExpPolySymbol& e) { return eval_exppoly(e.f, z); },
            [&](const PolyTimesExp& p) { return checked_exp(p.a * z + p.b, z) * eval_poly(p.poly, z); },
            [&](const HadamardTrunc& h) -> Cplx {
                bool vanishes = false;
                const Cplx l = hadamard_log(h, z, vanishes);
                if (vanishes) return {0.0, 0.0};
                return checked_exp(l, z);
            },
        },
        phi.form());
}

double log_abs_symbol(const SymbolSpec& phi, Cplx z) {
    constexpr double kNegInf = -std::numeric_limits<double>::infinity();
    auto log_abs = [](Cplx v) { return v == Cplx(0.0, 0.0) ? kNegInf : std::log(std::abs(v)); };
    return std::visit(
        overloaded{
            [&](const CatalogSymbol& c) -> double {
                const Cplx w = c.scale * z;
                const Cplx i(0.0, 1.0);
                switch (c.kind) {
                    case CatalogKind::Cos: return log_abs_exppoly(ExpPoly({{0.5, i}, {0.5, -i}}), w);
                    case CatalogKind::SinPlusExpNeg: {
                        ExpPoly f = sin_exppoly(1.0) + ExpPoly::exponential(1.0, -1.0);
                        return log_abs_exppoly(f, w);
                    }
                    case CatalogKind::SincPi: return log_abs_sinc(kPi * w);
                    case CatalogKind::Exp: return (c.a * w).real();
                    case CatalogKind::ExpTimesPoly: return (c.a * w).real() + log_abs(eval_poly(c.poly, w));
                    case CatalogKind::Gaussian: return (w * w).real();
                }
                return kNegInf;
            },
            [&](const ExpPolySymbol& e) { return log_abs_exppoly(e.f, z); },
            [&](const PolyTimesExp& p) { return (p.a * z + p.b).real() + log_abs(eval_poly(p.poly, z)); },
            [&](const HadamardTrunc& h) -> double {
                bool vanishes = false;
                const Cplx l = hadamard_log(h, z, vanishes);
                return vanishes ? kNegInf : l.real();
            },
        },
        phi.form());
}

SymbolSpec structural_form(const SymbolSpec& phi) {
    const auto* c = phi.as<CatalogSymbol>();
    if (!c) return phi;
    const Cplx s = c->scale;
    const Cplx i(0.0, 1.0);
    switch (c->kind) {
        case CatalogKind::Cos: return SymbolSpec::exp_poly(ExpPoly({{0.5, i * s}, {0.5, -i * s}}));
        case CatalogKind::SinPlusExpNeg:
            return SymbolSpec::exp_poly(sin_exppoly(s) + ExpPoly::exponential(1.0, -s));
        case CatalogKind::SincPi: {
            std::vector<Cplx> zeros;
            zeros.reserve(2 * kSincZeros);
            for (std::size_t k = 1; k <= kSincZeros; ++k) {
                zeros.push_back(static_cast<double>(k) / s);
                zeros.push_back(-static_cast<double>(k) / s);
            }
            const std::size_t n = zeros.size();
            return SymbolSpec::hadamard(0.0, 0.0, std::move(zeros), 1, n);
        }
        case CatalogKind::Exp: return SymbolSpec::exp_poly(ExpPoly::exponential(1.0, c->a * s));
        case CatalogKind::ExpTimesPoly: {
            std::vector<Cplx> p = c->poly;
            Cplx sk(1.0, 0.0);
            for (auto& x : p) {
                x *= sk;
                sk *= s;
            }
            return SymbolSpec::poly_times_exp(std::move(p), c->a * s, 0.0);
        }
        case CatalogKind::Gaussian: return phi;
    }
    return phi;
}

SymbolSpec multiply_unimodular(const SymbolSpec& phi, Cplx u) {
    if (std::abs(std::abs(u) - 1.0) > 1e-9) throw InputError("multiply_unimodular: |u| must be 1");
    if (u == Cplx(1.0, 0.0)) return phi;
    const double theta = std::arg(u);
    const Cplx ib(0.0, theta);
    const SymbolSpec s = structural_form(phi);
    return std::visit(overloaded{
                          [&](const CatalogSymbol&) -> SymbolSpec {
                              throw InputError("multiply_unimodular: entry has no structural form");
                          },
                          [&](const ExpPolySymbol& e) {
                              return SymbolSpec::exp_poly(scale_exppoly(e.f, std::polar(1.0, theta)));
                          },
                          [&](const PolyTimesExp& p) { return SymbolSpec::poly_times_exp(p.poly, p.a, p.b + ib); },
                          [&](const HadamardTrunc& h) {
                              return SymbolSpec::hadamard(h.a, h.b + ib, h.zeros, h.genus, h.truncation);
                          },
                      },
                      s.form());
}

std::optional<bool> structurally_subexponential(const SymbolSpec& phi) {
    return std::visit(overloaded{
                          [](const CatalogSymbol& c) -> std::optional<bool> {
                              switch (c.kind) {
                                  case CatalogKind::Exp:
                                  case CatalogKind::ExpTimesPoly: return c.a == Cplx(0.0, 0.0);
                                  default: return false;
                              }
                          },
                          [](const ExpPolySymbol& e) -> std::optional<bool> {
                              return e.f.max_freq_abs() == 0.0;
                          },
                          [](const PolyTimesExp& p) -> std::optional<bool> { return p.a == Cplx(0.0, 0.0); },
                          [](const HadamardTrunc& h) -> std::optional<bool> {
                              if (h.genus == 0) return h.a == Cplx(0.0, 0.0);
                              return std::nullopt;
                          },
                      },
                      phi.form());
}

bool structurally_zero_free(const SymbolSpec& phi) {
    return std::visit(overloaded{
                          [](const CatalogSymbol& c) {
                              return c.kind == CatalogKind::Exp || c.kind == CatalogKind::Gaussian ||
                                     (c.kind == CatalogKind::ExpTimesPoly && c.poly.size() == 1);
                          },
                          [](const ExpPolySymbol& e) { return e.f.size() == 1; },
                          [](const PolyTimesExp& p) {
                              return std::all_of(p.poly.begin() + 1, p.poly.end(),
                                                 [](Cplx x) { return x == Cplx(0.0, 0.0); });
                          },
                          [](const HadamardTrunc& h) { return h.truncation == 0; },
                      },
                      phi.form());
}

CoefficientEstimate taylor_coefficients(const SymbolSpec& phi, Cplx center, int K, const CauchyOptions& opt) {
    if (K < 0) throw InputError("taylor_coefficients: negative degree");
    if (!(opt.radius > 0.0)) throw InputError("taylor_coefficients: radius must be > 0");
    int S = std::max(opt.samples, 8);
    while (S < 2 * (K + 1)) S *= 2;
    const int S2 = 2 * S;
    std::vector<Cplx> vals(static_cast<std::size_t>(S2));
    double circle_max = 0.0;
    for (int j = 0; j < S2; ++j) {
        const Cplx pt = center + std::polar(opt.radius, 2.0 * kPi * j / S2);
        vals[static_cast<std::size_t>(j)] = eval_symbol(phi, pt);
        circle_max = std::max(circle_max, std::abs(vals[static_cast<std::size_t>(j)]));
    }
    CoefficientEstimate out;
    out.coeffs.resize(static_cast<std::size_t>(K) + 1);
    out.error.resize(static_cast<std::size_t>(K) + 1);
    out.circle_max = circle_max;
    out.samples_used = S2;
    const double scale_ref = std::max(1.0, circle_max);
    std::vector<Cplx> roots(static_cast<std::size_t>(S2));
    for (int j = 0; j < S2; ++j) roots[static_cast<std::size_t>(j)] = std::polar(1.0, -2.0 * kPi * j / S2);
    for (int k = 0; k <= K; ++k) {
        Cplx fine(0.0, 0.0), coarse(0.0, 0.0);
        for (int j = 0; j < S2; ++j) {
            const auto idx = static_cast<std::size_t>((static_cast<long long>(k) * j) % S2);
            const Cplx term = vals[static_cast<std::size_t>(j)] * roots[idx];
            fine += term;
            if (j % 2 == 0) coarse += term;
        }
        fine /= static_cast<double>(S2);
        coarse /= static_cast<double>(S);
        const double rk = std::pow(opt.radius, k);
        out.coeffs[static_cast<std::size_t>(k)] = fine / rk;
        const double diff = std::abs(fine - coarse);
        out.error[static_cast<std::size_t>(k)] = diff / rk;
        if (diff > opt.tolerance * scale_ref)
            throw ConvergenceError("Cauchy estimate of coefficient " + std::to_string(k) +
                                   " did not settle (difference " + std::to_string(diff / scale_ref) +
                                   " relative to circle maximum)");
    }
    return out;
}

DerivativeEstimate derivs_at(const SymbolSpec& phi, Cplx center, int n_max, const CauchyOptions& opt) {
    if (n_max > 170) throw RangeError("derivative order beyond factorial range", Cplx(n_max, 0.0));
    const CoefficientEstimate c = taylor_coefficients(phi, center, n_max, opt);
    DerivativeEstimate d;
    double fact = 1.0;
    for (int n = 0; n <= n_max; ++n) {
        if (n > 0) fact *= n;
        d.values.push_back(c.coeffs[static_cast<std::size_t>(n)] * fact);
        d.error.push_back(c.error[static_cast<std::size_t>(n)] * fact);
    }
    return d;
}

DerivativeEstimate derivs_at_zero(const SymbolSpec& phi, int n_max, const CauchyOptions& opt) {
    return derivs_at(phi, 0.0, n_max, opt);
}

TaylorPoly to_taylor(const SymbolSpec& phi, int K, const CauchyOptions& opt) {
    CoefficientEstimate c = taylor_coefficients(phi, 0.0, K, opt);
    return TaylorPoly(std::move(c.coeffs), K);
}

}  // namespace hyperalg
