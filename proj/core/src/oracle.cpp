#include "hyperalg/oracle.hpp"

#include <mpfr.h>

#include <algorithm>
#include <boost/multiprecision/mpfr.hpp>
#include <cmath>
#include <limits>
#include <string>

namespace hyperalg {

namespace {

namespace bmp = boost::multiprecision;
using Real = bmp::number<bmp::mpfr_float_backend<0>, bmp::et_off>;

constexpr double kLn2 = 0.69314718055994530942;
constexpr double kE = 2.71828182845904523536;

struct PrecisionScope {
    unsigned old;
    explicit PrecisionScope(unsigned digits10) : old(Real::default_precision()) { Real::default_precision(digits10); }
    ~PrecisionScope() { Real::default_precision(old); }
    PrecisionScope(const PrecisionScope&) = delete;
    PrecisionScope& operator=(const PrecisionScope&) = delete;
};

struct MC {
    Real re, im;
};

MC make(Cplx z) { return {Real(z.real()), Real(z.imag())}; }
MC add(const MC& a, const MC& b) { return {a.re + b.re, a.im + b.im}; }
MC mul(const MC& a, const MC& b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }
MC scale(const MC& a, const Real& s) { return {a.re * s, a.im * s}; }
void fma_into(MC& acc, const MC& a, const MC& b) {
    acc.re += a.re * b.re - a.im * b.im;
    acc.im += a.re * b.im + a.im * b.re;
}
MC inverse(const MC& a) {
    const Real n = a.re * a.re + a.im * a.im;
    return {a.re / n, -a.im / n};
}
bool is_zero(const MC& a) { return a.re == 0 && a.im == 0; }
Cplx to_cplx(const MC& a) { return {a.re.convert_to<double>(), a.im.convert_to<double>()}; }

double log_abs(const Real& x) {
    if (x == 0) return -std::numeric_limits<double>::infinity();
    long e = 0;
    const double d = mpfr_get_d_2exp(&e, x.backend().data(), MPFR_RNDN);
    return std::log(std::fabs(d)) + double(e) * kLn2;
}

// log |a| up to a factor sqrt 2.
double log_abs(const MC& a) { return std::max(log_abs(a.re), log_abs(a.im)); }

MC power(MC base, long long n) {
    MC r{Real(1), Real(0)};
    while (n > 0) {
        if (n & 1) r = mul(r, base);
        base = mul(base, base);
        n >>= 1;
    }
    return r;
}

double log_sum_exp(const std::vector<double>& xs) {
    double mx = -std::numeric_limits<double>::infinity();
    for (double x : xs) mx = std::max(mx, x);
    if (!std::isfinite(mx)) return mx;
    double s = 0.0;
    for (double x : xs) s += std::exp(x - mx);
    return mx + std::log(s);
}

}  // namespace

OracleResult taylor_oracle_power(const SymbolSpec& phi, const std::vector<ExpPoly>& gens, const IntVec& exps,
                                 long long q, const DiskGrid& grid, const OracleOptions& opt) {
    if (gens.size() != exps.size()) throw InputError("oracle: one exponent per generator required");
    if (q < 0) throw InputError("oracle: q must be >= 0");
    grid.validate();
    const double R = grid.radius;

    // Expanded product as a plain list of (coefficient, frequency); double-exact inputs.
    struct DTerm {
        Cplx c, nu;
    };
    std::vector<DTerm> dterms{{Cplx(1.0, 0.0), Cplx(0.0, 0.0)}};
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (int e = 0; e < exps[i]; ++e) {
            std::vector<DTerm> next;
            for (const auto& a : dterms)
                for (const auto& t : gens[i].terms()) next.push_back({a.c * t.coeff, a.nu + t.freq});
            dterms = std::move(next);
        }
    double rho = 0.0;
    std::vector<double> log_c;
    for (const auto& t : dterms) {
        rho = std::max(rho, std::abs(t.nu));
        log_c.push_back(std::log(std::abs(t.c)) + std::abs(t.nu) * R);
    }

    // Taylor coefficients of phi on a circle beyond every frequency, with the
    // rounding floor removed so that structural zeros stay exactly zero.
    CauchyOptions copt;
    copt.radius = std::max(1.0, 2.0 * rho);
    copt.samples = 1024;
    copt.tolerance = 1e-6;
    const CoefficientEstimate ce = taylor_coefficients(phi, 0.0, opt.phi_degree, copt);
    std::vector<std::pair<int, Cplx>> phi_nz;
    for (int k = 0; k <= opt.phi_degree; ++k) {
        const auto uk = static_cast<std::size_t>(k);
        const double floor = 16.0 * (ce.error[uk] + 2.2e-16 * ce.circle_max / std::pow(copt.radius, k));
        if (std::abs(ce.coeffs[uk]) > floor) phi_nz.emplace_back(k, ce.coeffs[uk]);
    }
    if (phi_nz.empty() || phi_nz.front().first != 0) throw HypothesisError("phi(0) != 0", "oracle needs phi(0) != 0");

    auto log_majorant = [&](double r) {
        std::vector<double> xs;
        for (const auto& [k, a] : phi_nz) xs.push_back(std::log(std::abs(a)) + (r > 0 ? k * std::log(r) : (k ? -1e300 : 0.0)));
        return log_sum_exp(xs);
    };
    double lmax = -std::numeric_limits<double>::infinity();
    for (std::size_t t = 0; t < dterms.size(); ++t)
        lmax = std::max(lmax, log_c[t] + double(q) * log_majorant(std::abs(dterms[t].nu)));
    const double log_tol = std::log(opt.abs_tol);
    const double extra = std::log2(double(dterms.size()) * double(q + 1) * double(opt.phi_degree + 1));
    const int bits = static_cast<int>(std::ceil((lmax - log_tol) / kLn2 + extra)) + 96;
    if (bits > opt.max_precision_bits)
        throw ConvergenceError("oracle: required precision " + std::to_string(bits) + " bits exceeds budget");

    OracleResult res;
    res.precision_bits = bits;
    res.phi_terms = static_cast<int>(phi_nz.size());
    res.terms = dterms.size();
    PrecisionScope scope(static_cast<unsigned>(std::ceil(bits * 0.30103)) + 2);

    // psi = phi^q by the power recurrence
    //   psi_n = 1/(n phi_0) sum_k ((q+1)k - n) phi_k psi_{n-k}.
    std::vector<std::pair<int, MC>> phi_mp;
    for (const auto& [k, a] : phi_nz) phi_mp.emplace_back(k, make(a));
    const MC inv0 = inverse(phi_mp.front().second);
    std::vector<MC> psi;
    psi.push_back(power(phi_mp.front().second, q));
    const double log_scale = log_sum_exp(log_c) + std::log(4.0);
    const double log_rho = rho > 0 ? std::log(rho) : -1e300;
    const int run_needed = phi_nz.back().first + 1;
    int run = 0;
    double peak = log_abs(psi.front());
    for (int n = 1;; ++n) {
        if (n > opt.max_series_degree)
            throw ConvergenceError("oracle: series degree budget " + std::to_string(opt.max_series_degree) +
                                   " exceeded");
        MC acc{Real(0), Real(0)};
        for (std::size_t i = 1; i < phi_mp.size(); ++i) {
            const int k = phi_mp[i].first;
            if (k > n) break;
            const double f = double(q + 1) * k - n;
            if (f == 0.0) continue;
            fma_into(acc, scale(phi_mp[i].second, Real(f)), psi[static_cast<std::size_t>(n - k)]);
        }
        acc = scale(mul(acc, inv0), Real(1) / Real(n));
        psi.push_back(std::move(acc));
        const double lt = log_abs(psi.back()) + n * log_rho;
        peak = std::max(peak, lt);
        if (rho == 0.0) break;
        // Tail once the weighted terms are negligible and past the peak for a full run.
        if (lt + log_scale < log_tol - 8.0 && lt < peak) {
            if (++run >= run_needed) break;
        } else {
            run = 0;
        }
    }
    const int D = static_cast<int>(psi.size()) - 1;
    res.series_degree = D;

    // g~_j = sum_t c_t nu_t^j, so that g_j j! = g~_j.
    const int k_cap = static_cast<int>(std::ceil(kE * rho * R)) + 80;
    std::vector<MC> gt(static_cast<std::size_t>(D + k_cap + 1), MC{Real(0), Real(0)});
    for (const auto& t : dterms) {
        MC pw = make(t.c);
        const MC nu = make(t.nu);
        for (std::size_t j = 0; j < gt.size(); ++j) {
            gt[j].re += pw.re;
            gt[j].im += pw.im;
            pw = mul(pw, nu);
        }
    }
    std::vector<int> psi_nz;
    for (int n = 0; n <= D; ++n)
        if (!is_zero(psi[static_cast<std::size_t>(n)])) psi_nz.push_back(n);

    std::vector<MC> h;
    Real fact(1);
    const double log_R = std::log(R);
    int small_run = 0;
    for (int k = 0; k <= k_cap; ++k) {
        if (k > 0) fact *= k;
        MC acc{Real(0), Real(0)};
        for (int n : psi_nz) fma_into(acc, psi[static_cast<std::size_t>(n)], gt[static_cast<std::size_t>(k + n)]);
        acc = scale(acc, Real(1) / fact);
        const double lh = log_abs(acc) + k * log_R;
        h.push_back(std::move(acc));
        if (k >= std::max(8.0, kE * rho * R) && lh < log_tol - 6.0) {
            if (++small_run >= 4) break;
        } else {
            small_run = 0;
        }
    }
    res.output_degree = static_cast<int>(h.size()) - 1;

    for (Cplx z : grid.points()) {
        const MC zz = make(z);
        MC acc{Real(0), Real(0)};
        for (auto it = h.rbegin(); it != h.rend(); ++it) acc = add(mul(acc, zz), *it);
        res.values.push_back(to_cplx(acc));
    }
    return res;
}

}  // namespace hyperalg
