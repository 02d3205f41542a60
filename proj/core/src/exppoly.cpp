#include "hyperalg/exppoly.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace hyperalg {

namespace {

bool freq_less(const Term& a, const Term& b) {
    if (a.freq.real() != b.freq.real()) return a.freq.real() < b.freq.real();
    return a.freq.imag() < b.freq.imag();
}

std::vector<Term> canonicalize(std::vector<Term> terms) {
    for (const auto& t : terms) {
        require_finite(t.coeff, "ExpPoly coefficient");
        require_finite(t.freq, "ExpPoly frequency");
    }
    std::stable_sort(terms.begin(), terms.end(), freq_less);
    std::vector<bool> used(terms.size(), false);
    std::vector<Term> out;
    out.reserve(terms.size());
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (used[i]) continue;
        Term acc = terms[i];
        // Sorted by real part, so candidates for merging sit in a short run after i.
        for (std::size_t j = i + 1; j < terms.size(); ++j) {
            if (terms[j].freq.real() - acc.freq.real() > kFreqMergeTol) break;
            if (!used[j] && std::abs(terms[j].freq - acc.freq) <= kFreqMergeTol) {
                acc.coeff += terms[j].coeff;
                used[j] = true;
            }
        }
        if (acc.coeff != Cplx(0.0, 0.0)) out.push_back(acc);
    }
    return out;
}

}  // namespace

ExpPoly::ExpPoly(std::vector<Term> terms) : terms_(canonicalize(std::move(terms))) {}

ExpPoly ExpPoly::constant(Cplx c) { return ExpPoly({{c, Cplx(0.0, 0.0)}}); }

ExpPoly ExpPoly::exponential(Cplx coeff, Cplx freq) { return ExpPoly({{coeff, freq}}); }

double ExpPoly::max_freq_abs() const {
    double m = 0.0;
    for (const auto& t : terms_) m = std::max(m, std::abs(t.freq));
    return m;
}

double ExpPoly::coeff_l1() const {
    double s = 0.0;
    for (const auto& t : terms_) s += std::abs(t.coeff);
    return s;
}

Cplx eval_exppoly(const ExpPoly& f, Cplx z, double exp_bound) {
    Cplx sum(0.0, 0.0);
    for (const auto& t : f.terms()) {
        const Cplx arg = t.freq * z;
        if (std::abs(arg.real()) > exp_bound)
            throw RangeError("exponent out of range in eval_exppoly", t.freq);
        sum += t.coeff * std::exp(arg);
    }
    return sum;
}

double log_abs_exppoly(const ExpPoly& f, Cplx z) {
    if (f.is_zero()) return -std::numeric_limits<double>::infinity();
    double top = -std::numeric_limits<double>::infinity();
    for (const auto& t : f.terms())
        top = std::max(top, std::log(std::abs(t.coeff)) + (t.freq * z).real());
    Cplx sum(0.0, 0.0);
    for (const auto& t : f.terms()) {
        const Cplx arg = std::log(t.coeff) + t.freq * z - top;
        sum += std::exp(arg);
    }
    const double a = std::abs(sum);
    if (a == 0.0) return -std::numeric_limits<double>::infinity();
    return top + std::log(a);
}

ExpPoly add_exppoly(const ExpPoly& f, const ExpPoly& g) {
    std::vector<Term> t = f.terms();
    t.insert(t.end(), g.terms().begin(), g.terms().end());
    return ExpPoly(std::move(t));
}

ExpPoly sub_exppoly(const ExpPoly& f, const ExpPoly& g) { return add_exppoly(f, scale_exppoly(g, -1.0)); }

ExpPoly scale_exppoly(const ExpPoly& f, Cplx c) {
    std::vector<Term> t = f.terms();
    for (auto& x : t) x.coeff *= c;
    return ExpPoly(std::move(t));
}

ExpPoly mul_exppoly(const ExpPoly& f, const ExpPoly& g) {
    std::vector<Term> t;
    t.reserve(f.size() * g.size());
    for (const auto& a : f.terms())
        for (const auto& b : g.terms()) t.push_back({a.coeff * b.coeff, a.freq + b.freq});
    return ExpPoly(std::move(t));
}

ExpPoly pow_exppoly(const ExpPoly& f, int n) {
    if (n < 0) throw InputError("pow_exppoly: negative exponent");
    ExpPoly out = ExpPoly::constant(1.0);
    if (n == 0) return out;
    out = f;
    for (int k = 1; k < n; ++k) out = mul_exppoly(out, f);
    return out;
}

}  // namespace hyperalg
