#pragma once

#include <cstddef>
#include <vector>

#include "hyperalg/errors.hpp"

namespace hyperalg {

// Frequencies closer than this are treated as the same exponential.
inline constexpr double kFreqMergeTol = 1e-12;
// Largest |Re(freq * z)| accepted by pointwise evaluation.
inline constexpr double kExpBound = 700.0;

struct Term {
    Cplx coeff;
    Cplx freq;

    friend bool operator==(const Term&, const Term&) = default;
};

// Finite sum  sum_i coeff_i * exp(freq_i * z), kept canonical: terms sorted by
// (freq.re, freq.im), equal frequencies merged, zero coefficients dropped.
class ExpPoly {
public:
    ExpPoly() = default;
    explicit ExpPoly(std::vector<Term> terms);

    static ExpPoly constant(Cplx c);
    static ExpPoly exponential(Cplx coeff, Cplx freq);

    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    // Largest |freq| over the terms (0 for the zero function).
    double max_freq_abs() const;
    // Sum of |coeff|.
    double coeff_l1() const;

    friend bool operator==(const ExpPoly&, const ExpPoly&) = default;

private:
    std::vector<Term> terms_;
};

Cplx eval_exppoly(const ExpPoly& f, Cplx z, double exp_bound = kExpBound);
// log|f(z)| computed without overflow; -inf where f(z) = 0.
double log_abs_exppoly(const ExpPoly& f, Cplx z);

ExpPoly add_exppoly(const ExpPoly& f, const ExpPoly& g);
ExpPoly sub_exppoly(const ExpPoly& f, const ExpPoly& g);
ExpPoly scale_exppoly(const ExpPoly& f, Cplx c);
ExpPoly mul_exppoly(const ExpPoly& f, const ExpPoly& g);
ExpPoly pow_exppoly(const ExpPoly& f, int n);

inline ExpPoly operator+(const ExpPoly& f, const ExpPoly& g) { return add_exppoly(f, g); }
inline ExpPoly operator-(const ExpPoly& f, const ExpPoly& g) { return sub_exppoly(f, g); }
inline ExpPoly operator*(const ExpPoly& f, const ExpPoly& g) { return mul_exppoly(f, g); }

}  // namespace hyperalg
