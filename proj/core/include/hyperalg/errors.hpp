#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <utility>

namespace hyperalg {

using Cplx = std::complex<double>;

// Base of every error the library throws.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// exp() argument or a power left the double range.
class RangeError : public Error {
public:
    RangeError(const std::string& what, Cplx where)
        : Error(what), where_(where) {}
    Cplx where() const { return where_; }

private:
    Cplx where_;
};

// A named hypothesis failed its numerical check.
class HypothesisError : public Error {
public:
    HypothesisError(std::string check, const std::string& detail)
        : Error(check + ": " + detail), check_(std::move(check)) {}
    const std::string& check() const { return check_; }

private:
    std::string check_;
};

// Iterative estimate did not settle (Cauchy derivatives, N doubling, backtracking).
class ConvergenceError : public Error {
public:
    using Error::Error;
};

// Iteration budget (N_max, n_max) used up; carries the residual trace as CSV.
class ExhaustionError : public ConvergenceError {
public:
    ExhaustionError(const std::string& what, std::string trace_csv)
        : ConvergenceError(what), trace_csv_(std::move(trace_csv)) {}
    const std::string& trace_csv() const { return trace_csv_; }

private:
    std::string trace_csv_;
};

// Caller supplied something malformed (bad config, bad arguments, window violations).
class InputError : public Error {
public:
    using Error::Error;
};

bool is_finite(Cplx z);

// Throws InputError naming `what` when z is NaN or infinite.
void require_finite(Cplx z, const char* what);

// Malformed serialized input (unknown fields, wrong types, missing keys).
class SchemaError : public InputError {
public:
    using InputError::InputError;
};

}  // namespace hyperalg
