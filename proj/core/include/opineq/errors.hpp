#ifndef OPINEQ_ERRORS_HPP
#define OPINEQ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace opineq {

/// Argument outside the admissible domain of a scalar function
/// (e.g. z <= 0 under a negative or fractional power).
struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

/// Structurally invalid parameter (bad interval, r in {0,1} for the
/// Kantorovich constants, non-positive weights, ...).
struct InvalidParameterError : std::runtime_error {
    explicit InvalidParameterError(const std::string& what) : std::runtime_error(what) {}
};

/// Dimension mismatch between operands.
struct ShapeError : std::runtime_error {
    explicit ShapeError(const std::string& what) : std::runtime_error(what) {}
};

/// Spectrum collapses to a point; the spectral window [m, M] requires m < M.
struct DegenerateSpectrumError : std::runtime_error {
    explicit DegenerateSpectrumError(const std::string& what) : std::runtime_error(what) {}
};

/// A stated precondition of an operation does not hold for the inputs.
struct PreconditionError : std::runtime_error {
    explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

/// Requested accuracy could not be reached; carries the best estimate.
struct AccuracyError : std::runtime_error {
    AccuracyError(const std::string& what, double best)
        : std::runtime_error(what), best_estimate(best) {}
    double best_estimate;
};

/// Iterative kernel failed to converge.
struct NumericalError : std::runtime_error {
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed external input (JSON text, CLI matrix/map/config files).
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace opineq

#endif
