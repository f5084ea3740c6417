#ifndef OPINEQ_QUAD_HPP
#define OPINEQ_QUAD_HPP

#include <functional>
#include <vector>

#include "opineq/errors.hpp"

namespace opineq {

/// Deterministic scalar quadrature scheme.
struct QuadratureConfig {
    enum class Scheme { GaussLegendre, AdaptiveSimpson };

    Scheme scheme = Scheme::GaussLegendre;
    int nodes = 64;            // GaussLegendre, in [2, 256]
    double abs_tol = 1e-10;    // AdaptiveSimpson
    int max_depth = 30;        // AdaptiveSimpson, <= 40

    static QuadratureConfig gauss_legendre(int nodes = 64);
    static QuadratureConfig adaptive_simpson(double abs_tol, int max_depth = 30);

    /// Link-verification tolerance for chains built on this scheme.
    double chain_tolerance() const;
};

/// Approximates the integral of g over [a, b]. AdaptiveSimpson throws
/// AccuracyError (carrying the best estimate) when the recursion depth
/// is exhausted before reaching abs_tol.
double integrate(const std::function<double(double)>& g, double a, double b,
                 const QuadratureConfig& cfg = QuadratureConfig::gauss_legendre());

/// Gauss-Legendre nodes/weights on [-1, 1] (ascending nodes).
struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};
const GaussRule& gauss_rule(int n);

}  // namespace opineq

#endif
