#ifndef OPINEQ_CHAINS_HPP
#define OPINEQ_CHAINS_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "opineq/funcat.hpp"
#include "opineq/posmap.hpp"
#include "opineq/quad.hpp"
#include "opineq/symmat.hpp"

namespace opineq {

/// How the multiplier alpha of the reverse bound is chosen.
///  - Ratio: alpha = ratio_alpha(f, J), which forces beta = 0.
///  - Unit: alpha = 1, beta = beta_constant(f, J, 1).
///  - Custom: caller-supplied alpha, beta = beta_constant(f, J, alpha).
enum class AlphaMode { Ratio, Unit, Custom };

std::string to_string(AlphaMode m);

struct ChainParams {
    PowerTransform t{0.5};
    AlphaMode alpha_mode = AlphaMode::Ratio;
    double alpha = 1.0;                 // read only in Custom mode
    std::optional<Interval> window;     // defaults to the tight spectrum bounds
};

struct ChainConstants {
    std::optional<double> alpha;
    std::optional<double> beta;
    std::optional<double> k;
    std::optional<double> c;
};

/// Ordered list of matrix (or 1x1 scalar) terms with pairwise Loewner
/// verdicts; passed iff every link holds.
struct ChainReport {
    std::string name;
    std::string mode;
    std::vector<std::string> labels;
    std::vector<SymMatrix> terms;
    std::vector<LoewnerVerdict> links;  // links[i] compares terms[i] <= terms[i+1]
    ChainConstants constants;
    std::optional<Interval> window;
    double tolerance = 0.0;
    bool passed = false;

    double worst_gap() const;
};

/// Value of the t-power chord envelope
/// ((M-z)/(M-m) f(m)^t + (z-m)/(M-m) f(M)^t)^(1/t) at z in [m, M].
double middle_term_scalar(const FunctionDescriptor& f, const PowerTransform& t, const Interval& j,
                          double z);

/// The three-term pointwise estimate around the reflected point a+b-z:
/// ( f(a+b-z), g_t(z) + g_t(a+b-z) - f(z), f(a) + f(b) - f(z) ),
/// guaranteed ascending when f^t is convex.
std::array<double, 3> pointwise_refinement(const FunctionDescriptor& f, const PowerTransform& t,
                                           const Interval& j, double z);

/// Four-term scalar chain: f(midpoint) <= mean(f) <= mean(envelope)
/// <= endpoint average.
ChainReport hh_chain(const FunctionDescriptor& f, const PowerTransform& t, const Interval& j,
                     const QuadratureConfig& cfg = QuadratureConfig::gauss_legendre());

/// Three-term operator chain
/// phi(f(A)) <= phi(envelope_t(A)) <= beta I + alpha f(phi(A)).
ChainReport operator_chain(const FunctionDescriptor& f, const SymMatrix& a,
                           const MapDescriptor& phi, const ChainParams& params,
                           double tol_scale = 1e-9);

enum class PowerChainMode { RatioK, DifferenceC };

/// Power specialization f = z^r with the closed-form Kantorovich constants:
/// phi(A^r) <= phi(envelope_t(A)) <= K phi(A)^r   (RatioK)
/// phi(A^r) <= phi(envelope_t(A)) <= C I + phi(A)^r   (DifferenceC).
ChainReport power_chain(double r, const PowerTransform& t, const SymMatrix& a,
                        const MapDescriptor& phi, const std::optional<Interval>& window,
                        PowerChainMode mode, double tol_scale = 1e-9);

/// Integral refinement of the operator Kantorovich inequality:
/// phi(A^-1) <= phi(int_0^1 envelope_t(A) dt) <= (M+m)^2/(4Mm) phi(A)^-1.
ChainReport kantorovich_integral_chain(const SymMatrix& a, const MapDescriptor& phi,
                                       const std::optional<Interval>& window,
                                       const QuadratureConfig& cfg = QuadratureConfig::gauss_legendre());

/// Two-operator chain under A <= B for monotone f with f^t convex:
/// increasing f:  f(A) <= envelope_t(A) <= beta I + alpha f(B);
/// decreasing f:  f(B) <= envelope_t(B) <= beta I + alpha f(A).
ChainReport furuta_chain(const FunctionDescriptor& f, const PowerTransform& t, const SymMatrix& a,
                         const SymMatrix& b, const std::optional<Interval>& window, double alpha,
                         double tol_scale = 1e-9);

/// Samples f(<Ax,x>) <= <f(A)x,x> on the given unit vector plus `trials`
/// random ones.
bool mond_pecaric_check(const FunctionDescriptor& f, const SymMatrix& a,
                        const std::vector<double>& x, int trials,
                        std::uint64_t seed = 0x5eedULL);

/// Verdict for f(phi(A)) <= phi(f(A)); requires the declared operator
/// convexity flag (plain convexity does not suffice).
LoewnerVerdict dcj_check(const FunctionDescriptor& f, const SymMatrix& a,
                         const MapDescriptor& phi, double tol_scale = 1e-9);

/// Two-sided multiplicative bound with alpha = ratio_alpha(f, J):
/// (1/alpha) phi(f(A)) <= f(phi(A)) <= alpha phi(f(A)).
ChainReport two_sided_ratio_chain(const FunctionDescriptor& f, const SymMatrix& a,
                            const MapDescriptor& phi, const std::optional<Interval>& window,
                            double tol_scale = 1e-9);

/// The built-in function catalog used by sweeps and property checks.
std::vector<FunctionDescriptor> builtin_catalog();

}  // namespace opineq

#endif
