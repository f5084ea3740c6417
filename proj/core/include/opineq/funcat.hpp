#ifndef OPINEQ_FUNCAT_HPP
#define OPINEQ_FUNCAT_HPP

#include <string>

#include "opineq/errors.hpp"
#include "opineq/interval.hpp"

namespace opineq {

/// A positive scalar function on an interval, from the small built-in
/// catalog: z^r, e^z, or scale*z^r + shift. Operator convexity is carried
/// as declared metadata; it is never proved here.
class FunctionDescriptor {
  public:
    enum class Kind { Power, Exp, AffineOfPower };

    static FunctionDescriptor power(double r);
    static FunctionDescriptor exp();
    static FunctionDescriptor affine_of_power(double scale, double shift, double r);

    Kind kind() const { return kind_; }
    double exponent() const { return r_; }
    double scale() const { return scale_; }
    double shift() const { return shift_; }
    bool declared_operator_convex() const { return operator_convex_; }

    /// Whether evaluation requires strictly positive arguments
    /// (negative or non-integer exponent).
    bool requires_positive_argument() const;

    std::string describe() const;

  private:
    FunctionDescriptor(Kind k, double r, double scale, double shift, bool oc);

    Kind kind_;
    double r_ = 0.0;
    double scale_ = 1.0;
    double shift_ = 0.0;
    bool operator_convex_ = false;
};

/// Exponent t in (0,1]; t = 1 reduces every transformed expression to f.
struct PowerTransform {
    double t;

    explicit PowerTransform(double t_) : t(t_) {
        if (!(t > 0.0 && t <= 1.0))
            throw InvalidParameterError("power transform requires t in (0,1], got " +
                                        std::to_string(t));
    }
};

/// Secant-line coefficients of f over [m, M]: the affine a_f*z + b_f that
/// agrees with f at both endpoints.
struct ChordCoeffs {
    double a_f;
    double b_f;
};

double eval(const FunctionDescriptor& f, double z);

/// Sampled midpoint-convexity test for g = f^t on a uniform grid over j.
/// True iff g((x+y)/2) <= (g(x)+g(y))/2 + 1e-10*max(|g(x)|,|g(y)|) for all
/// grid pairs.
bool is_power_convex(const FunctionDescriptor& f, const PowerTransform& t, const Interval& j,
                     int grid_size = 48);

ChordCoeffs chord_coeffs(const FunctionDescriptor& f, const Interval& j);

/// max over s in [m,M] of a_f*s + b_f - alpha*f(s), via a 1024-point grid
/// scan refined by golden-section to 1e-12 on the argument.
double beta_constant(const FunctionDescriptor& f, const Interval& j, double alpha);

/// max over s in [m,M] of (a_f*s + b_f)/f(s); the alpha for which
/// beta_constant vanishes. Requires f strictly positive on [m,M].
double ratio_alpha(const FunctionDescriptor& f, const Interval& j);

/// Generalized Kantorovich constant K(m,M,r); r must avoid {0,1}.
double kantorovich_k(const Interval& j, double r);

/// Kantorovich constant for the difference C(m,M,r); r must avoid {0,1}.
double kantorovich_c(const Interval& j, double r);

}  // namespace opineq

#endif
