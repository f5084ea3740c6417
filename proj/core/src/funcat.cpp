#include "opineq/funcat.hpp"

#include <cmath>
#include <functional>
#include <vector>

namespace opineq {

namespace {

bool is_integer(double r) { return std::rint(r) == r && std::fabs(r) < 1e15; }

bool power_is_operator_convex(double r) {
    return (r >= -1.0 && r <= 0.0) || (r >= 1.0 && r <= 2.0);
}

}  // namespace

FunctionDescriptor::FunctionDescriptor(Kind k, double r, double scale, double shift, bool oc)
    : kind_(k), r_(r), scale_(scale), shift_(shift), operator_convex_(oc) {
    if (kind_ != Kind::Exp && operator_convex_ && !power_is_operator_convex(r_))
        throw InvalidParameterError(
            "operator convexity may only be declared for exponents in [-1,0] u [1,2], got r=" +
            std::to_string(r_));
    if (kind_ == Kind::AffineOfPower) {
        if (!(scale_ > 0.0))
            throw InvalidParameterError("affine-of-power scale must be positive");
        if (!(shift_ >= 0.0))
            throw InvalidParameterError("affine-of-power shift must be non-negative");
    }
}

FunctionDescriptor FunctionDescriptor::power(double r) {
    return FunctionDescriptor(Kind::Power, r, 1.0, 0.0, power_is_operator_convex(r));
}

FunctionDescriptor FunctionDescriptor::exp() {
    return FunctionDescriptor(Kind::Exp, 0.0, 1.0, 0.0, false);
}

FunctionDescriptor FunctionDescriptor::affine_of_power(double scale, double shift, double r) {
    // positive scaling and a non-negative shift preserve operator convexity of z^r
    return FunctionDescriptor(Kind::AffineOfPower, r, scale, shift, power_is_operator_convex(r));
}

bool FunctionDescriptor::requires_positive_argument() const {
    if (kind_ == Kind::Exp) return false;
    return r_ < 0.0 || !is_integer(r_);
}

std::string FunctionDescriptor::describe() const {
    switch (kind_) {
        case Kind::Exp: return "exp";
        case Kind::Power: return "power(" + std::to_string(r_) + ")";
        case Kind::AffineOfPower:
            return std::to_string(scale_) + "*z^" + std::to_string(r_) + "+" +
                   std::to_string(shift_);
    }
    return "?";
}

double eval(const FunctionDescriptor& f, double z) {
    if (f.requires_positive_argument() && z <= 0.0)
        throw DomainError("argument " + std::to_string(z) +
                          " outside the domain of " + f.describe() +
                          " (requires z > 0)");
    switch (f.kind()) {
        case FunctionDescriptor::Kind::Exp: return std::exp(z);
        case FunctionDescriptor::Kind::Power: return std::pow(z, f.exponent());
        case FunctionDescriptor::Kind::AffineOfPower:
            return f.scale() * std::pow(z, f.exponent()) + f.shift();
    }
    throw InvalidParameterError("unknown function kind");
}

bool is_power_convex(const FunctionDescriptor& f, const PowerTransform& t, const Interval& j,
                     int grid_size) {
    if (grid_size < 3) throw InvalidParameterError("convexity grid needs at least 3 points");
    const auto g = [&](double z) { return std::pow(eval(f, z), t.t); };
    std::vector<double> zs(grid_size), gs(grid_size);
    for (int i = 0; i < grid_size; ++i) {
        zs[i] = j.m + (j.M - j.m) * i / (grid_size - 1);
        gs[i] = g(zs[i]);
    }
    for (int i = 0; i < grid_size; ++i) {
        for (int k = i + 1; k < grid_size; ++k) {
            const double mid = g(0.5 * (zs[i] + zs[k]));
            const double tol = 1e-10 * std::max(std::fabs(gs[i]), std::fabs(gs[k]));
            if (mid > 0.5 * (gs[i] + gs[k]) + tol) return false;
        }
    }
    return true;
}

ChordCoeffs chord_coeffs(const FunctionDescriptor& f, const Interval& j) {
    const double fm = eval(f, j.m);
    const double fM = eval(f, j.M);
    return {(fM - fm) / (j.M - j.m), (j.M * fm - j.m * fM) / (j.M - j.m)};
}

namespace {

// Deterministic maximizer: dense grid scan, then golden-section polish in
// the bracket around the best grid point. The objectives here are smooth
// but not guaranteed unimodal; grid-first keeps the result reproducible.
double maximize_on(const Interval& j, const std::function<double(double)>& h) {
    constexpr int kGrid = 1024;
    double best = -HUGE_VAL;
    int best_i = 0;
    std::vector<double> zs(kGrid);
    for (int i = 0; i < kGrid; ++i) {
        zs[i] = j.m + (j.M - j.m) * i / (kGrid - 1);
        const double v = h(zs[i]);
        if (v > best) {
            best = v;
            best_i = i;
        }
    }
    double lo = zs[std::max(0, best_i - 1)];
    double hi = zs[std::min(kGrid - 1, best_i + 1)];

    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = hi - inv_phi * (hi - lo);
    double x2 = lo + inv_phi * (hi - lo);
    double h1 = h(x1), h2 = h(x2);
    while (hi - lo > 1e-12) {
        if (h1 < h2) {
            lo = x1;
            x1 = x2;
            h1 = h2;
            x2 = lo + inv_phi * (hi - lo);
            h2 = h(x2);
        } else {
            hi = x2;
            x2 = x1;
            h2 = h1;
            x1 = hi - inv_phi * (hi - lo);
            h1 = h(x1);
        }
    }
    return std::max(best, std::max(h1, h2));
}

}  // namespace

double beta_constant(const FunctionDescriptor& f, const Interval& j, double alpha) {
    if (!std::isfinite(alpha)) throw InvalidParameterError("alpha must be finite");
    const ChordCoeffs c = chord_coeffs(f, j);
    return maximize_on(j, [&](double s) { return c.a_f * s + c.b_f - alpha * eval(f, s); });
}

double ratio_alpha(const FunctionDescriptor& f, const Interval& j) {
    const ChordCoeffs c = chord_coeffs(f, j);
    return maximize_on(j, [&](double s) {
        const double fs = eval(f, s);
        if (!(fs > 0.0))
            throw DomainError("ratio_alpha requires f > 0 on the interval; f(" +
                              std::to_string(s) + ") = " + std::to_string(fs));
        return (c.a_f * s + c.b_f) / fs;
    });
}

double kantorovich_k(const Interval& j, double r) {
    if (!(j.m > 0.0)) throw InvalidParameterError("kantorovich constants require m > 0");
    if (r == 0.0 || r == 1.0)
        throw InvalidParameterError("kantorovich constant undefined for r in {0,1}");
    const double m = j.m, M = j.M;
    const double mMr = m * std::pow(M, r);
    const double Mmr = M * std::pow(m, r);
    const double lead = (mMr - Mmr) / ((r - 1.0) * (M - m));
    const double base = (r - 1.0) / r * (std::pow(M, r) - std::pow(m, r)) / (mMr - Mmr);
    if (base <= 0.0 && !is_integer(r))
        throw InvalidParameterError("negative base under fractional exponent in K(m,M,r)");
    return lead * std::pow(base, r);
}

double kantorovich_c(const Interval& j, double r) {
    if (!(j.m > 0.0)) throw InvalidParameterError("kantorovich constants require m > 0");
    if (r == 0.0 || r == 1.0)
        throw InvalidParameterError("kantorovich constant undefined for r in {0,1}");
    const double m = j.m, M = j.M;
    const double lead = (M * std::pow(m, r) - m * std::pow(M, r)) / (M - m);
    const double base = (std::pow(M, r) - std::pow(m, r)) / (r * (M - m));
    const double expo = r / (r - 1.0);
    if (base <= 0.0 && !is_integer(expo))
        throw InvalidParameterError("negative base under fractional exponent in C(m,M,r)");
    return lead + (r - 1.0) * std::pow(base, expo);
}

}  // namespace opineq
