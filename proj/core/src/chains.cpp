#include "opineq/chains.hpp"

#include <algorithm>
#include <cmath>

#include "opineq/random.hpp"

namespace opineq {

std::string to_string(AlphaMode m) {
    switch (m) {
        case AlphaMode::Ratio: return "ratio";
        case AlphaMode::Unit: return "unit";
        case AlphaMode::Custom: return "custom";
    }
    return "?";
}

double ChainReport::worst_gap() const {
    double w = HUGE_VAL;
    for (const LoewnerVerdict& v : links) w = std::min(w, v.min_gap_eigenvalue);
    return links.empty() ? 0.0 : w;
}

namespace {

double interval_slack(const Interval& j) {
    return 1e-9 * (1.0 + std::max(std::fabs(j.m), std::fabs(j.M)));
}

// z may sit a round-off hair outside [m,M] (tight windows reuse the same
// eigenvalues); clamp within the slack, reject beyond it.
double clamp_into(const Interval& j, double z, const char* what) {
    const double slack = interval_slack(j);
    if (z < j.m - slack || z > j.M + slack)
        throw DomainError(std::string(what) + ": point " + std::to_string(z) +
                          " outside the window [" + std::to_string(j.m) + ", " +
                          std::to_string(j.M) + "]");
    return std::min(std::max(z, j.m), j.M);
}

std::function<double(double)> fn_of(const FunctionDescriptor& f) {
    return [f](double z) { return eval(f, z); };
}

Interval resolve_window(const std::optional<Interval>& window, const EigenDecomp& ed,
                        double scale_hint) {
    if (!window) return spectrum_bounds(ed, scale_hint);
    const Interval& j = *window;
    const double slack = interval_slack(j);
    if (ed.eigenvalues.front() < j.m - slack || ed.eigenvalues.back() > j.M + slack)
        throw PreconditionError("spectrum [" + std::to_string(ed.eigenvalues.front()) + ", " +
                                std::to_string(ed.eigenvalues.back()) +
                                "] not contained in the window [" + std::to_string(j.m) + ", " +
                                std::to_string(j.M) + "]");
    return j;
}

void require_unital(const MapDescriptor& phi, int n) {
    const SymMatrix img = apply_map(phi, SymMatrix::identity(n));
    const SymMatrix gap = img - SymMatrix::identity(img.dim());
    if (gap.max_abs_entry() > 1e-8)
        throw PreconditionError("map is not unital: ||phi(I) - I||_max = " +
                                std::to_string(gap.max_abs_entry()));
}

void require_power_convex(const FunctionDescriptor& f, const PowerTransform& t,
                          const Interval& j) {
    if (!is_power_convex(f, t, j))
        throw PreconditionError("f^t fails the convexity test for " + f.describe() +
                                " with t = " + std::to_string(t.t) + " on [" +
                                std::to_string(j.m) + ", " + std::to_string(j.M) + "]");
}

SymMatrix scalar1x1(double v) { return SymMatrix::from_entries(1, {v}); }

void finalize(ChainReport& rep, double tol_scale) {
    rep.tolerance = tol_scale;
    rep.links.clear();
    rep.passed = true;
    for (size_t i = 0; i + 1 < rep.terms.size(); ++i) {
        rep.links.push_back(loewner_leq(rep.terms[i], rep.terms[i + 1], tol_scale));
        rep.passed = rep.passed && rep.links.back().holds;
    }
}

}  // namespace

double middle_term_scalar(const FunctionDescriptor& f, const PowerTransform& t, const Interval& j,
                          double z) {
    z = clamp_into(j, z, "envelope");
    const double w1 = (j.M - z) / (j.M - j.m);
    const double w2 = (z - j.m) / (j.M - j.m);
    const double fmt = std::pow(eval(f, j.m), t.t);
    const double fMt = std::pow(eval(f, j.M), t.t);
    return std::pow(w1 * fmt + w2 * fMt, 1.0 / t.t);
}

std::array<double, 3> pointwise_refinement(const FunctionDescriptor& f, const PowerTransform& t,
                                           const Interval& j, double z) {
    z = clamp_into(j, z, "pointwise refinement");
    const double reflected = j.m + j.M - z;
    const double fz = eval(f, z);
    return {eval(f, reflected),
            middle_term_scalar(f, t, j, z) + middle_term_scalar(f, t, j, reflected) - fz,
            eval(f, j.m) + eval(f, j.M) - fz};
}

ChainReport hh_chain(const FunctionDescriptor& f, const PowerTransform& t, const Interval& j,
                     const QuadratureConfig& cfg) {
    require_power_convex(f, t, j);
    const double width = j.M - j.m;
    const double mean_f = integrate(fn_of(f), j.m, j.M, cfg) / width;
    const double mean_env =
        integrate([&](double z) { return middle_term_scalar(f, t, j, z); }, j.m, j.M, cfg) / width;

    ChainReport rep;
    rep.name = "hh_chain";
    rep.mode = "scalar";
    rep.window = j;
    rep.labels = {"f(midpoint)", "mean(f)", "mean(envelope)", "endpoint_mean"};
    rep.terms = {scalar1x1(eval(f, 0.5 * (j.m + j.M))), scalar1x1(mean_f), scalar1x1(mean_env),
                 scalar1x1(0.5 * (eval(f, j.m) + eval(f, j.M)))};
    finalize(rep, 1e-9);
    return rep;
}

namespace {

struct ReverseBound {
    double alpha;
    double beta;
};

ReverseBound resolve_alpha(const FunctionDescriptor& f, const Interval& j, AlphaMode mode,
                           double custom_alpha) {
    switch (mode) {
        case AlphaMode::Ratio: return {ratio_alpha(f, j), 0.0};
        case AlphaMode::Unit: return {1.0, beta_constant(f, j, 1.0)};
        case AlphaMode::Custom: return {custom_alpha, beta_constant(f, j, custom_alpha)};
    }
    throw InvalidParameterError("unknown alpha mode");
}

}  // namespace

ChainReport operator_chain(const FunctionDescriptor& f, const SymMatrix& a,
                           const MapDescriptor& phi, const ChainParams& params,
                           double tol_scale) {
    const EigenDecomp ed = eigendecompose(a);
    const Interval j = resolve_window(params.window, ed, a.max_abs_entry());
    require_power_convex(f, params.t, j);
    require_unital(phi, a.dim());

    const SymMatrix t1 = apply_map(phi, apply_fn(fn_of(f), ed));
    const SymMatrix envelope =
        apply_fn([&](double z) { return middle_term_scalar(f, params.t, j, z); }, ed);
    const SymMatrix t2 = apply_map(phi, envelope);

    const ReverseBound rb = resolve_alpha(f, j, params.alpha_mode, params.alpha);
    const SymMatrix phi_a = apply_map(phi, a);
    SymMatrix t3 = rb.beta * SymMatrix::identity(phi_a.dim()) + rb.alpha * apply_fn(fn_of(f), phi_a);

    ChainReport rep;
    rep.name = "operator_chain";
    rep.mode = to_string(params.alpha_mode);
    rep.window = j;
    rep.labels = {"phi(f(A))", "phi(envelope_t(A))", "beta*I + alpha*f(phi(A))"};
    rep.terms = {t1, t2, std::move(t3)};
    rep.constants.alpha = rb.alpha;
    rep.constants.beta = rb.beta;
    finalize(rep, tol_scale);
    return rep;
}

ChainReport power_chain(double r, const PowerTransform& t, const SymMatrix& a,
                        const MapDescriptor& phi, const std::optional<Interval>& window,
                        PowerChainMode mode, double tol_scale) {
    if (r > 1.0) {
        if (!(t.t < 1.0 && t.t * r >= 1.0))
            throw PreconditionError("power chain with r > 1 needs 1 < 1/t <= r; got r = " +
                                    std::to_string(r) + ", t = " + std::to_string(t.t));
    } else if (r < 0.0) {
        if (!(t.t < 1.0))
            throw PreconditionError("power chain with r < 0 needs t in (0,1)");
    } else {
        throw PreconditionError("power chain requires r > 1 or r < 0, got r = " +
                                std::to_string(r));
    }

    const FunctionDescriptor f = FunctionDescriptor::power(r);
    const EigenDecomp ed = eigendecompose(a);
    const Interval j = resolve_window(window, ed, a.max_abs_entry());
    if (!(j.m > 0.0))
        throw PreconditionError("power chain requires a positive window, got m = " +
                                std::to_string(j.m));
    require_unital(phi, a.dim());

    const SymMatrix t1 = apply_map(phi, apply_fn(fn_of(f), ed));
    const SymMatrix t2 =
        apply_map(phi, apply_fn([&](double z) { return middle_term_scalar(f, t, j, z); }, ed));

    const SymMatrix phi_a_pow = apply_fn(fn_of(f), apply_map(phi, a));
    ChainReport rep;
    rep.name = "power_chain";
    rep.window = j;
    if (mode == PowerChainMode::RatioK) {
        const double k = kantorovich_k(j, r);
        rep.mode = "ratio";
        rep.labels = {"phi(A^r)", "phi(envelope_t(A))", "K*phi(A)^r"};
        rep.terms = {t1, t2, k * phi_a_pow};
        rep.constants.k = k;
        rep.constants.alpha = k;
    } else {
        const double c = kantorovich_c(j, r);
        rep.mode = "difference";
        rep.labels = {"phi(A^r)", "phi(envelope_t(A))", "C*I + phi(A)^r"};
        rep.terms = {t1, t2, c * SymMatrix::identity(phi_a_pow.dim()) + phi_a_pow};
        rep.constants.c = c;
        rep.constants.beta = c;
    }
    finalize(rep, tol_scale);
    return rep;
}

ChainReport kantorovich_integral_chain(const SymMatrix& a, const MapDescriptor& phi,
                                       const std::optional<Interval>& window,
                                       const QuadratureConfig& cfg) {
    const EigenDecomp ed = eigendecompose(a);
    if (ed.eigenvalues.front() <= 0.0)
        throw DomainError("kantorovich chain requires a positive spectrum; lambda_min = " +
                          std::to_string(ed.eigenvalues.front()));
    const Interval j = resolve_window(window, ed, a.max_abs_entry());
    if (!(j.m > 0.0))
        throw DomainError("kantorovich chain requires a positive window, got m = " +
                          std::to_string(j.m));
    require_unital(phi, a.dim());

    const FunctionDescriptor inv = FunctionDescriptor::power(-1.0);
    const SymMatrix t1 = apply_map(phi, apply_fn(fn_of(inv), ed));

    // the t-integral evaluated per eigenvalue; all envelope operators are
    // functions of A, so this commutes with the spectral basis exactly.
    // expm1/log1p keep the integrand stable down to t = 0, where it has a
    // removable singularity with limit m^-w1 * M^-w2
    const double log_m = std::log(j.m);
    const double log_M = std::log(j.M);
    const auto integrated_envelope = [&](double lambda) {
        const double z = clamp_into(j, lambda, "kantorovich envelope");
        const double w1 = (j.M - z) / (j.M - j.m);
        const double w2 = (z - j.m) / (j.M - j.m);
        return integrate(
            [&](double t) {
                if (t <= 0.0) return std::exp(-(w1 * log_m + w2 * log_M));
                const double x = w1 * std::expm1(-t * log_m) + w2 * std::expm1(-t * log_M);
                return std::exp(std::log1p(x) / t);
            },
            0.0, 1.0, cfg);
    };
    const SymMatrix t2 = apply_map(phi, apply_fn(integrated_envelope, ed));

    const double k = (j.M + j.m) * (j.M + j.m) / (4.0 * j.M * j.m);
    const SymMatrix t3 = k * apply_fn(fn_of(inv), apply_map(phi, a));

    ChainReport rep;
    rep.name = "kantorovich_integral_chain";
    rep.mode = "integral";
    rep.window = j;
    rep.labels = {"phi(inv(A))", "phi(int_envelope(A))", "K*inv(phi(A))"};
    rep.terms = {t1, t2, t3};
    rep.constants.k = k;
    finalize(rep, cfg.chain_tolerance());
    return rep;
}

ChainReport furuta_chain(const FunctionDescriptor& f, const PowerTransform& t, const SymMatrix& a,
                         const SymMatrix& b, const std::optional<Interval>& window, double alpha,
                         double tol_scale) {
    if (!(alpha > 0.0))
        throw PreconditionError("furuta chain requires alpha > 0, got " + std::to_string(alpha));
    const LoewnerVerdict order = loewner_leq(a, b, tol_scale);
    if (!order.holds)
        throw PreconditionError("A <= B fails: lambda_min(B - A) = " +
                                std::to_string(order.min_gap_eigenvalue));

    const EigenDecomp ed_a = eigendecompose(a);
    const EigenDecomp ed_b = eigendecompose(b);
    Interval j = window ? *window
                        : Interval(std::min(ed_a.eigenvalues.front(), ed_b.eigenvalues.front()),
                                   std::max(ed_a.eigenvalues.back(), ed_b.eigenvalues.back()));
    const double slack = 1e-9 * (1.0 + std::max(std::fabs(j.m), std::fabs(j.M)));
    for (const EigenDecomp* ed : {&ed_a, &ed_b}) {
        if (ed->eigenvalues.front() < j.m - slack || ed->eigenvalues.back() > j.M + slack)
            throw PreconditionError(
                "both spectra must lie in the window [" + std::to_string(j.m) + ", " +
                std::to_string(j.M) + "]; found eigenvalue " +
                std::to_string(ed->eigenvalues.front() < j.m - slack ? ed->eigenvalues.front()
                                                                     : ed->eigenvalues.back()));
    }
    require_power_convex(f, t, j);

    // orientation from monotonicity: the sandwich lives on the smaller
    // operator for increasing f and on the larger one for decreasing f
    const bool increasing = eval(f, j.M) >= eval(f, j.m);
    double prev = eval(f, j.m);
    for (int i = 1; i <= 64; ++i) {
        const double cur = eval(f, j.m + (j.M - j.m) * i / 64.0);
        const double tol = 1e-12 * (1.0 + std::fabs(prev));
        if (increasing ? cur < prev - tol : cur > prev + tol)
            throw PreconditionError("furuta chain requires monotone f on the window");
        prev = cur;
    }

    const EigenDecomp& ed_low = increasing ? ed_a : ed_b;
    const SymMatrix& far_side = increasing ? b : a;
    const double beta = beta_constant(f, j, alpha);

    const SymMatrix t1 = apply_fn(fn_of(f), ed_low);
    const SymMatrix t2 = apply_fn([&](double z) { return middle_term_scalar(f, t, j, z); }, ed_low);
    const SymMatrix t3 =
        beta * SymMatrix::identity(a.dim()) + alpha * apply_fn(fn_of(f), far_side);

    ChainReport rep;
    rep.name = "furuta_chain";
    rep.mode = increasing ? "increasing" : "decreasing";
    rep.window = j;
    rep.labels = increasing
                     ? std::vector<std::string>{"f(A)", "envelope_t(A)", "beta*I + alpha*f(B)"}
                     : std::vector<std::string>{"f(B)", "envelope_t(B)", "beta*I + alpha*f(A)"};
    rep.terms = {t1, t2, t3};
    rep.constants.alpha = alpha;
    rep.constants.beta = beta;
    finalize(rep, tol_scale);
    return rep;
}

bool mond_pecaric_check(const FunctionDescriptor& f, const SymMatrix& a,
                        const std::vector<double>& x, int trials, std::uint64_t seed) {
    if (static_cast<int>(x.size()) != a.dim())
        throw ShapeError("vector length does not match matrix dimension");
    if (trials < 0) throw PreconditionError("trials must be non-negative");
    double norm = 0.0;
    for (double v : x) norm += v * v;
    norm = std::sqrt(norm);
    if (std::fabs(norm - 1.0) > 1e-12)
        throw PreconditionError("mond-pecaric check requires a unit vector, ||x|| = " +
                                std::to_string(norm));

    const EigenDecomp ed = eigendecompose(a);
    if (ed.eigenvalues.back() - ed.eigenvalues.front() >
        1e-12 * (1.0 + std::fabs(ed.eigenvalues.back()))) {
        // convexity of plain f on the spectral window (degenerate spectra
        // satisfy the bound with equality for any f)
        require_power_convex(f, PowerTransform{1.0},
                             Interval(ed.eigenvalues.front(), ed.eigenvalues.back()));
    }
    const SymMatrix fa = apply_fn(fn_of(f), ed);
    const auto holds_for = [&](const std::vector<double>& v) {
        double quad_a = 0.0, quad_fa = 0.0;
        for (int i = 0; i < a.dim(); ++i)
            for (int k = 0; k < a.dim(); ++k) {
                quad_a += v[i] * a(i, k) * v[k];
                quad_fa += v[i] * fa(i, k) * v[k];
            }
        return eval(f, quad_a) <= quad_fa + 1e-9;
    };

    if (!holds_for(x)) return false;
    std::mt19937_64 rng(seed);
    for (int i = 0; i < trials; ++i)
        if (!holds_for(ensembles::unit_vector(a.dim(), rng))) return false;
    return true;
}

LoewnerVerdict dcj_check(const FunctionDescriptor& f, const SymMatrix& a,
                         const MapDescriptor& phi, double tol_scale) {
    if (!f.declared_operator_convex())
        throw PreconditionError(f.describe() +
                                " is not declared operator convex; the one-sided bound needs it");
    require_unital(phi, a.dim());
    const SymMatrix lhs = apply_fn(fn_of(f), apply_map(phi, a));
    const SymMatrix rhs = apply_map(phi, apply_fn(fn_of(f), a));
    return loewner_leq(lhs, rhs, tol_scale);
}

ChainReport two_sided_ratio_chain(const FunctionDescriptor& f, const SymMatrix& a,
                            const MapDescriptor& phi, const std::optional<Interval>& window,
                            double tol_scale) {
    const EigenDecomp ed = eigendecompose(a);
    const Interval j = resolve_window(window, ed, a.max_abs_entry());
    require_power_convex(f, PowerTransform{1.0}, j);  // plain convexity
    require_unital(phi, a.dim());

    const double alpha = ratio_alpha(f, j);
    const SymMatrix phi_fa = apply_map(phi, apply_fn(fn_of(f), ed));
    const SymMatrix f_phia = apply_fn(fn_of(f), apply_map(phi, a));

    ChainReport rep;
    rep.name = "two_sided_ratio_chain";
    rep.mode = "two_sided";
    rep.window = j;
    rep.labels = {"(1/alpha)*phi(f(A))", "f(phi(A))", "alpha*phi(f(A))"};
    rep.terms = {(1.0 / alpha) * phi_fa, f_phia, alpha * phi_fa};
    rep.constants.alpha = alpha;
    finalize(rep, tol_scale);
    return rep;
}

std::vector<FunctionDescriptor> builtin_catalog() {
    return {FunctionDescriptor::power(-1.0),  FunctionDescriptor::power(2.0),
            FunctionDescriptor::power(3.0),   FunctionDescriptor::power(-0.5),
            FunctionDescriptor::exp(),        FunctionDescriptor::affine_of_power(2.0, 0.5, 2.0)};
}

}  // namespace opineq
