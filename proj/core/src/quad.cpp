#include "opineq/quad.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <string>

namespace opineq {

QuadratureConfig QuadratureConfig::gauss_legendre(int nodes) {
    if (nodes < 2 || nodes > 256)
        throw InvalidParameterError("gauss-legendre node count must be in [2,256], got " +
                                    std::to_string(nodes));
    QuadratureConfig c;
    c.scheme = Scheme::GaussLegendre;
    c.nodes = nodes;
    return c;
}

QuadratureConfig QuadratureConfig::adaptive_simpson(double abs_tol, int max_depth) {
    if (!(abs_tol > 0.0)) throw InvalidParameterError("adaptive simpson abs_tol must be > 0");
    if (max_depth < 1 || max_depth > 40)
        throw InvalidParameterError("adaptive simpson max_depth must be in [1,40]");
    QuadratureConfig c;
    c.scheme = Scheme::AdaptiveSimpson;
    c.abs_tol = abs_tol;
    c.max_depth = max_depth;
    return c;
}

double QuadratureConfig::chain_tolerance() const {
    if (scheme == Scheme::AdaptiveSimpson) return std::max(1e-8, 10.0 * abs_tol);
    return 1e-8;
}

namespace {

// Newton on P_n with the Chebyshev-like initial guess; returns only the
// lower half, the rest follows by symmetry.
GaussRule compute_gauss_rule(int n) {
    GaussRule r;
    r.nodes.assign(n, 0.0);
    r.weights.assign(n, 0.0);
    const int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            pp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / pp;
            x -= dx;
            if (std::fabs(dx) < 1e-15) break;
        }
        r.nodes[i] = -x;
        r.nodes[n - 1 - i] = x;
        const double w = 2.0 / ((1.0 - x * x) * pp * pp);
        r.weights[i] = w;
        r.weights[n - 1 - i] = w;
    }
    return r;
}

double simpson(double a, double fa, double fm, double b, double fb) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive_step(const std::function<double(double)>& g, double a, double fa, double b,
                     double fb, double m, double fm, double whole, double tol, int depth,
                     bool& exhausted) {
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = g(lm), frm = g(rm);
    const double left = simpson(a, fa, flm, m, fm);
    const double right = simpson(m, fm, frm, b, fb);
    const double delta = left + right - whole;
    if (std::fabs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
    if (depth <= 0) {
        exhausted = true;
        return left + right + delta / 15.0;
    }
    return adaptive_step(g, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth - 1, exhausted) +
           adaptive_step(g, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth - 1, exhausted);
}

}  // namespace

const GaussRule& gauss_rule(int n) {
    static std::mutex mu;
    static std::map<int, GaussRule> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, compute_gauss_rule(n)).first;
    return it->second;
}

double integrate(const std::function<double(double)>& g, double a, double b,
                 const QuadratureConfig& cfg) {
    if (!(a < b)) throw InvalidParameterError("integration requires a < b");
    if (cfg.scheme == QuadratureConfig::Scheme::GaussLegendre) {
        const GaussRule& r = gauss_rule(cfg.nodes);
        const double mid = 0.5 * (a + b), hw = 0.5 * (b - a);
        double s = 0.0;
        for (size_t i = 0; i < r.nodes.size(); ++i) s += r.weights[i] * g(mid + hw * r.nodes[i]);
        return s * hw;
    }
    const double m = 0.5 * (a + b);
    const double fa = g(a), fb = g(b), fm = g(m);
    bool exhausted = false;
    const double est = adaptive_step(g, a, fa, b, fb, m, fm, simpson(a, fa, fm, b, fb),
                                     cfg.abs_tol, cfg.max_depth, exhausted);
    if (exhausted)
        throw AccuracyError("adaptive simpson exhausted max_depth=" +
                                std::to_string(cfg.max_depth) + " before reaching abs_tol",
                            est);
    return est;
}

}  // namespace opineq
