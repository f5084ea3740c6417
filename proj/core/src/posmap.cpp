#include "opineq/posmap.hpp"

#include <cmath>
#include <random>
#include <string>

namespace opineq {

MapDescriptor MapDescriptor::normalized_trace() { return MapDescriptor(Kind::NormalizedTrace); }

MapDescriptor MapDescriptor::compression(Matrix v) {
    if (v.rows < 1 || v.cols < 1 || v.cols > v.rows)
        throw InvalidParameterError("compression isometry must be n-by-k with 1 <= k <= n");
    MapDescriptor m(Kind::Compression);
    m.v_ = std::move(v);
    return m;
}

MapDescriptor MapDescriptor::pinching(std::vector<int> block_sizes) {
    if (block_sizes.empty())
        throw InvalidParameterError("pinching needs at least one block");
    for (int b : block_sizes)
        if (b < 1) throw InvalidParameterError("pinching block sizes must be positive");
    MapDescriptor m(Kind::Pinching);
    m.blocks_ = std::move(block_sizes);
    return m;
}

MapDescriptor MapDescriptor::unitary_mixture(std::vector<double> weights,
                                             std::vector<Matrix> unitaries) {
    if (weights.empty() || weights.size() != unitaries.size())
        throw InvalidParameterError("unitary mixture needs matching weight/unitary counts");
    const int n = unitaries.front().rows;
    for (const Matrix& u : unitaries)
        if (u.rows != n || u.cols != n)
            throw ShapeError("unitary mixture members must all be n-by-n");
    for (double w : weights)
        if (!(w > 0.0)) throw InvalidParameterError("unitary mixture weights must be positive");
    MapDescriptor m(Kind::UnitaryMixture);
    m.weights_ = std::move(weights);
    m.unitaries_ = std::move(unitaries);
    return m;
}

int MapDescriptor::input_dim() const {
    switch (kind_) {
        case Kind::NormalizedTrace: return 0;
        case Kind::Compression: return v_.rows;
        case Kind::Pinching: {
            int n = 0;
            for (int b : blocks_) n += b;
            return n;
        }
        case Kind::UnitaryMixture: return unitaries_.front().rows;
    }
    return 0;
}

int MapDescriptor::output_dim(int in) const {
    switch (kind_) {
        case Kind::NormalizedTrace: return 1;
        case Kind::Compression: return v_.cols;
        case Kind::Pinching:
        case Kind::UnitaryMixture: return in;
    }
    return in;
}

SymMatrix apply_map(const MapDescriptor& phi, const SymMatrix& a) {
    const int n = a.dim();
    const int want = phi.input_dim();
    if (want != 0 && want != n)
        throw ShapeError("map expects dimension " + std::to_string(want) + ", got " +
                         std::to_string(n));
    switch (phi.kind()) {
        case MapDescriptor::Kind::NormalizedTrace: {
            SymMatrix out = SymMatrix::from_entries(1, {a.trace() / n});
            return out;
        }
        case MapDescriptor::Kind::Compression: {
            Matrix x(n, n);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) x(i, j) = a(i, j);
            const Matrix& v = phi.isometry();
            return SymMatrix::from_product(v.transposed() * x * v);
        }
        case MapDescriptor::Kind::Pinching: {
            Matrix out(n, n);
            int start = 0;
            for (int b : phi.blocks()) {
                for (int i = start; i < start + b; ++i)
                    for (int j = start; j < start + b; ++j) out(i, j) = a(i, j);
                start += b;
            }
            return SymMatrix::from_product(out);
        }
        case MapDescriptor::Kind::UnitaryMixture: {
            Matrix x(n, n);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) x(i, j) = a(i, j);
            SymMatrix acc(n);
            for (size_t i = 0; i < phi.weights().size(); ++i) {
                const Matrix& u = phi.unitaries()[i];
                SymMatrix term = SymMatrix::from_product(u.transposed() * x * u);
                term *= phi.weights()[i];
                acc += term;
            }
            return acc;
        }
    }
    throw InvalidParameterError("unknown map kind");
}

namespace {

SymMatrix random_symmetric(int n, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    SymMatrix a(n);
    std::vector<double> raw(static_cast<size_t>(n) * n);
    for (double& v : raw) v = u(rng);
    Matrix full(n, n);
    full.d = raw;
    return SymMatrix::from_product(full);  // (X+X^T)/2, no warning
}

SymMatrix random_gram(int n, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    Matrix g(n, n);
    for (double& v : g.d) v = u(rng);
    return SymMatrix::from_product(g.transposed() * g);
}

}  // namespace

bool verify_map(const MapDescriptor& phi, int trials, std::uint64_t seed, int fallback_dim) {
    if (trials < 1) throw InvalidParameterError("verify_map needs trials >= 1");
    const int n = phi.input_dim() != 0 ? phi.input_dim() : fallback_dim;
    std::mt19937_64 rng(seed);

    // unitality
    const SymMatrix image_of_identity = apply_map(phi, SymMatrix::identity(n));
    SymMatrix gap = image_of_identity - SymMatrix::identity(image_of_identity.dim());
    if (gap.max_abs_entry() > 1e-10) return false;

    // linearity on random pairs
    std::uniform_real_distribution<double> coeff(-2.0, 2.0);
    const int pairs = std::min(trials, 16);
    for (int i = 0; i < pairs; ++i) {
        const SymMatrix x = random_symmetric(n, rng);
        const SymMatrix y = random_symmetric(n, rng);
        const double a = coeff(rng), b = coeff(rng);
        SymMatrix combo = a * x + b * y;
        SymMatrix lhs = apply_map(phi, combo);
        SymMatrix rhs = a * apply_map(phi, x) + b * apply_map(phi, y);
        if ((lhs - rhs).max_abs_entry() > 1e-10) return false;
    }

    // positivity on random Gram matrices
    for (int i = 0; i < trials; ++i) {
        const SymMatrix s = random_gram(n, rng);
        const SymMatrix img = apply_map(phi, s);
        const EigenDecomp ed = eigendecompose(img);
        if (ed.eigenvalues.front() < -1e-9) return false;
    }
    return true;
}

}  // namespace opineq
