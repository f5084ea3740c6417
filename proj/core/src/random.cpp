#include "opineq/random.hpp"

#include <cmath>

namespace opineq::ensembles {

SymMatrix symmetric(int n, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    Matrix full(n, n);
    for (double& v : full.d) v = u(rng);
    return SymMatrix::from_product(full);
}

SymMatrix symmetric_with_floor(int n, double floor, std::mt19937_64& rng) {
    SymMatrix a = symmetric(n, rng);
    if (n == 1) {
        // nothing to decompose; slide the single entry
        return SymMatrix::from_entries(1, {floor + std::fabs(a(0, 0))});
    }
    const EigenDecomp ed = eigendecompose(a);
    const double shift = floor - ed.eigenvalues.front();
    SymMatrix shifted = a + shift * SymMatrix::identity(n);
    return shifted;
}

SymMatrix gram(int n, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    Matrix g(n, n);
    for (double& v : g.d) v = u(rng);
    return SymMatrix::from_product(g.transposed() * g);
}

SymMatrix with_spectrum(const std::vector<double>& eigenvalues, std::mt19937_64& rng) {
    const int n = static_cast<int>(eigenvalues.size());
    const Matrix q = orthogonal(n, rng);
    Matrix scaled = q;
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) scaled(i, j) *= eigenvalues[j];
    return SymMatrix::from_product(scaled * q.transposed());
}

Matrix orthogonal(int n, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Matrix q(n, n);
    for (int j = 0; j < n; ++j) {
        // draw a column, orthogonalize against the previous ones (twice,
        // for orthogonality at the 1e-15 level), normalize
        for (int pass = 0;; ++pass) {
            for (int i = 0; i < n; ++i) q(i, j) = gauss(rng);
            for (int rep = 0; rep < 2; ++rep) {
                for (int k = 0; k < j; ++k) {
                    double dot = 0.0;
                    for (int i = 0; i < n; ++i) dot += q(i, k) * q(i, j);
                    for (int i = 0; i < n; ++i) q(i, j) -= dot * q(i, k);
                }
            }
            double norm = 0.0;
            for (int i = 0; i < n; ++i) norm += q(i, j) * q(i, j);
            norm = std::sqrt(norm);
            if (norm > 1e-8) {
                for (int i = 0; i < n; ++i) q(i, j) /= norm;
                break;
            }
            if (pass > 32) throw NumericalError("failed to sample an orthogonal matrix");
        }
    }
    return q;
}

Matrix isometry(int n, int k, std::mt19937_64& rng) {
    const Matrix q = orthogonal(n, rng);
    Matrix v(n, k);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < k; ++j) v(i, j) = q(i, j);
    return v;
}

std::vector<double> unit_vector(int n, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<double> x(n);
    double norm = 0.0;
    do {
        norm = 0.0;
        for (double& v : x) {
            v = gauss(rng);
            norm += v * v;
        }
    } while (norm < 1e-12);
    norm = std::sqrt(norm);
    for (double& v : x) v /= norm;
    return x;
}

std::mt19937_64 draw_rng(std::uint64_t seed, std::uint64_t index) {
    // splitmix-style scramble keeps per-draw streams decorrelated
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    z = z ^ (z >> 31);
    return std::mt19937_64(z);
}

}  // namespace opineq::ensembles
