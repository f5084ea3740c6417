#ifndef OPINEQ_RANDOM_HPP
#define OPINEQ_RANDOM_HPP

#include <cstdint>
#include <random>

#include "opineq/symmat.hpp"

namespace opineq {

/// Seeded draws used by sweeps and property checks. All functions are
/// deterministic given the generator state.
namespace ensembles {

/// Symmetric matrix with entries uniform in [-1, 1] (then symmetrized).
SymMatrix symmetric(int n, std::mt19937_64& rng);

/// Symmetric matrix shifted so the smallest eigenvalue equals `floor`
/// (floor > 0 enforces a positive spectrum).
SymMatrix symmetric_with_floor(int n, double floor, std::mt19937_64& rng);

/// Gram matrix G^T G, positive semidefinite.
SymMatrix gram(int n, std::mt19937_64& rng);

/// Q diag(eigenvalues) Q^T for a random orthogonal Q.
SymMatrix with_spectrum(const std::vector<double>& eigenvalues, std::mt19937_64& rng);

/// Haar-ish orthogonal matrix via Gram-Schmidt on a Gaussian sample.
Matrix orthogonal(int n, std::mt19937_64& rng);

/// First k columns of a random orthogonal matrix (an n-by-k isometry).
Matrix isometry(int n, int k, std::mt19937_64& rng);

/// Unit vector, uniform on the sphere.
std::vector<double> unit_vector(int n, std::mt19937_64& rng);

/// Stream generator for draw `index` of a sweep with the given seed;
/// independent of evaluation order, so parallel sweeps stay reproducible.
std::mt19937_64 draw_rng(std::uint64_t seed, std::uint64_t index);

}  // namespace ensembles

}  // namespace opineq

#endif
