#ifndef OPINEQ_POSMAP_HPP
#define OPINEQ_POSMAP_HPP

#include <cstdint>
#include <vector>

#include "opineq/symmat.hpp"

namespace opineq {

/// A candidate positive unital linear map. Construction checks only the
/// structural shape of the data; whether the map really is positive and
/// unital is decided dynamically by verify_map (a compression built from a
/// non-isometric V constructs fine and verifies false).
class MapDescriptor {
  public:
    enum class Kind { NormalizedTrace, Compression, Pinching, UnitaryMixture };

    /// X -> [tr(X)/n], a 1x1 output for any input dimension.
    static MapDescriptor normalized_trace();
    /// X -> V^T X V with V n-by-k; unital iff the columns are orthonormal.
    static MapDescriptor compression(Matrix v);
    /// Erases off-block entries relative to the given partition of indices.
    static MapDescriptor pinching(std::vector<int> block_sizes);
    /// X -> sum_i w_i U_i^T X U_i with positive weights.
    static MapDescriptor unitary_mixture(std::vector<double> weights, std::vector<Matrix> unitaries);

    Kind kind() const { return kind_; }
    /// Required input dimension; 0 means any (normalized trace).
    int input_dim() const;
    int output_dim(int input_dim) const;

    const Matrix& isometry() const { return v_; }
    const std::vector<int>& blocks() const { return blocks_; }
    const std::vector<double>& weights() const { return weights_; }
    const std::vector<Matrix>& unitaries() const { return unitaries_; }

  private:
    explicit MapDescriptor(Kind k) : kind_(k) {}

    Kind kind_;
    Matrix v_;
    std::vector<int> blocks_;
    std::vector<double> weights_;
    std::vector<Matrix> unitaries_;
};

SymMatrix apply_map(const MapDescriptor& phi, const SymMatrix& a);

/// Samples the defining properties: phi(I) = I to 1e-10, linearity on
/// random pairs to 1e-10, and positivity phi(G^T G) >= -1e-9 on `trials`
/// random Gram matrices. `fallback_dim` is used when the map accepts any
/// input dimension.
bool verify_map(const MapDescriptor& phi, int trials, std::uint64_t seed = 0x5eedULL,
                int fallback_dim = 4);

}  // namespace opineq

#endif
