#ifndef OPINEQ_SYMMAT_HPP
#define OPINEQ_SYMMAT_HPP

#include <functional>
#include <vector>

#include "opineq/errors.hpp"
#include "opineq/interval.hpp"

namespace opineq {

/// Plain dense rectangular matrix, row-major. Carrier for eigenvector
/// bases, isometries and orthogonal factors; no algebraic invariants.
struct Matrix {
    int rows = 0;
    int cols = 0;
    std::vector<double> d;  // rows*cols, row-major

    Matrix() = default;
    Matrix(int r, int c) : rows(r), cols(c), d(static_cast<size_t>(r) * c, 0.0) {}

    double operator()(int i, int j) const { return d[static_cast<size_t>(i) * cols + j]; }
    double& operator()(int i, int j) { return d[static_cast<size_t>(i) * cols + j]; }

    static Matrix identity(int n);
    Matrix transposed() const;
};

Matrix operator*(const Matrix& a, const Matrix& b);
double max_abs(const Matrix& a);

/// Dense real symmetric matrix. Entries are stored full row-major and are
/// exactly symmetric after construction: raw input is replaced by
/// (X + X^T)/2, with a stderr warning when the asymmetry exceeds 1e-12.
class SymMatrix {
  public:
    SymMatrix() = default;
    explicit SymMatrix(int n) : n_(n), e_(static_cast<size_t>(n) * n, 0.0) {}

    /// Symmetrizing constructor for untrusted row-major input.
    static SymMatrix from_entries(int n, std::vector<double> row_major);
    static SymMatrix from_rows(const std::vector<std::vector<double>>& rows);
    static SymMatrix identity(int n);
    static SymMatrix diag(const std::vector<double>& v);

    int dim() const { return n_; }
    double operator()(int i, int j) const { return e_[static_cast<size_t>(i) * n_ + j]; }
    const std::vector<double>& entries() const { return e_; }

    double trace() const;
    double max_abs_entry() const;
    double frobenius() const;

    SymMatrix& operator+=(const SymMatrix& o);
    SymMatrix& operator-=(const SymMatrix& o);
    SymMatrix& operator*=(double s);

    /// Trusted assembly path for internally computed symmetric products;
    /// symmetrizes silently (round-off only, no warning).
    static SymMatrix from_product(const Matrix& full);

  private:
    int n_ = 0;
    std::vector<double> e_;
};

SymMatrix operator+(SymMatrix a, const SymMatrix& b);
SymMatrix operator-(SymMatrix a, const SymMatrix& b);
SymMatrix operator*(double s, SymMatrix a);

/// Spectral factorization A = Q diag(lambda) Q^T, eigenvalues ascending,
/// Q orthogonal with eigenvectors in columns.
struct EigenDecomp {
    std::vector<double> eigenvalues;
    Matrix q;
};

/// Outcome of a Loewner comparison A <= B.
struct LoewnerVerdict {
    bool holds = false;
    double min_gap_eigenvalue = 0.0;  // lambda_min(B - A)
    double tolerance_used = 0.0;
};

/// Cyclic Jacobi diagonalization. Sweeps until the off-diagonal Frobenius
/// mass falls below 1e-14 * ||A||_F; throws NumericalError after 100 sweeps.
EigenDecomp eigendecompose(const SymMatrix& a);

/// Functional calculus f(A) = Q diag(f(lambda_i)) Q^T.
SymMatrix apply_fn(const std::function<double(double)>& f, const SymMatrix& a);
SymMatrix apply_fn(const std::function<double(double)>& f, const EigenDecomp& ed);

/// Tightest [lambda_min, lambda_max]; DegenerateSpectrumError when the
/// spectrum collapses to a point (the chains require m < M).
Interval spectrum_bounds(const SymMatrix& a);
Interval spectrum_bounds(const EigenDecomp& ed, double scale_hint);

/// Loewner comparison a <= b at tolerance tol_scale * (1 + max entry norm),
/// floored at 1e-12.
LoewnerVerdict loewner_leq(const SymMatrix& a, const SymMatrix& b, double tol_scale = 1e-9);

}  // namespace opineq

#endif
