#include "opineq/symmat.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>

namespace opineq {

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

Matrix Matrix::transposed() const {
    Matrix t(cols, rows);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols != b.rows)
        throw ShapeError("matrix product shape mismatch: " + std::to_string(a.cols) + " vs " +
                         std::to_string(b.rows));
    Matrix c(a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i) {
        for (int k = 0; k < a.cols; ++k) {
            const double aik = a(i, k);
            if (aik == 0.0) continue;
            for (int j = 0; j < b.cols; ++j) c(i, j) += aik * b(k, j);
        }
    }
    return c;
}

double max_abs(const Matrix& a) {
    double m = 0.0;
    for (double v : a.d) m = std::max(m, std::fabs(v));
    return m;
}

SymMatrix SymMatrix::from_entries(int n, std::vector<double> row_major) {
    if (n < 1) throw ShapeError("matrix dimension must be >= 1");
    if (row_major.size() != static_cast<size_t>(n) * n)
        throw ShapeError("entry count does not match dimension");
    double asym = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            asym = std::max(asym, std::fabs(row_major[static_cast<size_t>(i) * n + j] -
                                            row_major[static_cast<size_t>(j) * n + i]));
    if (asym > 1e-12)
        std::fprintf(stderr, "opineq: warning: symmetrizing input matrix, asymmetry %.3e\n", asym);
    SymMatrix a(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            a.e_[static_cast<size_t>(i) * n + j] =
                0.5 * (row_major[static_cast<size_t>(i) * n + j] +
                       row_major[static_cast<size_t>(j) * n + i]);
    return a;
}

SymMatrix SymMatrix::from_rows(const std::vector<std::vector<double>>& rows) {
    const int n = static_cast<int>(rows.size());
    std::vector<double> flat;
    flat.reserve(static_cast<size_t>(n) * n);
    for (const auto& r : rows) {
        if (static_cast<int>(r.size()) != n) throw ShapeError("matrix rows must all have length n");
        flat.insert(flat.end(), r.begin(), r.end());
    }
    return from_entries(n, std::move(flat));
}

SymMatrix SymMatrix::identity(int n) {
    SymMatrix a(n);
    for (int i = 0; i < n; ++i) a.e_[static_cast<size_t>(i) * n + i] = 1.0;
    return a;
}

SymMatrix SymMatrix::diag(const std::vector<double>& v) {
    SymMatrix a(static_cast<int>(v.size()));
    for (size_t i = 0; i < v.size(); ++i) a.e_[i * v.size() + i] = v[i];
    return a;
}

SymMatrix SymMatrix::from_product(const Matrix& full) {
    if (full.rows != full.cols) throw ShapeError("from_product requires a square matrix");
    SymMatrix a(full.rows);
    const int n = full.rows;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            a.e_[static_cast<size_t>(i) * n + j] = 0.5 * (full(i, j) + full(j, i));
    return a;
}

double SymMatrix::trace() const {
    double t = 0.0;
    for (int i = 0; i < n_; ++i) t += (*this)(i, i);
    return t;
}

double SymMatrix::max_abs_entry() const {
    double m = 0.0;
    for (double v : e_) m = std::max(m, std::fabs(v));
    return m;
}

double SymMatrix::frobenius() const {
    double s = 0.0;
    for (double v : e_) s += v * v;
    return std::sqrt(s);
}

SymMatrix& SymMatrix::operator+=(const SymMatrix& o) {
    if (o.n_ != n_) throw ShapeError("dimension mismatch in matrix sum");
    for (size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
    return *this;
}

SymMatrix& SymMatrix::operator-=(const SymMatrix& o) {
    if (o.n_ != n_) throw ShapeError("dimension mismatch in matrix difference");
    for (size_t i = 0; i < e_.size(); ++i) e_[i] -= o.e_[i];
    return *this;
}

SymMatrix& SymMatrix::operator*=(double s) {
    for (double& v : e_) v *= s;
    return *this;
}

SymMatrix operator+(SymMatrix a, const SymMatrix& b) { return a += b; }
SymMatrix operator-(SymMatrix a, const SymMatrix& b) { return a -= b; }
SymMatrix operator*(double s, SymMatrix a) { return a *= s; }

namespace {

double offdiag_mass(const Matrix& a) {
    double s = 0.0;
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < a.cols; ++j)
            if (i != j) s += a(i, j) * a(i, j);
    return std::sqrt(s);
}

}  // namespace

EigenDecomp eigendecompose(const SymMatrix& in) {
    const int n = in.dim();
    Matrix a(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a(i, j) = in(i, j);
    Matrix q = Matrix::identity(n);

    const double fro = in.frobenius();
    const double target = 1e-14 * fro;

    int sweep = 0;
    while (offdiag_mass(a) > target) {
        if (++sweep > 100)
            throw NumericalError("jacobi eigensolver did not converge in 100 sweeps");
        for (int p = 0; p < n - 1; ++p) {
            for (int r = p + 1; r < n; ++r) {
                const double apr = a(p, r);
                if (std::fabs(apr) <= 1e-300) {
                    a(p, r) = a(r, p) = 0.0;
                    continue;
                }
                // classic two-sided rotation zeroing a(p,r)
                const double theta = (a(r, r) - a(p, p)) / (2.0 * apr);
                const double t = (theta >= 0 ? 1.0 : -1.0) /
                                 (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                const double tau = s / (1.0 + c);

                const double app = a(p, p), arr = a(r, r);
                a(p, p) = app - t * apr;
                a(r, r) = arr + t * apr;
                a(p, r) = a(r, p) = 0.0;
                for (int k = 0; k < n; ++k) {
                    if (k != p && k != r) {
                        const double akp = a(k, p), akr = a(k, r);
                        a(k, p) = a(p, k) = akp - s * (akr + tau * akp);
                        a(k, r) = a(r, k) = akr + s * (akp - tau * akr);
                    }
                    const double qkp = q(k, p), qkr = q(k, r);
                    q(k, p) = qkp - s * (qkr + tau * qkp);
                    q(k, r) = qkr + s * (qkp - tau * qkr);
                }
            }
        }
    }

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int i, int j) { return a(i, i) < a(j, j); });

    EigenDecomp ed;
    ed.eigenvalues.resize(n);
    ed.q = Matrix(n, n);
    for (int j = 0; j < n; ++j) {
        ed.eigenvalues[j] = a(order[j], order[j]);
        for (int i = 0; i < n; ++i) ed.q(i, j) = q(i, order[j]);
    }
    return ed;
}

SymMatrix apply_fn(const std::function<double(double)>& f, const EigenDecomp& ed) {
    const int n = static_cast<int>(ed.eigenvalues.size());
    Matrix scaled = ed.q;  // columns scaled by f(lambda_j)
    for (int j = 0; j < n; ++j) {
        const double fj = f(ed.eigenvalues[j]);
        for (int i = 0; i < n; ++i) scaled(i, j) *= fj;
    }
    return SymMatrix::from_product(scaled * ed.q.transposed());
}

SymMatrix apply_fn(const std::function<double(double)>& f, const SymMatrix& a) {
    return apply_fn(f, eigendecompose(a));
}

Interval spectrum_bounds(const EigenDecomp& ed, double scale_hint) {
    const double lo = ed.eigenvalues.front();
    const double hi = ed.eigenvalues.back();
    if (hi - lo <= 1e-12 * (1.0 + std::fabs(hi)))
        throw DegenerateSpectrumError("spectrum degenerates to a point near " +
                                      std::to_string(hi) + "; a window m < M is required");
    (void)scale_hint;
    return Interval(lo, hi);
}

Interval spectrum_bounds(const SymMatrix& a) {
    return spectrum_bounds(eigendecompose(a), a.max_abs_entry());
}

LoewnerVerdict loewner_leq(const SymMatrix& a, const SymMatrix& b, double tol_scale) {
    if (a.dim() != b.dim())
        throw ShapeError("loewner comparison dimension mismatch: " + std::to_string(a.dim()) +
                         " vs " + std::to_string(b.dim()));
    const SymMatrix diff = b - a;
    const EigenDecomp ed = eigendecompose(diff);
    LoewnerVerdict v;
    v.min_gap_eigenvalue = ed.eigenvalues.front();
    const double scale = 1.0 + std::max(a.max_abs_entry(), b.max_abs_entry());
    v.tolerance_used = std::max(tol_scale * scale, 1e-12);
    v.holds = v.min_gap_eigenvalue >= -v.tolerance_used;
    return v;
}

}  // namespace opineq
