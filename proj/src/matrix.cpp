#include "cbrl/matrix.hpp"

#include <cmath>
#include <stdexcept>

namespace cbrl {

DenseMatrix::DenseMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0)
        throw std::invalid_argument("DenseMatrix: negative dimension");
    data_.assign(static_cast<std::size_t>(rows) * cols, 0.0);
}

DenseMatrix DenseMatrix::identity(int n) {
    DenseMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

bool DenseMatrix::all_finite() const {
    for (double v : data_)
        if (!std::isfinite(v)) return false;
    return true;
}

void matvec(const DenseMatrix& m, std::span<const double> x, std::span<double> out) {
    if (static_cast<int>(x.size()) != m.cols() || static_cast<int>(out.size()) != m.rows())
        throw std::invalid_argument("matvec: dimension mismatch");
    for (int r = 0; r < m.rows(); ++r) {
        const double* a = m.row(r);
        double s = 0.0;
        for (int c = 0; c < m.cols(); ++c) s += a[c] * x[c];
        out[r] = s;
    }
}

Vector matvec(const DenseMatrix& m, const Vector& x) {
    Vector out(m.rows());
    matvec(m, x, out);
    return out;
}

void matvec_transpose(const DenseMatrix& m, std::span<const double> x, std::span<double> out) {
    if (static_cast<int>(x.size()) != m.rows() || static_cast<int>(out.size()) != m.cols())
        throw std::invalid_argument("matvec_transpose: dimension mismatch");
    for (int c = 0; c < m.cols(); ++c) out[c] = 0.0;
    for (int r = 0; r < m.rows(); ++r) {
        const double* a = m.row(r);
        double xr = x[r];
        for (int c = 0; c < m.cols(); ++c) out[c] += a[c] * xr;
    }
}

void SparseMatrix::matvec(std::span<const double> x, std::span<double> out) const {
    if (static_cast<int>(x.size()) != cols || static_cast<int>(out.size()) != rows)
        throw std::invalid_argument("SparseMatrix::matvec: dimension mismatch");
    for (int r = 0; r < rows; ++r) {
        double s = 0.0;
        for (int k = row_ptr[r]; k < row_ptr[r + 1]; ++k) s += val[k] * x[col[k]];
        out[r] = s;
    }
}

DenseMatrix SparseMatrix::to_dense() const {
    DenseMatrix m(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int k = row_ptr[r]; k < row_ptr[r + 1]; ++k)
            m(r, col[k]) = val[k];
    return m;
}

double dot(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double norm2(std::span<const double> v) {
    return std::sqrt(dot(v, v));
}

} // namespace cbrl
