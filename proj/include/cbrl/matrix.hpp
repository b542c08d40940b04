#pragma once

#include <span>
#include <vector>

namespace cbrl {

using Vector = std::vector<double>;

/// Row-major dense matrix of doubles. Dimensions are fixed at construction.
class DenseMatrix {
public:
    DenseMatrix() = default;
    DenseMatrix(int rows, int cols);

    static DenseMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool empty() const { return data_.empty(); }

    double& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
    double operator()(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

    const double* row(int r) const { return data_.data() + static_cast<std::size_t>(r) * cols_; }
    double* row(int r) { return data_.data() + static_cast<std::size_t>(r) * cols_; }

    std::span<double> data() { return data_; }
    std::span<const double> data() const { return data_; }

    bool all_finite() const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<double> data_;
};

/// out = m * x
void matvec(const DenseMatrix& m, std::span<const double> x, std::span<double> out);
Vector matvec(const DenseMatrix& m, const Vector& x);

/// out = m^T * x
void matvec_transpose(const DenseMatrix& m, std::span<const double> x, std::span<double> out);

/// Compressed sparse row matrix; just enough for reservoir recurrence.
struct SparseMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<int> row_ptr; // size rows + 1
    std::vector<int> col;
    std::vector<double> val;

    std::size_t nonzeros() const { return val.size(); }
    void matvec(std::span<const double> x, std::span<double> out) const;
    DenseMatrix to_dense() const;
};

double dot(std::span<const double> a, std::span<const double> b);
double norm2(std::span<const double> v);

} // namespace cbrl
