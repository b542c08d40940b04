#include "cbrl/spectral.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>

#include "cbrl/error.hpp"
#include "cbrl/rng.hpp"

namespace cbrl {

namespace {

using MatVecFn = std::function<void(std::span<const double>, std::span<double>)>;

void normalize(Vector& v) {
    double n = norm2(v);
    if (n > 0.0)
        for (double& x : v) x /= n;
}

// Power iteration with two convergence routes: the Rayleigh quotient for a
// real dominant eigenvalue, and a fit of the two-term recurrence
// A^2 x = a (A x) + b x for a dominant complex-conjugate (or +/-) pair.
std::optional<double> power_iteration_radius(int n, const MatVecFn& mv, int max_iter) {
    Vector x(n, 1.0 / std::sqrt(static_cast<double>(n)));
    Vector y(n), z(n);

    double prev_real = std::nan("");
    double prev_pair = std::nan("");
    int stable_real = 0;
    int stable_pair = 0;
    bool restarted = false;

    for (int iter = 0; iter < max_iter; ++iter) {
        mv(x, y);
        double ny = norm2(y);
        if (!std::isfinite(ny)) return std::nullopt;
        if (ny < 1e-150) {
            if (restarted) return std::nullopt;
            // Start vector fell into the kernel; retry from a fixed
            // pseudo-random direction.
            RngStream r(0x5eedULL);
            for (double& v : x) v = r.uniform(-1.0, 1.0);
            normalize(x);
            restarted = true;
            continue;
        }

        // Real dominant eigenvalue: x is unit, so the Rayleigh quotient is x.y
        double rq = dot(x, y);
        double resid2 = 0.0;
        for (int i = 0; i < n; ++i) {
            double d = y[i] - rq * x[i];
            resid2 += d * d;
        }
        double scale = std::max(1.0, std::abs(rq));
        if (std::sqrt(resid2) <= 1e-11 * scale &&
            std::abs(rq - prev_real) <= 1e-10 * scale) {
            if (++stable_real >= 3) return std::abs(rq);
        } else {
            stable_real = 0;
        }
        prev_real = rq;

        if (iter % 8 == 7) {
            mv(y, z);
            // Least squares of z over span{y, x}: z ~ a y + b x.
            double yy = ny * ny;
            double yx = dot(y, x);
            double zy = dot(z, y);
            double zx = dot(z, x);
            double det = yy - yx * yx; // x is unit
            if (det > 1e-14 * yy) {
                double a = (zy - yx * zx) / det;
                double b = (yy * zx - yx * zy) / det;
                double rt2 = 0.0;
                for (int i = 0; i < n; ++i) {
                    double d = z[i] - a * y[i] - b * x[i];
                    rt2 += d * d;
                }
                double nz = norm2(z);
                if (nz > 0.0 && std::sqrt(rt2) <= 1e-10 * nz) {
                    double disc = a * a + 4.0 * b;
                    double rho;
                    if (disc >= 0.0) {
                        double sq = std::sqrt(disc);
                        rho = std::max(std::abs((a + sq) / 2.0), std::abs((a - sq) / 2.0));
                    } else {
                        rho = std::sqrt(-b);
                    }
                    if (std::abs(rho - prev_pair) <= 1e-10 * std::max(1.0, rho)) {
                        if (++stable_pair >= 3) return rho;
                    } else {
                        stable_pair = 0;
                    }
                    prev_pair = rho;
                }
            }
        }

        for (int i = 0; i < n; ++i) x[i] = y[i] / ny;
    }
    return std::nullopt;
}

double dense_radius(const DenseMatrix& m) {
    int n = m.rows();
    Eigen::MatrixXd a(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) a(r, c) = m(r, c);
    Eigen::EigenSolver<Eigen::MatrixXd> solver(a, /*computeEigenvectors=*/false);
    if (solver.info() != Eigen::Success)
        throw NumericError("spectral radius: dense eigensolver failed");
    return solver.eigenvalues().cwiseAbs().maxCoeff();
}

bool is_zero(std::span<const double> v) {
    for (double x : v)
        if (x != 0.0) return false;
    return true;
}

} // namespace

double estimate_spectral_radius(const DenseMatrix& m) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("estimate_spectral_radius: matrix not square");
    if (m.rows() == 0 || is_zero(m.data())) return 0.0;
    auto mv = [&m](std::span<const double> x, std::span<double> out) { matvec(m, x, out); };
    if (auto rho = power_iteration_radius(m.rows(), mv, 10000)) return *rho;
    return dense_radius(m);
}

double estimate_spectral_radius(const SparseMatrix& m) {
    if (m.rows != m.cols)
        throw std::invalid_argument("estimate_spectral_radius: matrix not square");
    if (m.rows == 0 || is_zero(m.val)) return 0.0;
    auto mv = [&m](std::span<const double> x, std::span<double> out) { m.matvec(x, out); };
    if (auto rho = power_iteration_radius(m.rows, mv, 10000)) return *rho;
    if (m.rows <= 4096) return dense_radius(m.to_dense());
    // Too large to densify; give the iteration a longer leash.
    if (auto rho = power_iteration_radius(m.rows, mv, 200000)) return *rho;
    throw NumericError("estimate_spectral_radius: power iteration did not converge");
}

} // namespace cbrl
