#ifndef SURFFLOW_LINALG_HPP
#define SURFFLOW_LINALG_HPP

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace surfflow {

using Vector = Eigen::VectorXd;

/// Thrown when a factorization hits a structurally or numerically singular
/// matrix. The message carries the pivot diagnostics of the backend.
class SingularMatrixError : public std::runtime_error {
public:
    explicit SingularMatrixError(const std::string& what)
        : std::runtime_error(what) {}
};

struct Triplet {
    int row;
    int col;
    double value;
};

/// Square sparse matrix in compressed-row storage. Column indices within a
/// row are sorted and unique; duplicate triplets are summed on construction.
class SparseMatrix {
public:
    SparseMatrix() = default;

    static SparseMatrix from_triplets(int n, const std::vector<Triplet>& entries);

    int size() const { return static_cast<int>(mat_.rows()); }
    long nonzeros() const { return static_cast<long>(mat_.nonZeros()); }

    std::span<const int> row_offsets() const {
        return {mat_.outerIndexPtr(), static_cast<size_t>(mat_.rows() + 1)};
    }
    std::span<const int> col_indices() const {
        return {mat_.innerIndexPtr(), static_cast<size_t>(mat_.nonZeros())};
    }
    std::span<const double> values() const {
        return {mat_.valuePtr(), static_cast<size_t>(mat_.nonZeros())};
    }

    Vector operator*(const Vector& v) const { return mat_ * v; }
    Vector transpose_times(const Vector& v) const { return mat_.transpose() * v; }

    SparseMatrix& operator+=(const SparseMatrix& other);
    SparseMatrix& scale(double factor);

    double frobenius_norm() const { return mat_.norm(); }
    Eigen::MatrixXd to_dense() const { return Eigen::MatrixXd(mat_); }

    const Eigen::SparseMatrix<double, Eigen::RowMajor>& eigen() const { return mat_; }

private:
    Eigen::SparseMatrix<double, Eigen::RowMajor> mat_;
};

/// Sparse LU factorization with partial pivoting. Immutable once built;
/// concurrent solves against one factorization are safe.
class LuFactorization {
public:
    explicit LuFactorization(const SparseMatrix& a);
    ~LuFactorization();
    LuFactorization(LuFactorization&&) noexcept;
    LuFactorization& operator=(LuFactorization&&) noexcept;
    LuFactorization(const LuFactorization&) = delete;
    LuFactorization& operator=(const LuFactorization&) = delete;

    Vector solve(const Vector& rhs) const;
    Vector solve_transposed(const Vector& rhs) const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

/// Direct solve A x = b. Throws SingularMatrixError on failure.
Vector solve_direct(const SparseMatrix& a, const Vector& b);

struct CondOptions {
    /// Matrices up to this dimension get the exact dense singular-value path.
    int exact_dim_threshold = 2000;
    /// Relative accuracy target of the power-iteration estimate.
    double rel_tol = 0.05;
    int max_iterations = 500;
};

struct CondEstimate {
    double kappa = 0.0;
    double sigma_max = 0.0;
    double sigma_min = 0.0;
    bool exact = false;
    /// False when the power iteration hit the iteration cap; kappa then
    /// carries the partial estimate.
    bool converged = true;

    operator double() const { return kappa; }
};

/// 2-norm condition number. Exact via dense SVD for small dimensions,
/// otherwise power iteration on A^T A and on the inverse via LU solves.
CondEstimate condition_number_2norm(const SparseMatrix& a, const CondOptions& opts = {});

} // namespace surfflow

#endif
