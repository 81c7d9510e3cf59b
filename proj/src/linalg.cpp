#include "surfflow/linalg.hpp"

#include <Eigen/SVD>
#include <Eigen/SparseLU>

#include <cmath>
#include <memory>

namespace surfflow {

SparseMatrix SparseMatrix::from_triplets(int n, const std::vector<Triplet>& entries) {
    SparseMatrix out;
    std::vector<Eigen::Triplet<double>> trip;
    trip.reserve(entries.size());
    for (const auto& e : entries) {
        if (e.row < 0 || e.row >= n || e.col < 0 || e.col >= n)
            throw std::invalid_argument("SparseMatrix::from_triplets: index out of range");
        trip.emplace_back(e.row, e.col, e.value);
    }
    out.mat_.resize(n, n);
    out.mat_.setFromTriplets(trip.begin(), trip.end());
    out.mat_.makeCompressed();
    return out;
}

SparseMatrix& SparseMatrix::operator+=(const SparseMatrix& other) {
    if (other.size() != size())
        throw std::invalid_argument("SparseMatrix::operator+=: size mismatch");
    mat_ = (mat_ + other.mat_).pruned(0.0, 0.0);
    mat_.makeCompressed();
    return *this;
}

SparseMatrix& SparseMatrix::scale(double factor) {
    mat_ *= factor;
    return *this;
}

struct LuFactorization::Impl {
    Eigen::SparseMatrix<double> colmajor;
    Eigen::SparseLU<Eigen::SparseMatrix<double>> lu;
};

LuFactorization::LuFactorization(const SparseMatrix& a) : impl_(std::make_unique<Impl>()) {
    impl_->colmajor = a.eigen();
    impl_->lu.compute(impl_->colmajor);
    if (impl_->lu.info() != Eigen::Success)
        throw SingularMatrixError("sparse LU factorization failed: " +
                                  impl_->lu.lastErrorMessage());
}

LuFactorization::~LuFactorization() = default;
LuFactorization::LuFactorization(LuFactorization&&) noexcept = default;
LuFactorization& LuFactorization::operator=(LuFactorization&&) noexcept = default;

Vector LuFactorization::solve(const Vector& rhs) const {
    Vector x = impl_->lu.solve(rhs);
    if (impl_->lu.info() != Eigen::Success)
        throw SingularMatrixError("sparse LU solve failed");
    return x;
}

Vector LuFactorization::solve_transposed(const Vector& rhs) const {
    Vector x = impl_->lu.adjoint().solve(rhs);
    return x;
}

Vector solve_direct(const SparseMatrix& a, const Vector& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("solve_direct: dimension mismatch");
    LuFactorization lu(a);
    return lu.solve(b);
}

namespace {

Vector deterministic_start(int n) {
    Vector v(n);
    for (int i = 0; i < n; ++i)
        v[i] = 1.0 + 0.01 * std::sin(static_cast<double>(i) + 0.7);
    return v / v.norm();
}

// Power iteration for the largest eigenvalue of the SPD operator `apply`.
// Returns (lambda, converged).
template <typename Op>
std::pair<double, bool> power_largest(int n, Op&& apply, double rel_tol, int max_iter) {
    Vector v = deterministic_start(n);
    double lambda = 0.0;
    double lambda_prev = -1.0;
    int stagnant = 0;
    for (int it = 0; it < max_iter; ++it) {
        Vector w = apply(v);
        lambda = v.dot(w);
        double wn = w.norm();
        if (wn == 0.0) return {0.0, true};
        v = w / wn;
        if (lambda_prev > 0.0 && std::abs(lambda - lambda_prev) <= rel_tol * std::abs(lambda)) {
            if (++stagnant >= 3) return {lambda, true};
        } else {
            stagnant = 0;
        }
        lambda_prev = lambda;
    }
    return {lambda, false};
}

} // namespace

CondEstimate condition_number_2norm(const SparseMatrix& a, const CondOptions& opts) {
    const int n = a.size();
    if (n == 0) throw std::invalid_argument("condition_number_2norm: empty matrix");

    CondEstimate est;
    if (n <= opts.exact_dim_threshold) {
        Eigen::BDCSVD<Eigen::MatrixXd> svd(a.to_dense());
        const auto& sv = svd.singularValues();
        est.sigma_max = sv(0);
        est.sigma_min = sv(sv.size() - 1);
        est.exact = true;
        est.converged = true;
        if (est.sigma_min <= 0.0)
            throw SingularMatrixError("condition_number_2norm: singular matrix (zero singular value)");
        est.kappa = est.sigma_max / est.sigma_min;
        return est;
    }

    // sigma_max^2 = lambda_max(A^T A); sigma_min^-2 = lambda_max(A^-1 A^-T).
    const double inner_tol = opts.rel_tol / 4.0;
    auto [lmax, ok_max] = power_largest(
        n, [&](const Vector& v) { return a.transpose_times(a * v); }, inner_tol,
        opts.max_iterations);

    LuFactorization lu(a);
    auto [linv, ok_min] = power_largest(
        n, [&](const Vector& v) { return lu.solve(lu.solve_transposed(v)); }, inner_tol,
        opts.max_iterations);

    if (lmax <= 0.0 || linv <= 0.0)
        throw SingularMatrixError("condition_number_2norm: degenerate power iteration");

    est.sigma_max = std::sqrt(lmax);
    est.sigma_min = 1.0 / std::sqrt(linv);
    est.kappa = est.sigma_max / est.sigma_min;
    est.exact = false;
    est.converged = ok_max && ok_min;
    return est;
}

} // namespace surfflow
