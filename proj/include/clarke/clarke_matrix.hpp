#pragma once

#include <stdexcept>
#include <string>
#include <type_traits>

#include <Eigen/Core>

#include "clarke/detail/trig.hpp"
#include "clarke/types.hpp"

namespace clarke {

/// The 2 x n generalized Clarke transformation matrix for n symmetrically
/// placed actuators: row 0 holds (2/n)*cos(2*pi*k/n), row 1 holds
/// (2/n)*sin(2*pi*k/n) for column k = 0..n-1 (tendon k+1). Immutable after
/// construction. Left-multiplying a joint vector yields the Clarke
/// coordinates; the right inverse (n/2)*M^T maps them back onto the feasible
/// manifold.
template <typename Scalar>
class ClarkeMatrix {
  public:
    static_assert(std::is_floating_point_v<Scalar>);
    using EntryMatrix = Eigen::Matrix<Scalar, 2, Eigen::Dynamic>;

    /// Rejects tendon_count < 3: with fewer tendons the sine row degenerates
    /// and the matrix loses row rank.
    explicit ClarkeMatrix(Eigen::Index tendon_count) {
        if (tendon_count < 3)
            throw std::invalid_argument("Clarke matrix needs at least 3 tendons, got " +
                                        std::to_string(tendon_count));
        entries_.resize(2, tendon_count);
        for (Eigen::Index k = 0; k < tendon_count; ++k) {
            const auto [c, s] = detail::clarke_column(k, tendon_count);
            entries_(0, k) = static_cast<Scalar>(c);
            entries_(1, k) = static_cast<Scalar>(s);
        }
    }

    Eigen::Index tendon_count() const noexcept { return entries_.cols(); }
    const EntryMatrix& entries() const noexcept { return entries_; }

    /// Right inverse (n/2)*M^T; M * right_inverse() == I2.
    Eigen::Matrix<Scalar, Eigen::Dynamic, 2> right_inverse() const {
        return (Scalar(tendon_count()) / Scalar(2)) * entries_.transpose();
    }

    /// Orthogonal projector P = M^-1 * M onto the feasible manifold
    /// (symmetric, idempotent, rank 2).
    Eigen::MatrixX<Scalar> manifold_projector() const { return right_inverse() * entries_; }

  private:
    EntryMatrix entries_;
};

using ClarkeMatrixd = ClarkeMatrix<double>;

namespace detail {
template <typename Scalar, typename Derived>
void require_matching_length(const ClarkeMatrix<Scalar>& matrix, const Eigen::MatrixBase<Derived>& rho) {
    static_assert(std::is_same_v<typename Derived::Scalar, Scalar>,
                  "joint vector scalar type must match the Clarke matrix");
    if (rho.size() != matrix.tendon_count())
        throw std::invalid_argument("joint vector has " + std::to_string(rho.size()) +
                                    " entries, Clarke matrix expects " +
                                    std::to_string(matrix.tendon_count()));
}
}  // namespace detail

/// Clarke transform M * rho. For vectors off the feasible manifold this
/// yields the coordinates of their orthogonal projection, which is what makes
/// the transform usable as a disentanglement map.
template <typename Scalar, typename Derived>
ClarkeCoordinates<Scalar> clarke_transform(const ClarkeMatrix<Scalar>& matrix,
                                           const Eigen::MatrixBase<Derived>& rho) {
    detail::require_matching_length(matrix, rho);
    return matrix.entries() * rho;
}

/// Inverse Clarke transform (n/2)*M^T * coordinates. Total function; the
/// result lies on the feasible manifold by construction (components
/// rho_i = re*cos(psi_i) + im*sin(psi_i), summing to zero).
template <typename Scalar>
JointVector<Scalar> inverse_clarke_transform(const ClarkeMatrix<Scalar>& matrix,
                                             const ClarkeCoordinates<Scalar>& coordinates) {
    return matrix.right_inverse() * coordinates;
}

/// Orthogonal projection of an arbitrary joint vector onto the feasible
/// manifold, computed as M^-1 * (M * rho) rather than by forming the n x n
/// projector. Idempotent; the Euclidean-nearest feasible vector.
template <typename Scalar, typename Derived>
JointVector<Scalar> project_to_manifold(const ClarkeMatrix<Scalar>& matrix,
                                        const Eigen::MatrixBase<Derived>& rho) {
    detail::require_matching_length(matrix, rho);
    return inverse_clarke_transform(matrix, clarke_transform(matrix, rho));
}

template <typename Scalar>
struct FeasibilityReport {
    bool feasible{};
    Scalar manifold_residual{};  // ||rho - P*rho||_inf, meters
    Scalar sum_residual{};       // |sum_i rho_i|, meters
    explicit operator bool() const noexcept { return feasible; }
};

/// Manifold-membership check. Feasible iff the vector is within `tolerance`
/// of its own projection (infinity norm) and its components sum to zero
/// within `tolerance`. For n >= 4 the sum constraint alone is necessary but
/// not sufficient, so both residuals are reported.
template <typename Scalar, typename Derived>
FeasibilityReport<Scalar> check_feasibility(const ClarkeMatrix<Scalar>& matrix,
                                            const Eigen::MatrixBase<Derived>& rho,
                                            Scalar tolerance = Scalar(default_feasibility_tolerance)) {
    detail::require_matching_length(matrix, rho);
    if (!(tolerance > Scalar(0))) throw std::invalid_argument("feasibility tolerance must be positive");
    using std::abs;
    FeasibilityReport<Scalar> report;
    report.manifold_residual =
        (rho.derived() - project_to_manifold(matrix, rho)).template lpNorm<Eigen::Infinity>();
    report.sum_residual = abs(rho.sum());
    report.feasible = report.manifold_residual <= tolerance && report.sum_residual <= tolerance;
    return report;
}

}  // namespace clarke
