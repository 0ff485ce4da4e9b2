#pragma once

#include <Eigen/Core>

namespace clarke {

/// Local coordinates of the 2-DoF feasible manifold: component 0 is the
/// cosine-mode coefficient, component 1 the sine-mode coefficient. Both in
/// meters; the plane is unconstrained (all of R^2).
template <typename Scalar>
using ClarkeCoordinates = Eigen::Vector2<Scalar>;

/// Length-n vector of per-tendon displacements in meters, index order
/// matching the tendon placement angles. Arbitrary vectors are representable;
/// membership in the feasible manifold is a checked predicate.
template <typename Scalar>
using JointVector = Eigen::VectorX<Scalar>;

using ClarkeCoordinatesd = ClarkeCoordinates<double>;
using JointVectord = JointVector<double>;

/// Default tolerance for manifold-membership checks, in meters. Nanometer
/// scale sits far below tendon actuation resolution while leaving ample
/// headroom above double rounding error. Overridable per call.
inline constexpr double default_feasibility_tolerance = 1e-9;

}  // namespace clarke
