#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include <Eigen/Core>

#include "clarke/detail/trig.hpp"
#include "clarke/geometry.hpp"
#include "clarke/types.hpp"

namespace clarke {

/// Constant-curvature arc: curvature kappa >= 0 (1/m), bending-plane angle
/// theta in [0, 2*pi) (radians), arc length (m). A straight arc (kappa == 0)
/// has no bending plane; its canonical plane angle is 0.
template <typename Scalar>
struct ArcParameters {
    Scalar curvature{};
    Scalar plane_angle{};
    Scalar length{};
};

using ArcParametersd = ArcParameters<double>;

/// Canonical arc from unrestricted inputs: a negative curvature is folded
/// into the plane angle by adding pi, the angle is wrapped to [0, 2*pi), and
/// a straight arc gets plane angle 0. Rejects non-positive or non-finite
/// length and non-finite angles.
template <typename Scalar>
ArcParameters<Scalar> canonical_arc(Scalar curvature, Scalar plane_angle, Scalar length) {
    using std::isfinite;
    if (!isfinite(curvature) || !isfinite(plane_angle))
        throw std::invalid_argument("arc parameters must be finite");
    if (!isfinite(length) || !(length > Scalar(0)))
        throw std::invalid_argument("arc length must be positive");
    if (curvature < Scalar(0)) {
        curvature = -curvature;
        plane_angle += std::numbers::pi_v<Scalar>;
    }
    if (curvature == Scalar(0)) curvature = Scalar(0);  // normalize -0
    plane_angle = curvature == Scalar(0) ? Scalar(0) : detail::wrap_two_pi(plane_angle);
    return {curvature, plane_angle, length};
}

/// Physical-model validity guard: tendons must not cross the backbone axis,
/// i.e. curvature * pitch_radius < 1. The mappings below stay defined beyond
/// this bound; callers decide what to do with the flag.
template <typename Scalar>
bool within_curvature_limit(const ArcParameters<Scalar>& arc, const SegmentGeometry<Scalar>& geometry) {
    return arc.curvature * geometry.pitch_radius < Scalar(1);
}

namespace detail {
template <typename Scalar>
void require_matching_arc_length(const ArcParameters<Scalar>& arc, const SegmentGeometry<Scalar>& geometry) {
    using std::abs;
    // inextensible segment: the arc length is the segment length
    if (abs(arc.length - geometry.length) > Scalar(1e-12) * geometry.length)
        throw std::invalid_argument("arc length " + std::to_string(static_cast<double>(arc.length)) +
                                    " does not match segment length " +
                                    std::to_string(static_cast<double>(geometry.length)));
}
}  // namespace detail

/// Robot-dependent forward mapping, arc parameters to Clarke coordinates:
/// (re, im) = l*d*kappa*(cos(theta), sin(theta)). Exact closed form.
template <typename Scalar>
ClarkeCoordinates<Scalar> arc_to_clarke(const ArcParameters<Scalar>& arc,
                                        const SegmentGeometry<Scalar>& geometry) {
    detail::require_matching_arc_length(arc, geometry);
    using std::cos, std::sin;
    const Scalar magnitude = arc.length * geometry.pitch_radius * arc.curvature;
    return {magnitude * cos(arc.plane_angle), magnitude * sin(arc.plane_angle)};
}

template <typename Scalar>
struct ArcRecovery {
    ArcParameters<Scalar> arc;
    /// false when curvature * pitch_radius >= 1: the arc is computed anyway
    /// but lies outside the physical model's validity region.
    bool within_model{};
};

/// Robot-dependent inverse mapping, Clarke coordinates to arc parameters:
/// kappa = |(re, im)| / (l*d), theta = atan2(im, re) wrapped to [0, 2*pi).
/// Closed form, singularity-free: zero coordinates give the canonical
/// straight arc (kappa = 0, theta = 0) rather than an indeterminate atan2.
template <typename Scalar>
ArcRecovery<Scalar> arc_from_clarke(const ClarkeCoordinates<Scalar>& coordinates,
                                    const SegmentGeometry<Scalar>& geometry) {
    using std::atan2;
    ArcParameters<Scalar> arc;
    arc.length = geometry.length;
    const Scalar radius = coordinates.norm();
    arc.curvature = radius / (geometry.length * geometry.pitch_radius);
    arc.plane_angle = radius == Scalar(0)
                          ? Scalar(0)
                          : detail::wrap_two_pi(atan2(coordinates[1], coordinates[0]));
    return {arc, within_curvature_limit(arc, geometry)};
}

/// Displacement of tendon `tendon` (1-based) for the given arc:
/// l*d*kappa*cos(theta - psi_i). Positive displacement means the tendon
/// shortens (is pulled at the base); the tendon lying in the bending plane
/// (theta == psi_i) receives the full virtual displacement l*d*kappa.
template <typename Scalar>
Scalar tendon_displacement(const ArcParameters<Scalar>& arc, const SegmentGeometry<Scalar>& geometry,
                           Eigen::Index tendon) {
    detail::require_matching_arc_length(arc, geometry);
    using std::cos;
    const Scalar psi = geometry.tendon_angle(tendon);  // throws on out-of-range index
    return arc.length * geometry.pitch_radius * arc.curvature * cos(arc.plane_angle - psi);
}

}  // namespace clarke
