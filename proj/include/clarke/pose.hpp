#pragma once

#include <cmath>
#include <span>
#include <stdexcept>

#include <Eigen/Core>
#include <Eigen/Geometry>

#include "clarke/arc.hpp"
#include "clarke/detail/trig.hpp"

namespace clarke {

/// Rigid pose of a segment tip in its base frame: position in meters and a
/// unit quaternion (scalar-first convention in all serialized forms), kept on
/// the w >= 0 hemisphere so that q and -q have one representative.
template <typename Scalar>
struct SegmentPose {
    Eigen::Vector3<Scalar> position{Eigen::Vector3<Scalar>::Zero()};
    Eigen::Quaternion<Scalar> orientation{Eigen::Quaternion<Scalar>::Identity()};

    static SegmentPose Identity() { return {}; }
};

using SegmentPosed = SegmentPose<double>;

/// Renormalize and map onto the canonical hemisphere. For w == 0 the sign is
/// fixed by making the first nonzero vector component positive.
template <typename Scalar>
SegmentPose<Scalar> canonicalized(SegmentPose<Scalar> pose) {
    pose.orientation.normalize();
    Eigen::Quaternion<Scalar>& q = pose.orientation;
    bool flip = q.w() < Scalar(0);
    if (q.w() == Scalar(0)) {
        if (q.x() != Scalar(0))
            flip = q.x() < Scalar(0);
        else if (q.y() != Scalar(0))
            flip = q.y() < Scalar(0);
        else
            flip = q.z() < Scalar(0);
    }
    if (flip) q.coeffs() = -q.coeffs();
    return pose;
}

/// Robot-independent mapping, arc parameters to tip pose. The arc of
/// curvature kappa bends in the plane at angle theta about the base z-axis:
///   p = l * (cos(theta)*cosc(kappa*l), sin(theta)*cosc(kappa*l), sinc(kappa*l))
/// and the orientation is the rotation by kappa*l about the bending-plane
/// normal (-sin(theta), cos(theta), 0). Series branches make the straight
/// limit exact: kappa = 0 gives p = (0, 0, l) and the identity rotation.
template <typename Scalar>
SegmentPose<Scalar> pose_from_arc(const ArcParameters<Scalar>& arc) {
    using std::cos, std::sin;
    const Scalar bend = arc.curvature * arc.length;
    const Scalar c = cos(arc.plane_angle);
    const Scalar s = sin(arc.plane_angle);

    SegmentPose<Scalar> pose;
    pose.position = arc.length * Eigen::Vector3<Scalar>(c * detail::cosc(bend), s * detail::cosc(bend),
                                                        detail::sinc(bend));
    const Eigen::Vector3<Scalar> plane_normal(-s, c, Scalar(0));
    pose.orientation = Eigen::Quaternion<Scalar>(Eigen::AngleAxis<Scalar>(bend, plane_normal));
    return canonicalized(pose);
}

/// Robot-independent inverse mapping from a tip position. Single-valued on
/// the principal branch kappa*l in (0, pi]; positions with z < 0 (which would
/// need a bend beyond pi) and the origin are rejected. The plane angle of a
/// straight segment is canonically 0.
template <typename Scalar>
ArcParameters<Scalar> arc_from_tip_position(const Eigen::Vector3<Scalar>& position) {
    using std::atan2, std::hypot;
    if (!position.allFinite()) throw std::invalid_argument("tip position must be finite");
    const Scalar in_plane = hypot(position.x(), position.y());
    const Scalar z = position.z();
    if (z < Scalar(0))
        throw std::domain_error(
            "tip position with negative z is not reachable by a single constant-curvature segment");
    if (in_plane == Scalar(0)) {
        if (z == Scalar(0))
            throw std::domain_error("zero tip position is not reachable by a positive-length segment");
        return {Scalar(0), Scalar(0), z};
    }
    ArcParameters<Scalar> arc;
    arc.plane_angle = detail::wrap_two_pi(atan2(position.y(), position.x()));
    const Scalar chord_sq = in_plane * in_plane + z * z;
    arc.curvature = Scalar(2) * in_plane / chord_sq;
    const Scalar bend = Scalar(2) * atan2(in_plane, z);  // kappa*l in (0, pi]
    arc.length = bend / arc.curvature;
    return arc;
}

/// Rigid composition: second expressed in first's tip frame.
template <typename Scalar>
SegmentPose<Scalar> compose(const SegmentPose<Scalar>& first, const SegmentPose<Scalar>& second) {
    SegmentPose<Scalar> out;
    out.position = first.position + first.orientation * second.position;
    out.orientation = first.orientation * second.orientation;
    return canonicalized(out);
}

/// Left-to-right composition of a chain of poses. A single element returns
/// itself (canonicalized); an empty chain is rejected.
template <typename Scalar>
SegmentPose<Scalar> compose(std::span<const SegmentPose<Scalar>> chain) {
    if (chain.empty()) throw std::invalid_argument("cannot compose an empty pose chain");
    SegmentPose<Scalar> total = canonicalized(chain.front());
    for (std::size_t i = 1; i < chain.size(); ++i) total = compose(total, chain[i]);
    return total;
}

/// Distance between unit quaternions with q and -q identified:
/// min(|a - b|, |a + b|) over the coefficient 4-vectors.
template <typename Scalar>
Scalar quaternion_distance(const Eigen::Quaternion<Scalar>& a, const Eigen::Quaternion<Scalar>& b) {
    using std::min;
    return min((a.coeffs() - b.coeffs()).norm(), (a.coeffs() + b.coeffs()).norm());
}

/// Diagnostic for the overdetermined full-pose inverse: a constant-curvature
/// segment's orientation is already implied by its tip position, so this
/// returns the quaternion distance between the given orientation and the one
/// the position implies. Zero (up to rounding) iff the pose is reachable.
template <typename Scalar>
Scalar pose_consistency_error(const SegmentPose<Scalar>& pose) {
    const ArcParameters<Scalar> arc = arc_from_tip_position(pose.position);
    return quaternion_distance(pose_from_arc(arc).orientation, canonicalized(pose).orientation);
}

}  // namespace clarke
