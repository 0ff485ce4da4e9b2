#pragma once

#include <numbers>
#include <stdexcept>
#include <string>

#include <Eigen/Core>

#include "clarke/detail/trig.hpp"

namespace clarke {

/// Geometry of one displacement-actuated constant-curvature segment:
/// tendon_count actuators placed every 2*pi/n radians on a circle of radius
/// pitch_radius around the backbone, segment arc length `length`. Tendon i
/// (1-based) sits at angle 2*pi*(i-1)/n, so tendon 1 is at angle 0.
template <typename Scalar>
struct SegmentGeometry {
    Eigen::Index tendon_count{};  // n >= 3
    Scalar pitch_radius{};        // d > 0, meters
    Scalar length{};              // l > 0, meters

    /// Placement angle psi_i of tendon i, 1-based.
    Scalar tendon_angle(Eigen::Index tendon) const {
        if (tendon < 1 || tendon > tendon_count)
            throw std::out_of_range("tendon index " + std::to_string(tendon) + " outside 1.." +
                                    std::to_string(tendon_count));
        return Scalar(2) * std::numbers::pi_v<Scalar> * Scalar(tendon - 1) / Scalar(tendon_count);
    }

    /// Throws std::invalid_argument naming the violated rule. `label`
    /// prefixes the message, e.g. "segment 2".
    void validate(const std::string& label = {}) const {
        const std::string prefix = label.empty() ? std::string{} : label + ": ";
        if (tendon_count < 3)
            throw std::invalid_argument(prefix + "tendon count must be at least 3, got " +
                                        std::to_string(tendon_count));
        if (!(pitch_radius > Scalar(0)))
            throw std::invalid_argument(prefix + "pitch radius must be positive");
        if (!(length > Scalar(0)))
            throw std::invalid_argument(prefix + "segment length must be positive");
    }
};

using SegmentGeometryd = SegmentGeometry<double>;

}  // namespace clarke
