#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <utility>

namespace clarke::detail {

/// cos and sin of 2*pi*k/n in long double, evaluated from the reduced
/// fraction instead of an accumulated angle. The fraction is folded into the
/// first octant with exact integer arithmetic, so axis-aligned columns
/// (multiples of pi/2) come out as exact 0 / +-1 and the residual trig
/// argument never exceeds pi/4.
inline std::pair<long double, long double> cos_sin_two_pi_frac_l(std::int64_t k, std::int64_t n) {
    const std::int64_t kk = ((k % n) + n) % n;
    const std::int64_t quarter_turns = (4 * kk) / n;  // quadrant index 0..3
    const std::int64_t rem = (4 * kk) % n;            // angle fraction rem/(4n) within the quadrant
    const bool folded = 2 * rem > n;                  // reflect [1/8, 1/4) onto [0, 1/8]
    const std::int64_t num = folded ? n - rem : rem;

    const long double x = 2.0L * std::numbers::pi_v<long double> * static_cast<long double>(num) /
                          (4.0L * static_cast<long double>(n));
    long double c = std::cos(x);
    long double s = std::sin(x);
    if (folded) std::swap(c, s);

    switch (quarter_turns) {
        case 0: return {c, s};
        case 1: return {-s, c};
        case 2: return {-c, -s};
        default: return {s, -c};
    }
}

inline double normalize_zero(double x) { return x == 0.0 ? 0.0 : x; }

/// cos and sin of 2*pi*k/n rounded once to double.
inline std::pair<double, double> cos_sin_two_pi_frac(std::int64_t k, std::int64_t n) {
    const auto [c, s] = cos_sin_two_pi_frac_l(k, n);
    return {normalize_zero(static_cast<double>(c)), normalize_zero(static_cast<double>(s))};
}

/// Clarke matrix column k: (2/n)*(cos, sin)(2*pi*k/n), the product taken in
/// long double so each entry lands on the correctly rounded double.
inline std::pair<double, double> clarke_column(std::int64_t k, std::int64_t n) {
    const auto [c, s] = cos_sin_two_pi_frac_l(k, n);
    const long double scale = 2.0L / static_cast<long double>(n);
    return {normalize_zero(static_cast<double>(scale * c)),
            normalize_zero(static_cast<double>(scale * s))};
}

inline constexpr double small_angle_threshold = 1e-4;

/// sin(x)/x, series branch below the threshold where the direct quotient
/// starts to lose bits. Truncation error ~x^6/5040 < 1e-27 at the switch.
template <typename Scalar>
Scalar sinc(Scalar x) {
    using std::abs, std::sin;
    if (abs(x) > Scalar(small_angle_threshold)) return sin(x) / x;
    const Scalar x2 = x * x;
    return Scalar(1) - x2 / Scalar(6) + x2 * x2 / Scalar(120);
}

/// (1 - cos(x))/x, series branch below the threshold to avoid the
/// cancellation in 1 - cos(x).
template <typename Scalar>
Scalar cosc(Scalar x) {
    using std::abs, std::cos;
    if (abs(x) > Scalar(small_angle_threshold)) return (Scalar(1) - cos(x)) / x;
    const Scalar x2 = x * x;
    return x / Scalar(2) - x * x2 / Scalar(24) + x * x2 * x2 / Scalar(720);
}

/// Wrap an angle to the canonical interval [0, 2*pi).
template <typename Scalar>
Scalar wrap_two_pi(Scalar angle) {
    constexpr Scalar two_pi = Scalar(2) * std::numbers::pi_v<Scalar>;
    using std::fmod;
    Scalar a = fmod(angle, two_pi);
    if (a < Scalar(0)) a += two_pi;
    if (a >= two_pi) a = Scalar(0);  // fmod result that rounded up to 2*pi
    return a;
}

}  // namespace clarke::detail
