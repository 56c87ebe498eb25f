#pragma once

#include <cmath>
#include <complex>
#include <numbers>

namespace curvspace {

using Complex = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;

/// Real inner product of plane vectors represented as complex numbers.
[[nodiscard]] inline double inner(Complex a, Complex b) {
    return a.real() * b.real() + a.imag() * b.imag();
}

[[nodiscard]] inline double cross(Complex a, Complex b) {
    return a.real() * b.imag() - a.imag() * b.real();
}

/// Wrap an angle to (-pi, pi].
[[nodiscard]] inline double wrap_angle(double a) {
    a = std::fmod(a, 2.0 * kPi);
    if (a <= -kPi) a += 2.0 * kPi;
    if (a > kPi) a -= 2.0 * kPi;
    return a;
}

[[nodiscard]] inline Complex unit_dir(double angle) {
    return Complex(std::cos(angle), std::sin(angle));
}

/// An element (p, w) of C x S^1, doubling as a proper Euclidean motion
/// via (p, w) . (q, z) = (p + w q, w z).
struct Frame {
    Complex p{0.0, 0.0};  // position
    Complex w{1.0, 0.0};  // unit heading

    Frame() = default;
    Frame(Complex position, Complex heading) : p(position), w(heading) { renormalize(); }
    Frame(Complex position, double heading_angle) : p(position), w(unit_dir(heading_angle)) {}

    // Constructors renormalize so |w| drift stays below 1e-12 per operation.
    void renormalize() {
        const double n = std::abs(w);
        if (n > 0.0) w /= n;
    }

    [[nodiscard]] double heading_angle() const { return std::arg(w); }
};

[[nodiscard]] inline Frame frame_identity() { return Frame{}; }

[[nodiscard]] inline Frame frame_mul(const Frame& f, const Frame& g) {
    return Frame(f.p + f.w * g.p, f.w * g.w);
}

[[nodiscard]] inline Frame frame_inv(const Frame& f) {
    const Complex wbar = std::conj(f.w);
    return Frame(-wbar * f.p, wbar);
}

[[nodiscard]] inline Complex frame_apply(const Frame& f, Complex a) {
    return f.p + f.w * a;
}

[[nodiscard]] inline double frame_distance(const Frame& a, const Frame& b) {
    return std::max(std::abs(a.p - b.p), std::abs(a.w - b.w));
}

[[nodiscard]] inline bool frames_close(const Frame& a, const Frame& b, double tol) {
    return frame_distance(a, b) <= tol;
}

struct Circle {
    Complex center{0.0, 0.0};
    double radius{1.0};  // > 0
};

/// Oriented line: boundary through `anchor` with unit `direction`; `side`
/// selects which half-plane counts as positive (+1 = left of direction).
struct HalfPlane {
    Complex anchor{0.0, 0.0};
    Complex direction{1.0, 0.0};
    int side{+1};
};

/// Signed perpendicular distance from q to the boundary line, positive on
/// the selected side.
[[nodiscard]] inline double side_of_line(Complex q, const HalfPlane& hp) {
    const Complex n = Complex(0.0, 1.0) * hp.direction;  // left normal
    return static_cast<double>(hp.side) * inner(q - hp.anchor, n);
}

}  // namespace curvspace
