#pragma once

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "curvspace/errors.hpp"
#include "curvspace/geom.hpp"

namespace curvspace {

/// One constant-curvature piece of an arc-length-parametrized curve.
struct ArcSegment {
    double kappa{0.0};  // signed curvature, 1/length
    double len{0.0};    // arc length, > 0
};

/// Canonical admissible-curve representation: a start frame plus a nonempty
/// run of constant-curvature arc-length segments.
struct PiecewiseCurve {
    Frame start{};
    std::vector<ArcSegment> segs;

    [[nodiscard]] double length() const {
        double L = 0.0;
        for (const auto& s : segs) L += s.len;
        return L;
    }

    /// Total turning, exact as a sum of products.
    [[nodiscard]] double total_turning() const {
        double t = 0.0;
        for (const auto& s : segs) t += s.kappa * s.len;
        return t;
    }
};

inline void validate(const PiecewiseCurve& c) {
    if (c.segs.empty()) throw InvalidCurve("curve has no segments");
    for (const auto& s : c.segs) {
        if (!(s.len > 0.0) || !std::isfinite(s.len)) throw InvalidCurve("segment length must be positive");
        if (!std::isfinite(s.kappa)) throw InvalidCurve("segment curvature must be finite");
    }
}

/// Motion of a single segment started at the identity frame: closed-form
/// solution of the frame initial-value problem.
[[nodiscard]] inline Frame segment_motion(double kappa, double len) {
    if (kappa == 0.0) return Frame(Complex(len, 0.0), Complex(1.0, 0.0));
    const Complex e = unit_dir(kappa * len);
    return Frame(Complex(0.0, 1.0) / kappa * (1.0 - e), e);
}

/// Final frame of the curve; factorizes as start * motion(segments).
[[nodiscard]] inline Frame end_frame(const PiecewiseCurve& c) {
    Frame m = c.start;
    for (const auto& s : c.segs) m = frame_mul(m, segment_motion(s.kappa, s.len));
    return m;
}

/// Frame at arc length s along the curve (clamped to [0, L]).
[[nodiscard]] inline Frame frame_at(const PiecewiseCurve& c, double s) {
    Frame m = c.start;
    double done = 0.0;
    for (const auto& seg : c.segs) {
        if (s <= done + seg.len) {
            return frame_mul(m, segment_motion(seg.kappa, std::max(0.0, s - done)));
        }
        m = frame_mul(m, segment_motion(seg.kappa, seg.len));
        done += seg.len;
    }
    return m;
}

/// Heading argument theta(s) with theta(0) = 0, exact for piecewise-linear theta.
[[nodiscard]] inline double theta_at(const PiecewiseCurve& c, double s) {
    double theta = 0.0;
    double done = 0.0;
    for (const auto& seg : c.segs) {
        if (s <= done + seg.len) return theta + seg.kappa * (s - done);
        theta += seg.kappa * seg.len;
        done += seg.len;
    }
    return theta;
}

enum class CurveClass { condensed, critical, diffuse };

[[nodiscard]] inline const char* to_string(CurveClass c) {
    switch (c) {
        case CurveClass::condensed: return "condensed";
        case CurveClass::critical: return "critical";
        default: return "diffuse";
    }
}

inline constexpr double kClassTol = 1e-9;

struct TurningProfile {
    double theta_plus{0.0};   // sup of theta
    double theta_minus{0.0};  // inf of theta
    double theta1{0.0};       // total turning
    double omega{0.0};        // amplitude = theta_plus - theta_minus
    CurveClass cls{CurveClass::condensed};
};

[[nodiscard]] inline CurveClass classify_amplitude(double omega, double tol = kClassTol) {
    if (omega < kPi - tol) return CurveClass::condensed;
    if (omega > kPi + tol) return CurveClass::diffuse;
    return CurveClass::critical;
}

/// theta is piecewise linear with slope kappa_i, so its extremes sit at
/// segment breakpoints.
[[nodiscard]] inline TurningProfile turning_profile(const PiecewiseCurve& c, double tol = kClassTol) {
    validate(c);
    TurningProfile tp;
    double theta = 0.0;
    tp.theta_plus = 0.0;
    tp.theta_minus = 0.0;
    for (const auto& s : c.segs) {
        theta += s.kappa * s.len;
        tp.theta_plus = std::max(tp.theta_plus, theta);
        tp.theta_minus = std::min(tp.theta_minus, theta);
    }
    tp.theta1 = theta;
    tp.omega = tp.theta_plus - tp.theta_minus;
    tp.cls = classify_amplitude(tp.omega, tol);
    return tp;
}

[[nodiscard]] inline CurveClass classify(const PiecewiseCurve& c, double tol = kClassTol) {
    return turning_profile(c, tol).cls;
}

inline constexpr double kConcatTol = 1e-9;

[[nodiscard]] inline PiecewiseCurve concat(const PiecewiseCurve& c1, const PiecewiseCurve& c2,
                                           double tol = kConcatTol) {
    validate(c1);
    validate(c2);
    if (!frames_close(end_frame(c1), c2.start, tol)) {
        throw FrameMismatch("concat endpoints differ beyond tolerance");
    }
    PiecewiseCurve out = c1;
    out.segs.insert(out.segs.end(), c2.segs.begin(), c2.segs.end());
    return out;
}

/// Orientation reversal: start at the old end with flipped heading,
/// segments reversed with negated curvature.
[[nodiscard]] inline PiecewiseCurve reverse(const PiecewiseCurve& c) {
    validate(c);
    const Frame q = end_frame(c);
    PiecewiseCurve out;
    out.start = Frame(q.p, -q.w);
    out.segs.reserve(c.segs.size());
    for (auto it = c.segs.rbegin(); it != c.segs.rend(); ++it) {
        out.segs.push_back({-it->kappa, it->len});
    }
    return out;
}

enum class BoundVariant { open, closed };

[[nodiscard]] inline bool in_bounds(const PiecewiseCurve& c, double kappa1, double kappa2,
                                    BoundVariant variant) {
    if (!(kappa1 < kappa2)) throw InvalidBounds("kappa1 must be < kappa2");
    if (variant == BoundVariant::closed && (std::isinf(kappa1) || std::isinf(kappa2))) {
        throw InvalidBounds("closed variant requires finite bounds");
    }
    for (const auto& s : c.segs) {
        if (variant == BoundVariant::open) {
            if (!(s.kappa > kappa1 && s.kappa < kappa2)) return false;
        } else {
            if (!(s.kappa >= kappa1 && s.kappa <= kappa2)) return false;
        }
    }
    return true;
}

struct RandomCurveOptions {
    double delta = 1e-3;    // margin kept from finite bounds
    double kappa_cap = 4.0; // replaces an infinite bound
    double min_seg_len = 1e-3;
};

/// Seed-deterministic sampler of curves strictly inside the open bounds.
[[nodiscard]] inline PiecewiseCurve random_curve(double kappa1, double kappa2, int n_segs,
                                                 double max_seg_len, std::uint64_t seed,
                                                 const RandomCurveOptions& opt = {}) {
    if (!(kappa1 < kappa2)) throw InvalidBounds("kappa1 must be < kappa2");
    if (n_segs < 1) throw ParameterOutOfRange("n_segs must be >= 1");
    double lo = std::isinf(kappa1) ? -opt.kappa_cap : kappa1 + opt.delta;
    double hi = std::isinf(kappa2) ? opt.kappa_cap : kappa2 - opt.delta;
    if (!(lo < hi)) {  // very tight bounds: shrink the margin instead
        lo = kappa1 + 0.25 * (kappa2 - kappa1);
        hi = kappa2 - 0.25 * (kappa2 - kappa1);
    }
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> kdist(lo, hi);
    std::uniform_real_distribution<double> ldist(opt.min_seg_len, max_seg_len);
    PiecewiseCurve c;
    c.segs.reserve(static_cast<std::size_t>(n_segs));
    for (int i = 0; i < n_segs; ++i) c.segs.push_back({kdist(rng), ldist(rng)});
    return c;
}

struct SamplePoint {
    double s{0.0};      // arc length
    Complex pos{};
    double theta{0.0};  // heading argument, theta(0) = 0
};

/// Points at arc-length steps <= ds, always including segment breakpoints
/// and both endpoints.
[[nodiscard]] inline std::vector<SamplePoint> sample_points(const PiecewiseCurve& c, double ds) {
    validate(c);
    if (!(ds > 0.0)) throw ParameterOutOfRange("ds must be positive");
    std::vector<SamplePoint> out;
    Frame at = c.start;
    double s0 = 0.0;
    double theta0 = 0.0;
    out.push_back({0.0, at.p, 0.0});
    for (const auto& seg : c.segs) {
        const int n = std::max(1, static_cast<int>(std::ceil(seg.len / ds)));
        for (int i = 1; i <= n; ++i) {
            const double t = seg.len * static_cast<double>(i) / n;
            const Frame f = frame_mul(at, segment_motion(seg.kappa, t));
            out.push_back({s0 + t, f.p, theta0 + seg.kappa * t});
        }
        at = frame_mul(at, segment_motion(seg.kappa, seg.len));
        s0 += seg.len;
        theta0 += seg.kappa * seg.len;
    }
    return out;
}

/// Reflection across the x-axis: headings conjugate, curvature flips sign.
[[nodiscard]] inline PiecewiseCurve mirror_x(const PiecewiseCurve& c) {
    PiecewiseCurve out;
    out.start = Frame(std::conj(c.start.p), std::conj(c.start.w));
    out.segs.reserve(c.segs.size());
    for (const auto& s : c.segs) out.segs.push_back({-s.kappa, s.len});
    return out;
}

/// Single-segment convenience curves.
[[nodiscard]] inline PiecewiseCurve line_segment(double len, Frame start = {}) {
    PiecewiseCurve c;
    c.start = start;
    c.segs.push_back({0.0, len});
    return c;
}

[[nodiscard]] inline PiecewiseCurve arc(double kappa, double len, Frame start = {}) {
    PiecewiseCurve c;
    c.start = start;
    c.segs.push_back({kappa, len});
    return c;
}

}  // namespace curvspace
