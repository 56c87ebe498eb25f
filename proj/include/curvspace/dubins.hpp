#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "curvspace/curve.hpp"
#include "curvspace/errors.hpp"
#include "curvspace/geom.hpp"
#include "curvspace/regions.hpp"

namespace curvspace {

// ---------------------------------------------------------------------------
// Slope-function machinery shared by the excavator contraction and the
// minimal-path construction. A condensed curve seen from an axis phi is the
// graph of y(x); f = dy/dx is clipped between circle-arc barriers g|h and
// levels mu-+ chosen to conserve area.

namespace excavator_detail {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// Barrier parameters of C:excavator for curvature bound kappa0.
struct Barriers {
    double kappa0{1.0};
    double b{0.0};
    double alpha_plus{0.0}, alpha_minus{0.0};
    double beta_plus{0.0}, beta_minus{0.0};

    Barriers() = default;
    Barriers(double kappa0_, double b_, double r0, double rb) : kappa0(kappa0_), b(b_) {
        const double c0 = r0 / std::sqrt(1.0 + r0 * r0);
        const double cb = rb / std::sqrt(1.0 + rb * rb);
        alpha_plus = -c0;
        alpha_minus = c0;
        beta_plus = kappa0 * b + cb;
        beta_minus = kappa0 * b - cb;
    }

    // g+- solve g' = +-kappa0 (1+g^2)^{3/2} with g(0) = r0; h-+ the mirrored
    // equations with h(b) = rb. Saturated to +-inf outside their domains.
    [[nodiscard]] double g_plus(double x) const {
        const double u = kappa0 * x - alpha_plus;
        if (u >= 1.0) return kInf;
        if (u <= -1.0) return -kInf;
        return u / std::sqrt(1.0 - u * u);
    }
    [[nodiscard]] double g_minus(double x) const {
        const double u = kappa0 * x - alpha_minus;
        if (u >= 1.0) return -kInf;
        if (u <= -1.0) return kInf;
        return -u / std::sqrt(1.0 - u * u);
    }
    [[nodiscard]] double h_plus(double x) const {
        const double u = kappa0 * x - beta_plus;
        if (u >= 1.0) return -kInf;
        if (u <= -1.0) return kInf;
        return -u / std::sqrt(1.0 - u * u);
    }
    [[nodiscard]] double h_minus(double x) const {
        const double u = kappa0 * x - beta_minus;
        if (u >= 1.0) return kInf;
        if (u <= -1.0) return -kInf;
        return u / std::sqrt(1.0 - u * u);
    }

    [[nodiscard]] double lower(double x) const { return std::max(g_minus(x), h_minus(x)); }
    [[nodiscard]] double upper(double x) const { return std::min(g_plus(x), h_plus(x)); }
};

[[nodiscard]] inline double median7(std::array<double, 7> v) {
    std::nth_element(v.begin(), v.begin() + 3, v.end());
    return v[3];
}

}  // namespace excavator_detail

// ---------------------------------------------------------------------------
// CSC oracle: closed-form enumeration of the four arc-segment-arc words with
// arc amplitudes < pi.

struct CscCandidate {
    std::string word;     // e.g. "LSR"; arcs may be degenerate
    double amp1{0.0};     // first arc amplitude (radians)
    double seg_len{0.0};  // straight piece length
    double amp2{0.0};     // second arc amplitude
    double kappa0{1.0};
    [[nodiscard]] double length() const { return (amp1 + amp2) / kappa0 + seg_len; }
    [[nodiscard]] PiecewiseCurve curve(int s1, int s2) const {
        PiecewiseCurve c;
        if (amp1 > 1e-14) c.segs.push_back({s1 * kappa0, amp1 / kappa0});
        if (seg_len > 1e-14) c.segs.push_back({0.0, seg_len});
        if (amp2 > 1e-14) c.segs.push_back({s2 * kappa0, amp2 / kappa0});
        if (c.segs.empty()) c.segs.push_back({0.0, 1e-15});
        return c;
    }
};

struct CscSolution {
    PiecewiseCurve curve;
    double length{0.0};
    std::string word;
    bool tie{false};  // another word матches the minimal length within 1e-9
};

/// Enumerate all feasible CSC words from O to Q with |kappa| = kappa0 arcs of
/// amplitude < pi. theta1 is the principal turning of Q's heading.
[[nodiscard]] inline std::vector<CscCandidate> csc_enumerate(const Frame& Q, double kappa0) {
    if (!(kappa0 > 0.0)) throw ParameterOutOfRange("kappa0 must be positive");
    const double rho = 1.0 / kappa0;
    const double theta1 = std::arg(Q.w);
    const Complex q = Q.p, z = Q.w;
    const Complex i(0.0, 1.0);
    const double amp_tol = 1e-9;

    std::vector<CscCandidate> out;
    for (int s1 : {+1, -1}) {
        for (int s2 : {+1, -1}) {
            // l e^{iu} = A + i b_im e^{iu}, with u the mid-segment heading.
            const Complex A = q - i * (static_cast<double>(s1) * rho) +
                              i * (static_cast<double>(s2) * rho) * z;
            const double b_im = (s1 - s2) * rho;
            const double R = std::abs(A);

            const auto try_candidate = [&](double u, double seg_len) {
                const double a1 = s1 * u;
                const double a2 = s2 * (theta1 - u);
                if (a1 < -amp_tol || a1 > kPi - 1e-12) return;
                if (a2 < -amp_tol || a2 > kPi - 1e-12) return;
                if (seg_len < -amp_tol) return;
                CscCandidate cand;
                cand.word = std::string(1, s1 > 0 ? 'L' : 'R') + "S" + (s2 > 0 ? 'L' : 'R');
                cand.amp1 = std::max(0.0, a1);
                cand.seg_len = std::max(0.0, seg_len);
                cand.amp2 = std::max(0.0, a2);
                cand.kappa0 = kappa0;
                // Accept only candidates that actually land on Q.
                const Frame end = end_frame(cand.curve(s1, s2));
                if (frame_distance(end, Q) < 1e-7 * (1.0 + std::abs(q))) out.push_back(cand);
            };

            if (R < 1e-13) {
                // Degenerate: arcs only; pick the smallest first arc.
                if (b_im == 0.0) {
                    try_candidate(0.0, 0.0);
                    try_candidate(theta1, 0.0);
                }
                continue;
            }
            const double sin_t = -b_im / R;
            if (std::abs(sin_t) > 1.0) continue;
            const double t0 = std::asin(sin_t);
            const double seg_len = R * std::cos(t0);
            const double alpha = std::arg(A);
            // Representative of u = alpha - t0 with s1*u in [0, pi).
            double u = wrap_angle(alpha - t0);
            for (double cand_u : {u, u + 2.0 * kPi, u - 2.0 * kPi}) {
                if (s1 * cand_u >= -amp_tol && s1 * cand_u <= kPi) {
                    try_candidate(cand_u, seg_len);
                    break;
                }
            }
        }
    }
    return out;
}

/// Minimal-length CSC candidate; ties broken toward the smaller first-arc
/// amplitude. Independent oracle for the excavator construction.
[[nodiscard]] inline CscSolution dubins_csc_oracle(const Frame& Q, double kappa0) {
    auto cands = csc_enumerate(Q, kappa0);
    if (cands.empty()) throw Unreachable("no CSC word reaches Q within the curvature bound");
    std::sort(cands.begin(), cands.end(), [](const CscCandidate& a, const CscCandidate& b) {
        if (a.length() != b.length()) return a.length() < b.length();
        return a.amp1 < b.amp1;
    });
    CscSolution sol;
    const auto& best = cands.front();
    const int s1 = best.word[0] == 'L' ? +1 : -1;
    const int s2 = best.word[2] == 'L' ? +1 : -1;
    sol.curve = best.curve(s1, s2);
    sol.length = best.length();
    sol.word = best.word;
    sol.tie = cands.size() > 1 && cands[1].word != best.word &&
              cands[1].length() <= best.length() + 1e-9;
    return sol;
}

// ---------------------------------------------------------------------------
// Minimal path via the slope-function construction: f0 = midd(h-, g-, mu0,
// g+, h+) with mu0 fixed by the area constraint. Exact piecewise evaluation;
// no word enumeration.

namespace excavator_detail {

struct PathPiece {
    enum Kind { GPlus, GMinus, HPlus, HMinus, Level } kind;
    double x0, x1;
};

struct AxisProblem {
    double kappa0{1.0};
    double axis{0.0};
    double b{0.0};
    double r0{0.0}, rb{0.0};
    double area{0.0};
    Barriers bar;
};

/// x where barrier(x) = mu (exact inversion of the arc solutions).
[[nodiscard]] inline double barrier_hits_level(const Barriers& bar, PathPiece::Kind kind,
                                               double mu) {
    const double s = mu / std::sqrt(1.0 + mu * mu);
    switch (kind) {
        case PathPiece::GPlus: return (bar.alpha_plus + s) / bar.kappa0;
        case PathPiece::GMinus: return (bar.alpha_minus - s) / bar.kappa0;
        case PathPiece::HPlus: return (bar.beta_plus - s) / bar.kappa0;
        case PathPiece::HMinus: return (bar.beta_minus + s) / bar.kappa0;
        default: return 0.0;
    }
}

/// Antiderivative of each barrier branch.
[[nodiscard]] inline double barrier_antiderivative(const Barriers& bar, PathPiece::Kind kind,
                                                   double x) {
    const auto root = [](double u) { return std::sqrt(std::max(0.0, 1.0 - u * u)); };
    switch (kind) {
        case PathPiece::GPlus: return -root(bar.kappa0 * x - bar.alpha_plus) / bar.kappa0;
        case PathPiece::GMinus: return root(bar.kappa0 * x - bar.alpha_minus) / bar.kappa0;
        case PathPiece::HPlus: return root(bar.kappa0 * x - bar.beta_plus) / bar.kappa0;
        case PathPiece::HMinus: return -root(bar.kappa0 * x - bar.beta_minus) / bar.kappa0;
        default: return 0.0;
    }
}

[[nodiscard]] inline double barrier_value(const Barriers& bar, PathPiece::Kind kind, double x) {
    switch (kind) {
        case PathPiece::GPlus: return bar.g_plus(x);
        case PathPiece::GMinus: return bar.g_minus(x);
        case PathPiece::HPlus: return bar.h_plus(x);
        case PathPiece::HMinus: return bar.h_minus(x);
        default: return 0.0;
    }
}

/// Decompose f0 = clamp(mu, lower, upper) into pieces. Returns nullopt when
/// the level is structurally incompatible (axis infeasible).
[[nodiscard]] inline std::optional<std::vector<PathPiece>> level_pieces(const AxisProblem& ap,
                                                                        double mu) {
    const auto& bar = ap.bar;
    std::optional<PathPiece::Kind> left, right;
    double x_left = 0.0, x_right = ap.b;
    if (mu > ap.r0) { left = PathPiece::GPlus; }
    else if (mu < ap.r0) { left = PathPiece::GMinus; }
    if (mu < ap.rb) { right = PathPiece::HMinus; }
    else if (mu > ap.rb) { right = PathPiece::HPlus; }
    if (left) x_left = std::clamp(barrier_hits_level(bar, *left, mu), 0.0, ap.b);
    if (right) x_right = std::clamp(barrier_hits_level(bar, *right, mu), 0.0, ap.b);

    std::vector<PathPiece> pieces;
    if (x_left <= x_right) {
        if (left && x_left > 0.0) pieces.push_back({*left, 0.0, x_left});
        if (x_right > x_left) pieces.push_back({PathPiece::Level, x_left, x_right});
        if (right && x_right < ap.b) pieces.push_back({*right, x_right, ap.b});
        return pieces;
    }
    // No level piece: the two barriers must cross.
    if (!left || !right) return std::nullopt;
    double xc;
    if (*left == PathPiece::GPlus && *right == PathPiece::HPlus) {
        xc = (bar.alpha_plus + bar.beta_plus) / (2.0 * bar.kappa0);
    } else if (*left == PathPiece::GMinus && *right == PathPiece::HMinus) {
        xc = (bar.alpha_minus + bar.beta_minus) / (2.0 * bar.kappa0);
    } else {
        return std::nullopt;  // opposite-sign barriers do not cross
    }
    if (xc < -1e-12 || xc > ap.b + 1e-12) return std::nullopt;
    xc = std::clamp(xc, 0.0, ap.b);
    pieces.push_back({*left, 0.0, xc});
    pieces.push_back({*right, xc, ap.b});
    return pieces;
}

[[nodiscard]] inline std::optional<double> level_area(const AxisProblem& ap, double mu) {
    const auto pieces = level_pieces(ap, mu);
    if (!pieces) return std::nullopt;
    double area = 0.0;
    for (const auto& p : *pieces) {
        if (p.kind == PathPiece::Level) area += mu * (p.x1 - p.x0);
        else
            area += barrier_antiderivative(ap.bar, p.kind, p.x1) -
                    barrier_antiderivative(ap.bar, p.kind, p.x0);
    }
    return area;
}

/// Solve area(mu) = target by bisection (area is increasing in mu).
[[nodiscard]] inline std::optional<double> solve_level(const AxisProblem& ap) {
    double lo = std::min({ap.r0, ap.rb, 0.0}) - 1.0;
    double hi = std::max({ap.r0, ap.rb, 0.0}) + 1.0;
    auto area = [&](double mu) { return level_area(ap, mu); };
    auto alo = area(lo);
    auto ahi = area(hi);
    if (!alo || !ahi) return std::nullopt;
    for (int grow = 0; grow < 80 && *alo > ap.area; ++grow) {
        const double prev = *alo;
        lo = lo * 2.0 - 1.0;
        alo = area(lo);
        if (!alo) return std::nullopt;
        if (*alo == prev && *alo > ap.area) return std::nullopt;  // saturated short of target
    }
    for (int grow = 0; grow < 80 && *ahi < ap.area; ++grow) {
        const double prev = *ahi;
        hi = hi * 2.0 + 1.0;
        ahi = area(hi);
        if (!ahi) return std::nullopt;
        if (*ahi == prev && *ahi < ap.area) return std::nullopt;
    }
    if (*alo > ap.area || *ahi < ap.area) return std::nullopt;
    while (true) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        const auto am = area(mid);
        if (!am) return std::nullopt;
        if (*am < ap.area) lo = mid;
        else hi = mid;
    }
    return 0.5 * (lo + hi);
}

/// Assemble the minimal curve for one axis; verifies nothing. Adjacent
/// pieces of equal curvature merge (a barrier crossing of the same sign
/// splits one arc in two).
[[nodiscard]] inline std::optional<PiecewiseCurve> build_minimal_curve(const AxisProblem& ap,
                                                                       double mu0) {
    const auto pieces = level_pieces(ap, mu0);
    if (!pieces) return std::nullopt;
    PiecewiseCurve c;
    const auto push = [&c](double kappa, double len) {
        if (len <= 1e-14) return;
        if (!c.segs.empty() && c.segs.back().kappa == kappa) c.segs.back().len += len;
        else c.segs.push_back({kappa, len});
    };
    for (const auto& p : *pieces) {
        if (p.kind == PathPiece::Level) {
            push(0.0, (p.x1 - p.x0) * std::sqrt(1.0 + mu0 * mu0));
            continue;
        }
        const double f0 = barrier_value(ap.bar, p.kind, p.x0);
        const double f1 = barrier_value(ap.bar, p.kind, p.x1);
        if (!std::isfinite(f0) || !std::isfinite(f1)) return std::nullopt;
        const double dtheta = std::atan(f1) - std::atan(f0);
        const double kappa =
            (p.kind == PathPiece::GPlus || p.kind == PathPiece::HMinus) ? ap.kappa0 : -ap.kappa0;
        const double len = dtheta / kappa;
        if (len < -1e-12) return std::nullopt;
        push(kappa, std::max(0.0, len));
    }
    if (c.segs.empty()) return std::nullopt;
    return c;
}

[[nodiscard]] inline std::optional<AxisProblem> make_axis_problem(const Frame& Q, double kappa0,
                                                                  double theta1, double axis) {
    if (!(std::abs(axis) < kPi / 2.0 && std::abs(theta1 - axis) < kPi / 2.0)) return std::nullopt;
    const Complex qa = std::polar(1.0, -axis) * Q.p;
    AxisProblem ap;
    ap.kappa0 = kappa0;
    ap.axis = axis;
    ap.b = qa.real();
    if (!(ap.b > 1e-12)) return std::nullopt;
    ap.r0 = std::tan(-axis);
    ap.rb = std::tan(theta1 - axis);
    ap.area = qa.imag();
    ap.bar = Barriers(kappa0, ap.b, ap.r0, ap.rb);
    // The endpoint slopes must respect the opposite-end barriers.
    if (ap.bar.h_minus(0.0) > ap.r0 || ap.bar.h_plus(0.0) < ap.r0) return std::nullopt;
    if (ap.bar.g_minus(ap.b) > ap.rb || ap.bar.g_plus(ap.b) < ap.rb) return std::nullopt;
    return ap;
}

[[nodiscard]] inline std::optional<PiecewiseCurve> try_axis(const Frame& Q, double kappa0,
                                                            double theta1, double axis) {
    const auto ap = make_axis_problem(Q, kappa0, theta1, axis);
    if (!ap) return std::nullopt;
    const auto mu0 = solve_level(*ap);
    if (!mu0) return std::nullopt;
    auto curve = build_minimal_curve(*ap, *mu0);
    if (!curve) return std::nullopt;
    if (frame_distance(end_frame(*curve), Q) > 1e-7 * (1.0 + std::abs(Q.p))) return std::nullopt;
    return curve;
}

}  // namespace excavator_detail

/// The unique minimal-length curve from O to Q with |kappa| <= kappa0, for Q
/// reachable by condensed curves (checked through the scaled region
/// predicate). Built from the slope-function construction, independently of
/// the CSC word enumeration.
[[nodiscard]] inline PiecewiseCurve dubins_condensed(const Frame& Q, double kappa0) {
    if (!(kappa0 > 0.0)) throw ParameterOutOfRange("kappa0 must be positive");
    const double theta1 = std::arg(Q.w);
    if (std::abs(theta1) >= kPi - 1e-12 ||
        !condensed_exists(kappa0 * Q.p, theta1, BoundVariant::closed)) {
        throw Unreachable("Q is not reachable by a condensed curve in the closed bounds");
    }
    const double lo = std::max(theta1, 0.0) - kPi / 2.0;
    const double hi = std::min(theta1, 0.0) + kPi / 2.0;
    // Dyadic axis scan from the midpoint outward; the result is
    // axis-independent, so the first success is the answer.
    std::optional<PiecewiseCurve> found = excavator_detail::try_axis(
        Q, kappa0, theta1, 0.5 * (lo + hi));
    for (int level = 2; level <= 8 && !found; ++level) {
        const int den = 1 << level;
        for (int num = 1; num < den && !found; num += 2) {
            const double axis = lo + (hi - lo) * static_cast<double>(num) / den;
            found = excavator_detail::try_axis(Q, kappa0, theta1, axis);
        }
    }
    if (!found) throw NoAxis("no admissible axis produced the minimal curve");
    // Canonical axis: recenter on the solution's own heading span and rebuild.
    const auto tp = turning_profile(*found);
    const double centered = 0.5 * (tp.theta_plus + tp.theta_minus);
    if (auto refined = excavator_detail::try_axis(Q, kappa0, theta1, centered)) return *refined;
    return *found;
}

// ---------------------------------------------------------------------------
// Excavator contraction of a condensed curve

struct ExcavatorOptions {
    int grid_points = 4096;       // uniform x samples (nodes = grid_points + 1)
    double area_tol_scale = 1e-10;
};

struct ExcavatorStep {
    double s{0.0};
    double mu_minus{0.0}, mu_plus{0.0};
    std::vector<double> f;  // clipped slope samples at the grid nodes
    double omega{0.0};
    double length{0.0};
    double area{0.0};
};

/// Full state of the contraction: the axis frame data plus one entry per
/// homotopy step (s = 0 is the minimal curve, s = 1 the input).
struct ExcavatorTrace {
    double kappa0{1.0};
    double axis{0.0};       // axis heading relative to the start frame
    double b{0.0};
    double r0{0.0}, rb{0.0};
    double area{0.0};       // conserved target A1 (grid quadrature)
    double m_minus{0.0}, m_plus{0.0};
    double theta1{0.0};
    Frame base{};           // original start frame
    std::vector<double> x;  // grid nodes in the axis frame
    std::vector<double> f;  // witness slope samples
    std::vector<ExcavatorStep> steps;

    /// Rebuild the world-frame polyline of a step by cumulative quadrature.
    [[nodiscard]] std::vector<Complex> sampled_curve(std::size_t step) const {
        const auto& fs = steps.at(step).f;
        std::vector<Complex> pts(fs.size());
        const Complex rot = std::polar(1.0, axis);
        double y = 0.0;
        pts[0] = frame_apply(base, Complex(0.0, 0.0));
        for (std::size_t j = 1; j < fs.size(); ++j) {
            const double h = x[j] - x[j - 1];
            y += 0.5 * (fs[j] + fs[j - 1]) * h;
            pts[j] = frame_apply(base, rot * Complex(x[j], y));
        }
        return pts;
    }
};

namespace excavator_detail {

struct GridProblem {
    Barriers bar;
    std::vector<double> x;
    std::vector<double> f;
    // Barrier values cached per node; the area bisections evaluate the
    // median thousands of times.
    std::vector<double> gp, gm, hp, hm;

    void cache_barriers() {
        const std::size_t n = x.size();
        gp.resize(n);
        gm.resize(n);
        hp.resize(n);
        hm.resize(n);
        for (std::size_t j = 0; j < n; ++j) {
            gp[j] = bar.g_plus(x[j]);
            gm[j] = bar.g_minus(x[j]);
            hp[j] = bar.h_plus(x[j]);
            hm[j] = bar.h_minus(x[j]);
        }
    }

    // Equal to median7(hm, gm, mu-, f, mu+, gp, hp) whenever the barriers
    // sandwich f and mu- <= mu+, which holds for slope samples of a curve
    // within the closed curvature bound.
    [[nodiscard]] double clipped(std::size_t j, double mu_minus, double mu_plus) const {
        const double level = std::min(mu_plus, std::max(mu_minus, f[j]));
        return std::min(std::min(gp[j], hp[j]), std::max(std::max(gm[j], hm[j]), level));
    }

    [[nodiscard]] double area(double mu_minus, double mu_plus) const {
        double a = 0.0;
        double prev = clipped(0, mu_minus, mu_plus);
        for (std::size_t j = 1; j < x.size(); ++j) {
            const double cur = clipped(j, mu_minus, mu_plus);
            a += 0.5 * (prev + cur) * (x[j] - x[j - 1]);
            prev = cur;
        }
        return a;
    }
};

}  // namespace excavator_detail

/// Contraction of a condensed curve onto the minimal path, clipping the slope
/// function between levels chosen to conserve area. Amplitude and length are
/// non-decreasing in s.
[[nodiscard]] inline ExcavatorTrace excavator_trace(const PiecewiseCurve& curve, double kappa0,
                                                    int n_steps,
                                                    const ExcavatorOptions& opt = {}) {
    validate(curve);
    if (!(kappa0 > 0.0)) throw ParameterOutOfRange("kappa0 must be positive");
    if (n_steps < 1) throw ParameterOutOfRange("n_steps must be >= 1");
    const auto tp = turning_profile(curve);
    if (tp.cls != CurveClass::condensed) throw NotCondensed("excavator needs a condensed curve");
    if (!in_bounds(curve, -kappa0, kappa0, BoundVariant::closed)) {
        throw OutOfBounds("curve exceeds the closed curvature bound");
    }

    ExcavatorTrace tr;
    tr.kappa0 = kappa0;
    tr.base = curve.start;
    tr.theta1 = tp.theta1;
    const double axis_rel = 0.5 * (tp.theta_plus + tp.theta_minus);  // E:thetabar
    tr.axis = axis_rel;

    // Axis-frame breakpoints: x(s) integrates cos(theta - axis) exactly.
    const std::size_t nseg = curve.segs.size();
    std::vector<double> xb(nseg + 1, 0.0), thetab(nseg + 1, 0.0);
    for (std::size_t k = 0; k < nseg; ++k) {
        const auto& seg = curve.segs[k];
        thetab[k + 1] = thetab[k] + seg.kappa * seg.len;
        if (seg.kappa == 0.0) {
            xb[k + 1] = xb[k] + seg.len * std::cos(thetab[k] - axis_rel);
        } else {
            xb[k + 1] = xb[k] + (std::sin(thetab[k + 1] - axis_rel) -
                                 std::sin(thetab[k] - axis_rel)) / seg.kappa;
        }
    }
    tr.b = xb[nseg];
    tr.r0 = std::tan(thetab[0] - axis_rel);
    tr.rb = std::tan(thetab[nseg] - axis_rel);

    const int N = std::max(8, opt.grid_points);
    excavator_detail::GridProblem grid;
    grid.bar = excavator_detail::Barriers(kappa0, tr.b, tr.r0, tr.rb);
    grid.x.resize(static_cast<std::size_t>(N) + 1);
    grid.f.resize(grid.x.size());
    std::size_t k = 0;
    for (std::size_t j = 0; j < grid.x.size(); ++j) {
        const double xj = tr.b * static_cast<double>(j) / N;
        grid.x[j] = xj;
        while (k + 1 < nseg && xj > xb[k + 1]) ++k;
        const auto& seg = curve.segs[k];
        double th;
        if (seg.kappa == 0.0) {
            th = thetab[k] - axis_rel;
        } else {
            const double sv = std::sin(thetab[k] - axis_rel) + seg.kappa * (xj - xb[k]);
            th = std::asin(std::clamp(sv, -1.0, 1.0));
        }
        grid.f[j] = std::tan(th);
    }
    grid.cache_barriers();
    tr.x = grid.x;
    tr.f = grid.f;
    tr.m_minus = *std::min_element(grid.f.begin(), grid.f.end());
    tr.m_plus = *std::max_element(grid.f.begin(), grid.f.end());
    tr.area = grid.area(tr.m_minus, tr.m_plus);  // equals the quadrature of f itself

    const double area_tol = opt.area_tol_scale * std::max(1.0, tr.b) * (1.0 + std::abs(tr.area));

    for (int step = 0; step <= n_steps; ++step) {
        const double s = static_cast<double>(step) / n_steps;
        const double w = (tr.m_plus - tr.m_minus) * s;
        const double t_min = tr.m_minus, t_max = tr.m_plus - w;
        auto area_line = [&](double t) { return grid.area(t, t + w); };

        // Center of the solution interval of area(t) = A1 on this line.
        double t_lo = t_min, t_hi = t_max;
        if (area_line(t_min) < tr.area) {
            double lo = t_min, hi = t_max;
            while (true) {
                const double mid = 0.5 * (lo + hi);
                if (mid <= lo || mid >= hi) break;
                if (area_line(mid) < tr.area) lo = mid;
                else hi = mid;
            }
            t_lo = hi;
        }
        if (area_line(t_max) > tr.area) {
            double lo = t_min, hi = t_max;
            while (true) {
                const double mid = 0.5 * (lo + hi);
                if (mid <= lo || mid >= hi) break;
                if (area_line(mid) <= tr.area) lo = mid;
                else hi = mid;
            }
            t_hi = lo;
        }
        ExcavatorStep es;
        es.s = s;
        es.mu_minus = 0.5 * (t_lo + t_hi);
        es.mu_plus = es.mu_minus + w;
        es.f.resize(grid.x.size());
        for (std::size_t j = 0; j < grid.x.size(); ++j) {
            es.f[j] = grid.clipped(j, es.mu_minus, es.mu_plus);
        }
        es.area = grid.area(es.mu_minus, es.mu_plus);
        if (std::abs(es.area - tr.area) > 100.0 * area_tol) {
            throw GridTooCoarse("area root-finding missed the target tolerance");
        }
        double tmin = std::atan(es.f[0]), tmax = tmin, len = 0.0;
        double prev_l = std::sqrt(1.0 + es.f[0] * es.f[0]);
        for (std::size_t j = 1; j < es.f.size(); ++j) {
            const double th = std::atan(es.f[j]);
            tmin = std::min(tmin, th);
            tmax = std::max(tmax, th);
            const double cur_l = std::sqrt(1.0 + es.f[j] * es.f[j]);
            len += 0.5 * (prev_l + cur_l) * (grid.x[j] - grid.x[j - 1]);
            prev_l = cur_l;
        }
        es.omega = tmax - tmin;
        es.length = len;
        tr.steps.push_back(std::move(es));
    }
    return tr;
}

}  // namespace curvspace
