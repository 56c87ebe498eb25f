#pragma once

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

#include "curvspace/curve.hpp"
#include "curvspace/errors.hpp"
#include "curvspace/geom.hpp"
#include "curvspace/normalize.hpp"
#include "curvspace/regions.hpp"

namespace curvspace {

// ---------------------------------------------------------------------------
// Loops and eights: radius-2 building blocks with curvature +-1/2

/// alpha_n: the radius-2 loop traversed n times; turning 2*pi*n.
[[nodiscard]] inline PiecewiseCurve loop_curve(int n, Frame at = {}) {
    if (n < 1) throw ParameterOutOfRange("n must be >= 1");
    PiecewiseCurve c;
    c.start = at;
    c.segs.push_back({0.5, 4.0 * kPi * n});
    return c;
}

/// beta_n: the radius-2 eight traversed n times; turning 0.
[[nodiscard]] inline PiecewiseCurve eight_curve(int n, Frame at = {}) {
    if (n < 1) throw ParameterOutOfRange("n must be >= 1");
    PiecewiseCurve c;
    c.start = at;
    for (int k = 0; k < n; ++k) {
        c.segs.push_back({+0.5, 4.0 * kPi});
        c.segs.push_back({-0.5, 4.0 * kPi});
    }
    return c;
}

enum class AttachKind { loop, eight };

/// Insert alpha_n or beta_n at the frame reached at fraction t0 of the
/// length. End frames are unchanged; the inserted pieces have curvature
/// +-1/2. Turning grows by 2*pi*n for a loop and is unchanged for an eight.
[[nodiscard]] inline PiecewiseCurve attach_eight(const PiecewiseCurve& c, int n, double t0,
                                                 double eps, AttachKind kind) {
    validate(c);
    if (n < 1) throw ParameterOutOfRange("n must be >= 1");
    if (!(eps > 0.0 && 2.0 * eps < std::min(t0, 1.0 - t0))) {
        throw BadWindow("need 0 < 2*eps < min(t0, 1-t0)");
    }
    const double L = c.length();
    const double s0 = t0 * L;
    const auto inserted = kind == AttachKind::loop ? loop_curve(n) : eight_curve(n);

    PiecewiseCurve out;
    out.start = c.start;
    double done = 0.0;
    bool placed = false;
    for (const auto& seg : c.segs) {
        if (!placed && s0 <= done + seg.len) {
            const double head = s0 - done;
            if (head > 1e-15) out.segs.push_back({seg.kappa, head});
            out.segs.insert(out.segs.end(), inserted.segs.begin(), inserted.segs.end());
            if (seg.len - head > 1e-15) out.segs.push_back({seg.kappa, seg.len - head});
            placed = true;
        } else {
            out.segs.push_back(seg);
        }
        done += seg.len;
    }
    if (!placed) out.segs.insert(out.segs.end(), inserted.segs.begin(), inserted.segs.end());
    return out;
}

// ---------------------------------------------------------------------------
// Spreading eights along a curve: S(t) = Phi_c(t) . beta_n(t)

struct SpreadSample {
    double t{0.0};
    Complex pos{};
};

struct SpreadResult {
    std::vector<SpreadSample> samples;
    std::vector<double> kappa_fd;    // Menger curvature of in-piece triples
    double sup_abs_dev{0.0};         // sup over samples of ||kappa| - 1/2|
    double c_estimate{0.0};          // sup_abs_dev * n
    Frame start{}, end{};            // analytic end frames of S
    double theta1{0.0};              // measured total turning of S
};

namespace detail {

[[nodiscard]] inline Complex eight_pos(double u) {
    // One eight per unit of u; passes through 0 at every half-integer.
    const double frac = u - std::floor(u);
    const bool first_half = frac < 0.5;
    if (first_half) return Complex(0.0, 2.0) * (1.0 - std::polar(1.0, 4.0 * kPi * u));
    return Complex(0.0, -2.0) * (1.0 - std::polar(1.0, -4.0 * kPi * u));
}

[[nodiscard]] inline Complex eight_vel(double u) {
    const double frac = u - std::floor(u);
    if (frac < 0.5) return 8.0 * kPi * std::polar(1.0, 4.0 * kPi * u);
    return 8.0 * kPi * std::polar(1.0, -4.0 * kPi * u);
}

}  // namespace detail

/// Spread n eights along c. The result is a dense sample of
/// S(t) = c(t) + tau(t) * beta_n(t); its curvature is 1/2 + O(1/n) in
/// magnitude away from the 2n-1 junction points.
[[nodiscard]] inline SpreadResult spread_eights(const PiecewiseCurve& c, int n, double ds) {
    validate(c);
    if (n < 1) throw ParameterOutOfRange("n must be >= 1");
    if (!(ds > 0.0)) throw ParameterOutOfRange("ds must be positive");
    const double L = c.length();
    double kmax = 0.0;
    for (const auto& s : c.segs) kmax = std::max(kmax, std::abs(s.kappa));

    const double speed_bound = L + 4.0 * kmax * L + 8.0 * kPi * n;
    const int steps = std::max(64, static_cast<int>(std::ceil(speed_bound / ds)));

    SpreadResult res;
    res.samples.reserve(static_cast<std::size_t>(steps) + 1);
    std::vector<std::pair<int, int>> piece_id(static_cast<std::size_t>(steps) + 1);

    // Segment lookup by cumulative length, frames precomputed per segment.
    std::vector<double> cum(c.segs.size() + 1, 0.0);
    std::vector<Frame> seg_frame(c.segs.size() + 1);
    seg_frame[0] = c.start;
    for (std::size_t k = 0; k < c.segs.size(); ++k) {
        cum[k + 1] = cum[k] + c.segs[k].len;
        seg_frame[k + 1] =
            frame_mul(seg_frame[k], segment_motion(c.segs[k].kappa, c.segs[k].len));
    }

    std::size_t seg = 0;
    for (int j = 0; j <= steps; ++j) {
        const double t = static_cast<double>(j) / steps;
        const double s = t * L;
        while (seg + 1 < c.segs.size() && s > cum[seg + 1]) ++seg;
        const Frame f = frame_mul(seg_frame[seg], segment_motion(c.segs[seg].kappa, s - cum[seg]));
        res.samples.push_back({t, frame_apply(f, detail::eight_pos(n * t))});
        piece_id[static_cast<std::size_t>(j)] = {
            static_cast<int>(std::floor(2.0 * n * t - 1e-12)), static_cast<int>(seg)};
    }

    // Menger curvature on triples that stay within one smooth piece.
    res.kappa_fd.assign(res.samples.size(), std::numeric_limits<double>::quiet_NaN());
    for (std::size_t j = 1; j + 1 < res.samples.size(); ++j) {
        if (piece_id[j - 1] != piece_id[j] || piece_id[j] != piece_id[j + 1]) continue;
        const Complex p1 = res.samples[j - 1].pos, p2 = res.samples[j].pos,
                      p3 = res.samples[j + 1].pos;
        const double a = std::abs(p2 - p1), b = std::abs(p3 - p2), cc = std::abs(p3 - p1);
        if (a < 1e-14 || b < 1e-14 || cc < 1e-14) continue;
        const double kappa = 2.0 * cross(p2 - p1, p3 - p2) / (a * b * cc);
        res.kappa_fd[j] = kappa;
        res.sup_abs_dev = std::max(res.sup_abs_dev, std::abs(std::abs(kappa) - 0.5));
    }
    res.c_estimate = res.sup_abs_dev * n;

    res.start = c.start;  // S(0) = c(0) with the same heading
    res.end = end_frame(c);

    // Total turning measured from the analytic velocity of S.
    double theta = 0.0;
    double prev = std::arg(c.start.w * (L + detail::eight_vel(0.0)));
    seg = 0;
    for (int j = 1; j <= steps; ++j) {
        const double t = static_cast<double>(j) / steps;
        const double s = t * L;
        while (seg + 1 < c.segs.size() && s > cum[seg + 1]) ++seg;
        const Frame f = frame_mul(seg_frame[seg], segment_motion(c.segs[seg].kappa, s - cum[seg]));
        const Complex vel =
            f.w * (L + Complex(0.0, 1.0) * c.segs[seg].kappa * L * detail::eight_pos(n * t) +
                   detail::eight_vel(n * t));
        const double ang = std::arg(vel);
        theta += wrap_angle(ang - prev);
        prev = ang;
    }
    res.theta1 = theta;
    return res;
}

// ---------------------------------------------------------------------------
// Grafting straight segments at antipodally-paired points

struct GraftInsertion {
    double s{0.0};      // arc length along the curve
    double sigma{0.0};  // inserted segment length, >= 0
};

/// Insert straight segments with the curve's heading at each s_i. The
/// pairing must match lengths and antipodal headings, which keeps the end
/// frame fixed.
[[nodiscard]] inline PiecewiseCurve graft(const PiecewiseCurve& c,
                                          const std::vector<GraftInsertion>& insertions,
                                          const std::vector<std::size_t>& pairing,
                                          double heading_tol = 1e-9) {
    validate(c);
    if (pairing.size() != insertions.size()) throw PairingViolation("pairing size mismatch");
    const double L = c.length();
    std::vector<int> hits(insertions.size(), 0);
    for (std::size_t i = 0; i < insertions.size(); ++i) {
        const auto& ins = insertions[i];
        if (ins.sigma < 0.0 || ins.s < -1e-12 || ins.s > L + 1e-12) {
            throw ParameterOutOfRange("insertion outside the curve");
        }
        const std::size_t j = pairing[i];
        if (j >= insertions.size()) throw PairingViolation("pairing index out of range");
        ++hits[j];
        if (std::abs(insertions[j].sigma - ins.sigma) > 1e-12) {
            throw PairingViolation("paired lengths differ");
        }
        const double dth = wrap_angle(theta_at(c, insertions[j].s) - theta_at(c, ins.s) - kPi);
        if (std::abs(dth) > heading_tol) throw PairingViolation("paired headings not antipodal");
    }
    for (int h : hits) {
        if (h != 1) throw PairingViolation("pairing is not a bijection");
    }

    auto order = std::vector<std::size_t>(insertions.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return insertions[a].s < insertions[b].s;
    });

    PiecewiseCurve out;
    out.start = c.start;
    double done = 0.0;
    std::size_t next = 0;
    for (const auto& seg : c.segs) {
        double local = 0.0;
        while (next < order.size() && insertions[order[next]].s <= done + seg.len + 1e-15 &&
               insertions[order[next]].s >= done - 1e-15) {
            const auto& ins = insertions[order[next]];
            const double at = std::clamp(ins.s - done, 0.0, seg.len);
            if (at - local > 1e-15) out.segs.push_back({seg.kappa, at - local});
            if (ins.sigma > 1e-15) out.segs.push_back({0.0, ins.sigma});
            local = at;
            ++next;
        }
        if (seg.len - local > 1e-15) out.segs.push_back({seg.kappa, seg.len - local});
        done += seg.len;
    }
    if (out.segs.empty()) out = c;
    return out;
}

/// Antipodal heading pairs of a diffuse curve, found on the piecewise-linear
/// heading profile. Each returned (s, s') satisfies theta(s') = theta(s) + pi.
[[nodiscard]] inline std::vector<std::pair<double, double>> find_antipodal_pairs(
    const PiecewiseCurve& c, int max_pairs = 8) {
    const auto tp = turning_profile(c);
    if (tp.cls != CurveClass::diffuse) throw NotDiffuse("antipodal pairs need a diffuse curve");

    // Breakpoints of theta(s).
    std::vector<double> sb{0.0}, th{0.0};
    double s = 0.0, t = 0.0;
    for (const auto& seg : c.segs) {
        s += seg.len;
        t += seg.kappa * seg.len;
        sb.push_back(s);
        th.push_back(t);
    }
    const auto first_crossing = [&](double level) -> double {
        for (std::size_t k = 0; k + 1 < th.size(); ++k) {
            const double a = th[k], b = th[k + 1];
            if ((level >= std::min(a, b)) && (level <= std::max(a, b)) && a != b) {
                const double t01 = (level - a) / (b - a);
                return sb[k] + t01 * (sb[k + 1] - sb[k]);
            }
            if (level == a) return sb[k];
        }
        return -1.0;
    };

    std::vector<std::pair<double, double>> pairs;
    const double lo = tp.theta_minus + kPi, hi = tp.theta_plus;
    for (int j = 0; j < max_pairs; ++j) {
        const double level = lo + (hi - lo) * (j + 0.5) / max_pairs;
        const double s_hi = first_crossing(level);
        const double s_lo = first_crossing(level - kPi);
        if (s_hi < 0.0 || s_lo < 0.0 || std::abs(s_hi - s_lo) < 1e-12) continue;
        pairs.emplace_back(std::min(s_lo, s_hi), std::max(s_lo, s_hi));
    }
    return pairs;
}

// ---------------------------------------------------------------------------
// Locally convex homotopy by argument-parametrized interpolation

struct TraceStep {
    double s{0.0};
    PiecewiseCurve curve;
    TurningProfile profile;
    double length{0.0};
};

struct HomotopyTrace {
    std::vector<TraceStep> steps;
};

/// Linear interpolation of the radius of curvature against the tangent
/// argument. Both curves must be strictly locally convex with the same
/// frames and total turning; every intermediate shares the end frames.
[[nodiscard]] inline HomotopyTrace locally_convex_homotopy(const PiecewiseCurve& c0,
                                                           const PiecewiseCurve& c1,
                                                           int n_steps) {
    validate(c0);
    validate(c1);
    if (n_steps < 1) throw ParameterOutOfRange("n_steps must be >= 1");
    for (const auto* c : {&c0, &c1}) {
        for (const auto& seg : c->segs) {
            if (!(seg.kappa > 0.0)) throw NotLocallyConvex("curvature must be strictly positive");
        }
    }
    if (!frames_close(c0.start, c1.start, 1e-9)) throw FrameMismatch("start frames differ");
    if (!frames_close(end_frame(c0), end_frame(c1), 1e-9)) throw FrameMismatch("end frames differ");
    const double theta1 = c0.total_turning();
    if (std::abs(theta1 - c1.total_turning()) > 1e-9) {
        throw TurningMismatch("total turnings differ");
    }

    // Common refinement of the argument breakpoints.
    const auto breaks = [](const PiecewiseCurve& c) {
        std::vector<double> t{0.0};
        double acc = 0.0;
        for (const auto& seg : c.segs) {
            acc += seg.kappa * seg.len;
            t.push_back(acc);
        }
        return t;
    };
    std::vector<double> grid;
    for (const auto& t : {breaks(c0), breaks(c1)}) grid.insert(grid.end(), t.begin(), t.end());
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end(),
                           [](double a, double b) { return std::abs(a - b) < 1e-13; }),
               grid.end());

    const auto rho_of = [](const PiecewiseCurve& c, double theta_mid) {
        double acc = 0.0;
        for (const auto& seg : c.segs) {
            const double next = acc + seg.kappa * seg.len;
            if (theta_mid <= next || &seg == &c.segs.back()) return 1.0 / seg.kappa;
            acc = next;
        }
        return 1.0 / c.segs.back().kappa;
    };

    HomotopyTrace tr;
    for (int k = 0; k <= n_steps; ++k) {
        const double s = static_cast<double>(k) / n_steps;
        PiecewiseCurve cs;
        cs.start = c0.start;
        for (std::size_t j = 0; j + 1 < grid.size(); ++j) {
            const double dth = grid[j + 1] - grid[j];
            if (dth <= 1e-13) continue;
            const double mid = 0.5 * (grid[j] + grid[j + 1]);
            const double rho = (1.0 - s) * rho_of(c0, mid) + s * rho_of(c1, mid);
            cs.segs.push_back({1.0 / rho, rho * dth});
        }
        TraceStep step;
        step.s = s;
        step.profile = turning_profile(cs);
        step.length = cs.length();
        step.curve = std::move(cs);
        tr.steps.push_back(std::move(step));
    }
    return tr;
}

// ---------------------------------------------------------------------------
// Is a curve in the same component as its eight-attached version?

/// For kappa1*kappa2 < 0 only: after canonicalization, the eight-attached
/// curve is separated exactly when the space is disconnected and c is
/// condensed.
[[nodiscard]] inline bool eight_same_component(const PiecewiseCurve& c, const Bounds& b,
                                               BoundVariant variant) {
    validate(c);
    if (b.sign_class() >= 0 && !b.unconstrained()) {
        throw NotApplicable("the eight needs both curvature signs");
    }
    if (b.unconstrained()) return true;
    const auto tp = turning_profile(c);
    if (tp.cls == CurveClass::diffuse) return true;
    if (std::abs(tp.theta1) >= kPi) return true;
    const Complex qh = q_hat(c.start, end_frame(c), b);
    if (!disconnection_test(qh, tp.theta1, variant)) return true;
    return false;  // disconnected and c is not diffuse: the eight separates it
}

}  // namespace curvspace
