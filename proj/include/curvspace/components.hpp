#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "curvspace/curve.hpp"
#include "curvspace/deform.hpp"
#include "curvspace/errors.hpp"
#include "curvspace/geom.hpp"
#include "curvspace/normalize.hpp"
#include "curvspace/regions.hpp"

namespace curvspace {

// ---------------------------------------------------------------------------
// Component counting for a single (P, Q, bounds, theta1)

enum class CountMode { per_turning, fixed_turning };
enum class ComponentCount { zero, one, two, unknown };

[[nodiscard]] inline const char* to_string(ComponentCount c) {
    switch (c) {
        case ComponentCount::zero: return "0";
        case ComponentCount::one: return "1";
        case ComponentCount::two: return "2";
        default: return "unknown";
    }
}

struct ComponentReport {
    CountMode mode{CountMode::fixed_turning};
    ComponentCount count{ComponentCount::one};
    std::vector<std::string> labels;   // condensed_component / diffuse_component / single
    NormalizationRecord canonical;
    Complex q_hat{0.0, 0.0};           // defined for kappa1*kappa2 < 0
    bool boundary_turning{false};      // |theta1| = pi decided by the text's remark
    std::optional<PiecewiseCurve> witness;
};

namespace detail {

/// Bounded constructive witness search in a canonical space: a curve with
/// kappa in (k_lo, k_hi), positive total turning theta1, from O to Q0, found
/// as a piecewise choice of the radius function against the tangent argument.
[[nodiscard]] inline std::optional<PiecewiseCurve> convex_witness(const Frame& Q0, double theta1,
                                                                  double rho_cap) {
    if (!(theta1 > 1e-12)) return std::nullopt;
    const double rho_min_margin = 1e-6;
    for (int cells : {8, 16, 32, 64}) {
        // q0 = sum rho_j * v_j with v_j the integral of e^{i theta} per cell.
        std::vector<Complex> v(static_cast<std::size_t>(cells));
        for (int j = 0; j < cells; ++j) {
            const double t0 = theta1 * j / cells, t1 = theta1 * (j + 1) / cells;
            v[static_cast<std::size_t>(j)] =
                (unit_dir(t1) - unit_dir(t0)) / Complex(0.0, 1.0);
        }
        const double lo = rho_min_margin, hi = rho_cap;
        std::vector<double> rho(static_cast<std::size_t>(cells), 0.5 * (lo + hi));
        // Project onto the two linear constraints, then clip; a few sweeps
        // settle or fail.
        for (int it = 0; it < 200; ++it) {
            Complex resid = -Q0.p;
            for (int j = 0; j < cells; ++j) resid += rho[static_cast<std::size_t>(j)] * v[static_cast<std::size_t>(j)];
            if (std::abs(resid) < 1e-11) {
                PiecewiseCurve w;
                for (int j = 0; j < cells; ++j) {
                    const double dth = theta1 / cells;
                    w.segs.push_back({1.0 / rho[static_cast<std::size_t>(j)],
                                      rho[static_cast<std::size_t>(j)] * dth});
                }
                if (frames_close(end_frame(w), Q0, 1e-9)) return w;
                return std::nullopt;
            }
            // Least-squares step of the underdetermined 2 x cells system.
            double vv = 0.0;
            for (const auto& vj : v) vv += std::norm(vj);
            for (int j = 0; j < cells; ++j) {
                const Complex vj = v[static_cast<std::size_t>(j)];
                const double step = -(resid.real() * vj.real() + resid.imag() * vj.imag()) / vv;
                rho[static_cast<std::size_t>(j)] =
                    std::clamp(rho[static_cast<std::size_t>(j)] + step, lo, hi);
            }
        }
    }
    return std::nullopt;
}

}  // namespace detail

/// Component structure of the curves from P to Q with the given curvature
/// bounds and total turning.
[[nodiscard]] inline ComponentReport component_count(const Frame& P, const Frame& Q,
                                                     const Bounds& b, double theta1) {
    if (std::abs(Q.w * std::conj(P.w) - unit_dir(theta1)) > 1e-9) {
        throw TurningIncompatible("e^{i theta1} must equal z * conj(w)");
    }
    ComponentReport rep;
    rep.canonical = canonicalize(P, Q, b);

    if (b.unconstrained()) {
        rep.mode = CountMode::per_turning;
        rep.count = ComponentCount::one;
        rep.labels = {"single"};
        return rep;
    }

    if (b.sign_class() < 0) {
        rep.mode = CountMode::fixed_turning;
        rep.q_hat = q_hat(P, Q, b);
        if (std::abs(theta1) >= kPi - kClassTol) {
            rep.count = ComponentCount::one;
            rep.labels = {"single"};
            rep.boundary_turning = std::abs(std::abs(theta1) - kPi) <= kClassTol;
            return rep;
        }
        if (disconnection_test(rep.q_hat, theta1, BoundVariant::open)) {
            rep.count = ComponentCount::two;
            rep.labels = {"condensed_component", "diffuse_component"};
        } else {
            rep.count = ComponentCount::one;
            rep.labels = {"single"};
        }
        return rep;
    }

    // kappa1*kappa2 >= 0: locally convex. One contractible component per
    // realizable turning; realizability beyond the sign test is answered by a
    // bounded constructive search, otherwise reported unknown.
    rep.mode = CountMode::per_turning;
    const double t_canon = rep.canonical.turning_sign * theta1;
    if (t_canon <= kClassTol) {  // canonical bounds force positive turning
        rep.count = ComponentCount::zero;
        return rep;
    }
    const double rho_cap = rep.canonical.canonical_type == CanonicalType::one_inf
                               ? 1.0 - 1e-9
                               : 10.0 * (1.0 + std::abs(rep.canonical.Q0.p)) + 10.0;
    const auto witness = detail::convex_witness(rep.canonical.Q0, t_canon, rho_cap);
    if (witness) {
        rep.count = ComponentCount::one;
        rep.labels = {"single"};
        rep.witness = witness;
    } else {
        rep.count = ComponentCount::unknown;
    }
    return rep;
}

/// Are two curves with the same endpoints homotopic within the bounds?
[[nodiscard]] inline bool same_component(const PiecewiseCurve& c1, const PiecewiseCurve& c2,
                                         const Bounds& b) {
    validate(c1);
    validate(c2);
    if (!b.unconstrained()) {
        if (!in_bounds(c1, b.kappa1, b.kappa2, BoundVariant::open) ||
            !in_bounds(c2, b.kappa1, b.kappa2, BoundVariant::open)) {
            throw OutOfBounds("curves must respect the open bounds");
        }
    }
    if (!frames_close(c1.start, c2.start, 1e-9) ||
        !frames_close(end_frame(c1), end_frame(c2), 1e-9)) {
        throw FrameMismatch("curves must share start and end frames");
    }
    const auto tp1 = turning_profile(c1);
    const auto tp2 = turning_profile(c2);
    if (std::abs(tp1.theta1 - tp2.theta1) > 1e-9) return false;
    if (b.sign_class() >= 0 || b.unconstrained()) return true;
    if (std::abs(tp1.theta1) >= kPi - kClassTol) return true;
    const Complex qh = q_hat(c1.start, end_frame(c1), b);
    if (!disconnection_test(qh, tp1.theta1, BoundVariant::open)) return true;
    return tp1.cls == tp2.cls;
}

// ---------------------------------------------------------------------------
// Complete flat surfaces as plane quotients

enum class SurfaceKind { plane, cylinder, torus, mobius, klein };

[[nodiscard]] inline const char* to_string(SurfaceKind k) {
    switch (k) {
        case SurfaceKind::plane: return "plane";
        case SurfaceKind::cylinder: return "cylinder";
        case SurfaceKind::torus: return "torus";
        case SurfaceKind::mobius: return "mobius";
        default: return "klein";
    }
}

/// Isometry of the plane: z -> p + w z, or z -> p + w conj(z) when
/// reflecting (a glide reflection for nonorientable quotients).
struct DeckElement {
    Frame motion{};
    bool reflect{false};

    [[nodiscard]] DeckElement compose(const DeckElement& other) const {
        DeckElement out;
        if (!reflect) {
            out.motion = frame_mul(motion, other.motion);
        } else {
            out.motion = Frame(motion.p + motion.w * std::conj(other.motion.p),
                               motion.w * std::conj(other.motion.w));
        }
        out.reflect = reflect != other.reflect;
        return out;
    }

    [[nodiscard]] DeckElement inverse() const {
        DeckElement out;
        out.reflect = reflect;
        if (!reflect) {
            out.motion = frame_inv(motion);
        } else {
            // Solve p + w conj(p') = 0 and w conj(w') = 1.
            out.motion = Frame(-motion.w * std::conj(motion.p), motion.w);
        }
        return out;
    }

    [[nodiscard]] Frame apply(const Frame& f) const {
        if (!reflect) return frame_mul(motion, f);
        return Frame(motion.p + motion.w * std::conj(f.p), motion.w * std::conj(f.w));
    }
};

struct SurfaceModel {
    SurfaceKind kind{SurfaceKind::plane};
    std::vector<DeckElement> generators;

    [[nodiscard]] static SurfaceModel plane() { return {SurfaceKind::plane, {}}; }
    [[nodiscard]] static SurfaceModel cylinder(Complex translation) {
        return {SurfaceKind::cylinder, {DeckElement{Frame(translation, Complex(1.0, 0.0)), false}}};
    }
    [[nodiscard]] static SurfaceModel torus(Complex t1, Complex t2) {
        return {SurfaceKind::torus,
                {DeckElement{Frame(t1, Complex(1.0, 0.0)), false},
                 DeckElement{Frame(t2, Complex(1.0, 0.0)), false}}};
    }
    [[nodiscard]] static SurfaceModel mobius(Complex glide) {
        return {SurfaceKind::mobius, {DeckElement{Frame(glide, Complex(1.0, 0.0)), true}}};
    }
    [[nodiscard]] static SurfaceModel klein(Complex glide, Complex translation) {
        return {SurfaceKind::klein,
                {DeckElement{Frame(glide, Complex(1.0, 0.0)), true},
                 DeckElement{Frame(translation, Complex(1.0, 0.0)), false}}};
    }

    [[nodiscard]] bool nonorientable() const {
        return std::any_of(generators.begin(), generators.end(),
                           [](const DeckElement& g) { return g.reflect; });
    }
};

struct LiftReport {
    Frame lift{};
    double theta1{0.0};
    bool reflected{false};
    ComponentReport report;
};

/// Deck-group orbit of the base lift with translation part within max_radius
/// of the base point, found by bounded BFS over the generators.
[[nodiscard]] inline std::vector<DeckElement> enumerate_deck(const SurfaceModel& S,
                                                             Complex base_point, Complex origin,
                                                             double max_radius) {
    std::vector<DeckElement> frontier{DeckElement{}};
    std::vector<DeckElement> seen{DeckElement{}};
    const auto key_equal = [](const DeckElement& a, const DeckElement& b) {
        return a.reflect == b.reflect && std::abs(a.motion.p - b.motion.p) < 1e-9 &&
               std::abs(a.motion.w - b.motion.w) < 1e-9;
    };
    const double slack = 2.0 * max_radius + 8.0;
    while (!frontier.empty()) {
        std::vector<DeckElement> next;
        for (const auto& g : frontier) {
            for (const auto& gen : S.generators) {
                for (const auto& step : {gen, gen.inverse()}) {
                    const DeckElement h = g.compose(step);
                    const Complex moved = h.reflect
                                              ? h.motion.p + h.motion.w * std::conj(base_point)
                                              : h.motion.p + h.motion.w * base_point;
                    if (std::abs(moved - origin) > slack) continue;
                    const bool known = std::any_of(seen.begin(), seen.end(), [&](const auto& s) {
                        return key_equal(s, h);
                    });
                    if (known) continue;
                    seen.push_back(h);
                    next.push_back(h);
                }
            }
        }
        frontier = std::move(next);
        if (seen.size() > 100000) break;  // defensive cap
    }
    return seen;
}

/// Decomposition of the curve space on a complete flat surface into plane
/// summands, one per lift of the target frame within max_radius.
[[nodiscard]] inline std::vector<LiftReport> surface_components(const SurfaceModel& S,
                                                                const Frame& u, const Frame& v,
                                                                const Bounds& b, double theta1,
                                                                double max_radius) {
    if (S.nonorientable() && b.kappa1 != -b.kappa2) {
        throw AsymmetricBoundsOnNonorientable("nonorientable surfaces need kappa1 = -kappa2");
    }
    std::vector<LiftReport> out;
    for (const auto& g : enumerate_deck(S, v.p, u.p, max_radius)) {
        const Frame lift = g.apply(v);
        if (std::abs(lift.p - u.p) > max_radius) continue;
        LiftReport lr;
        lr.lift = lift;
        lr.reflected = g.reflect;
        // Nearest compatible turning to the requested one.
        const double base = std::arg(lift.w * std::conj(u.w));
        lr.theta1 = theta1 + wrap_angle(base - theta1);
        lr.report = component_count(u, lift, b, lr.theta1);
        out.push_back(std::move(lr));
    }
    std::sort(out.begin(), out.end(), [](const LiftReport& a, const LiftReport& c) {
        const double ra = std::abs(a.lift.p), rc = std::abs(c.lift.p);
        if (ra != rc) return ra < rc;
        if (a.lift.p.real() != c.lift.p.real()) return a.lift.p.real() < c.lift.p.real();
        return a.lift.p.imag() < c.lift.p.imag();
    });
    return out;
}

}  // namespace curvspace
