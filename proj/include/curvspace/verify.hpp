#pragma once

#include <cmath>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "curvspace/components.hpp"
#include "curvspace/curve.hpp"
#include "curvspace/deform.hpp"
#include "curvspace/dubins.hpp"
#include "curvspace/geom.hpp"
#include "curvspace/io.hpp"
#include "curvspace/normalize.hpp"
#include "curvspace/regions.hpp"

namespace curvspace::verify {

struct Check {
    std::string name;
    bool pass{false};
    double measured{0.0};  // worst observed value
    double bound{0.0};     // what it must stay within (context-dependent sense)
    std::string note;
};

using Rng = std::mt19937_64;

namespace detail {

[[nodiscard]] inline double urand(Rng& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

[[nodiscard]] inline Frame random_frame(Rng& rng, double span = 4.0) {
    return Frame(Complex(urand(rng, -span, span), urand(rng, -span, span)),
                 unit_dir(urand(rng, -kPi, kPi)));
}

/// Random curve in (-1,1) from O; resamples until the class matches.
[[nodiscard]] inline PiecewiseCurve random_condensed(Rng& rng) {
    for (;;) {
        const auto c = random_curve(-1.0, 1.0, 1 + static_cast<int>(rng() % 6),
                                    0.2 + urand(rng, 0.0, 0.9), rng());
        if (classify(c) == CurveClass::condensed) return c;
    }
}

[[nodiscard]] inline PiecewiseCurve random_diffuse(Rng& rng) {
    for (;;) {
        const auto c = random_curve(-1.0, 1.0, 2 + static_cast<int>(rng() % 8),
                                    2.0 + urand(rng, 0.0, 6.0), rng());
        if (classify(c) == CurveClass::diffuse) return c;
    }
}

/// Critical curve built from an extremal family, optionally extended by a
/// direction-z tail and a paired graft; amplitude stays exactly pi.
[[nodiscard]] inline PiecewiseCurve random_critical(Rng& rng, double theta1) {
    static const char* strings[] = {"-+", "+-", "+-+", "-+-", "+-+-", "-+-+"};
    const SignString sigma(strings[rng() % 6]);
    const double mu = urand(rng, theta1 - kPi, 0.0);
    PiecewiseCurve c = extremal_curve(theta1, CriticalFamily{sigma, mu});
    if (rng() % 2) {  // tail in the final direction keeps the amplitude
        c.segs.push_back({0.0, urand(rng, 0.1, 3.0)});
    }
    if (rng() % 2) {  // paired graft at the extreme headings
        const auto tp = turning_profile(c);
        double s_top = -1.0, s_bot = -1.0, acc = 0.0, th = 0.0;
        for (const auto& seg : c.segs) {
            const double next = th + seg.kappa * seg.len;
            if (s_top < 0.0 && std::max(th, next) >= tp.theta_plus - 1e-12) {
                s_top = acc + (seg.kappa > 0 ? seg.len : 0.0);
            }
            if (s_bot < 0.0 && std::min(th, next) <= tp.theta_minus + 1e-12) {
                s_bot = acc + (seg.kappa < 0 ? seg.len : 0.0);
            }
            th = next;
            acc += seg.len;
        }
        if (s_top >= 0.0 && s_bot >= 0.0 && std::abs(s_top - s_bot) > 1e-9) {
            const double sigma_len = urand(rng, 0.1, 2.0);
            c = graft(c, {{s_top, sigma_len}, {s_bot, sigma_len}}, {1, 0});
        }
    }
    return c;
}

inline void record(std::vector<Check>& out, const std::string& name, bool pass, double measured,
                   double bound, const std::string& note = "") {
    out.push_back({name, pass, measured, bound, note});
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Module invariant suites

[[nodiscard]] inline std::vector<Check> suite_geom(std::uint64_t seed = 1) {
    using namespace detail;
    std::vector<Check> out;
    Rng rng(seed);
    double worst_assoc = 0.0, worst_norm = 0.0, worst_hom = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const Frame f = random_frame(rng), g = random_frame(rng), h = random_frame(rng);
        const Frame lhs = frame_mul(frame_mul(f, g), h);
        const Frame rhs = frame_mul(f, frame_mul(g, h));
        worst_assoc = std::max(worst_assoc, frame_distance(lhs, rhs));
        worst_norm = std::max(worst_norm, std::abs(std::abs(lhs.w) - 1.0));
        const Complex a(urand(rng, -3, 3), urand(rng, -3, 3));
        worst_hom = std::max(worst_hom, std::abs(frame_apply(frame_mul(f, g), a) -
                                                 frame_apply(f, frame_apply(g, a))));
    }
    record(out, "frame associativity (1000 random triples)", worst_assoc <= 1e-10, worst_assoc,
           1e-10);
    record(out, "unit-norm preservation", worst_norm <= 1e-12, worst_norm, 1e-12);
    record(out, "apply is a group action", worst_hom <= 1e-10, worst_hom, 1e-10);
    double worst_inv = 0.0;
    for (int i = 0; i < 200; ++i) {
        const Frame f = random_frame(rng);
        worst_inv = std::max(worst_inv, frame_distance(frame_mul(f, frame_inv(f)), Frame{}));
    }
    record(out, "inverse axiom", worst_inv <= 1e-12, worst_inv, 1e-12);
    return out;
}

[[nodiscard]] inline std::vector<Check> suite_curve(std::uint64_t seed = 2) {
    using namespace detail;
    std::vector<Check> out;
    Rng rng(seed);
    double worst_fact = 0.0, worst_add = 0.0, worst_inv = 0.0, worst_rev = 0.0;
    for (int i = 0; i < 1000; ++i) {
        auto c = random_curve(-2.0, 2.0, 1 + static_cast<int>(rng() % 6), 1.5, rng());
        const Frame F = random_frame(rng);
        c.start = Frame{};
        const Frame m = end_frame(c);
        c.start = F;
        worst_fact = std::max(worst_fact, frame_distance(end_frame(c), frame_mul(F, m)));

        auto c2 = random_curve(-2.0, 2.0, 1 + static_cast<int>(rng() % 4), 1.5, rng());
        c2.start = end_frame(c);
        const auto cat = concat(c, c2);
        worst_add = std::max(worst_add, std::abs(cat.total_turning() - c.total_turning() -
                                                 c2.total_turning()));

        const auto tp = turning_profile(c);
        PiecewiseCurve based = c;
        based.start = Frame{};
        const auto tp0 = turning_profile(based);
        worst_inv = std::max({worst_inv, std::abs(tp.theta1 - tp0.theta1),
                              std::abs(tp.omega - tp0.omega)});

        const auto r = reverse(c);
        worst_rev = std::max(worst_rev, std::abs(turning_profile(r).theta1 + tp.theta1));
        worst_rev = std::max(worst_rev, frame_distance(end_frame(r), Frame(c.start.p, -c.start.w)));
    }
    record(out, "end-frame factorization (1000 random)", worst_fact <= 1e-10, worst_fact, 1e-10);
    record(out, "turning additivity", worst_add <= 1e-12, worst_add, 1e-12);
    record(out, "Euclidean invariance of profile", worst_inv <= 1e-12, worst_inv, 1e-12);
    record(out, "reversal laws", worst_rev <= 1e-9, worst_rev, 1e-9);

    // Finite-difference curvature of samples against the segment curvature.
    double worst_fd = 0.0;
    const auto circ = arc(1.0, 2.0 * kPi);
    const auto pts = sample_points(circ, 0.01);
    for (std::size_t j = 1; j + 1 < pts.size(); ++j) {
        const Complex p1 = pts[j - 1].pos, p2 = pts[j].pos, p3 = pts[j + 1].pos;
        const double a = std::abs(p2 - p1), b = std::abs(p3 - p2), cc = std::abs(p3 - p1);
        const double kappa = 2.0 * cross(p2 - p1, p3 - p2) / (a * b * cc);
        worst_fd = std::max(worst_fd, std::abs(kappa - 1.0));
    }
    record(out, "sampled circle FD curvature", worst_fd <= 1e-3, worst_fd, 1e-3);
    return out;
}

[[nodiscard]] inline std::vector<Check> suite_normalize(std::uint64_t seed = 3,
                                                        int n_samples = 1000) {
    using namespace detail;
    std::vector<Check> out;
    Rng rng(seed);
    double worst_rho = 0.0, worst_end = 0.0, worst_turn = 0.0, worst_round = 0.0,
           worst_theta = 0.0;
    for (int i = 0; i < n_samples; ++i) {
        const double k1 = urand(rng, -3.0, -0.2), k2 = urand(rng, 0.2, 3.0);
        const Bounds b(k1, k2);
        auto c = random_curve(k1, k2, 1 + static_cast<int>(rng() % 5), 1.0, rng());
        c.start = random_frame(rng);
        const auto J = admissible_u_interval(b);
        const double u = urand(rng, std::max(J.lo, -4.0), std::min(J.hi, 4.0));
        const auto t = normal_translate(c, u);
        // rho-bar = rho - u, checked through the reciprocal route.
        for (std::size_t k = 0; k < c.segs.size(); ++k) {
            if (std::abs(c.segs[k].kappa) < 1e-6) continue;
            const double rho_bar = 1.0 / t.segs[k].kappa;
            worst_rho = std::max(worst_rho, std::abs(rho_bar - (1.0 / c.segs[k].kappa - u)) /
                                                std::max(1.0, std::abs(rho_bar)));
        }
        const Frame q = end_frame(c);
        const Frame expect(q.p + Complex(0.0, 1.0) * u * q.w, q.w);
        worst_end = std::max(worst_end, frame_distance(end_frame(t), expect));
        worst_turn = std::max(worst_turn, std::abs(t.total_turning() - c.total_turning()));
        const auto back = normal_translate(t, -u);
        worst_round = std::max(worst_round, frame_distance(end_frame(back), q));
        worst_round = std::max(worst_round, frame_distance(back.start, c.start));
        // Headings at breakpoints are untouched.
        double th_c = 0.0, th_t = 0.0;
        for (std::size_t k = 0; k < c.segs.size(); ++k) {
            th_c += c.segs[k].kappa * c.segs[k].len;
            th_t += t.segs[k].kappa * t.segs[k].len;
            worst_theta = std::max(worst_theta, std::abs(th_c - th_t));
        }
    }
    record(out, "curvature law rho-u (relative)", worst_rho <= 1e-12, worst_rho, 1e-12);
    record(out, "endpoint law (q+iuz, z)", worst_end <= 1e-9, worst_end, 1e-9);
    record(out, "turning preserved", worst_turn <= 1e-12, worst_turn, 1e-12);
    record(out, "round trip", worst_round <= 1e-9, worst_round, 1e-9);
    record(out, "tangent preservation at breakpoints", worst_theta <= 1e-12, worst_theta, 1e-12);

    // Bound mapping onto the canonical interval.
    bool map_ok = true;
    for (int i = 0; i < 100; ++i) {
        const double k1 = urand(rng, -3.0, -0.2), k2 = urand(rng, 0.2, 3.0);
        const Bounds b(k1, k2);
        const double u = 0.5 * (b.rho1() + b.rho2());
        const double k0 = 2.0 / (b.rho2() - b.rho1());
        const double k = urand(rng, k1, k2);
        const double mapped = k / (1.0 - u * k) / k0;
        map_ok = map_ok && mapped > -1.0 - 1e-12 && mapped < 1.0 + 1e-12;
    }
    record(out, "bound mapping into (-1,1)", map_ok, map_ok ? 0.0 : 1.0, 0.0);
    return out;
}

namespace detail {

struct CanonicalCheck {
    double worst_end = 0.0;
    double worst_turning = 0.0;
    double worst_class = 0.0;
    bool bounds_ok = true;
    bool sign_ok = true;
};

inline void check_canonical_case(Rng& rng, const Bounds& b, CanonicalCheck& acc) {
    auto c = random_curve(b.kappa1, b.kappa2, 1 + static_cast<int>(rng() % 5), 1.0, rng());
    c.start = random_frame(rng);
    const Frame Q = end_frame(c);
    const auto rec = canonicalize(c.start, Q, b);
    const auto outc = transform_curve(c, rec);
    const auto cb = canonical_bounds(rec.canonical_type);
    acc.bounds_ok = acc.bounds_ok && in_bounds(outc, cb.kappa1, cb.kappa2, BoundVariant::open);
    acc.worst_end = std::max(acc.worst_end, frame_distance(outc.start, Frame{}));
    acc.worst_end = std::max(acc.worst_end, frame_distance(end_frame(outc), rec.Q0));
    const double t_in = c.total_turning(), t_out = outc.total_turning();
    acc.worst_turning = std::max(acc.worst_turning, std::abs(std::abs(t_out) - std::abs(t_in)));
    acc.sign_ok = acc.sign_ok && std::abs(t_out - rec.turning_sign * t_in) <= 1e-9;
    acc.worst_class = std::max(
        acc.worst_class,
        static_cast<double>(classify(outc) != classify(c)));
}

}  // namespace detail

[[nodiscard]] inline std::vector<Check> suite_canonicalize(std::uint64_t seed = 4,
                                                           int n_samples = 500) {
    using namespace detail;
    std::vector<Check> out;
    Rng rng(seed);
    const double inf = std::numeric_limits<double>::infinity();
    CanonicalCheck acc;
    for (int i = 0; i < n_samples; ++i) {
        Bounds b(-1.0, 1.0);
        switch (i % 9) {
            case 0: b = Bounds(urand(rng, -3, -0.2), urand(rng, 0.2, 3)); break;   // (a)
            case 1: b = Bounds(-inf, urand(rng, 0.2, 3)); break;                   // (a)
            case 2: b = Bounds(urand(rng, -3, -0.2), inf); break;                  // (a)
            case 3: {                                                              // (b)
                const double k1 = urand(rng, 0.2, 2.0);
                b = Bounds(k1, k1 + urand(rng, 0.2, 2.0));
                break;
            }
            case 4: b = Bounds(urand(rng, 0.2, 2.0), inf); break;                  // (b)
            case 5: b = Bounds(0.0, urand(rng, 0.3, 3.0)); break;                  // (c)
            case 6: {                                                              // (d)
                const double k2 = urand(rng, -2.0, -0.2);
                b = Bounds(k2 - urand(rng, 0.2, 2.0), k2);
                break;
            }
            case 7: b = Bounds(-inf, urand(rng, -2.0, -0.2)); break;               // (d)
            default: b = Bounds(urand(rng, -3.0, -0.3), 0.0); break;               // (e)
        }
        check_canonical_case(rng, b, acc);
    }
    record(out, "canonical bounds respected", acc.bounds_ok, acc.bounds_ok ? 0 : 1, 0);
    record(out, "canonical end frame at Q0 / start at O", acc.worst_end <= 1e-9, acc.worst_end,
           1e-9);
    record(out, "|turning| preserved", acc.worst_turning <= 1e-9, acc.worst_turning, 1e-9);
    record(out, "turning sign per case", acc.sign_ok, acc.sign_ok ? 0 : 1, 0);
    record(out, "class invariance", acc.worst_class == 0.0, acc.worst_class, 0);
    return out;
}

[[nodiscard]] inline std::vector<Check> suite_regions(std::uint64_t seed = 5, int n_condensed = 2000,
                                                      int n_critical = 500) {
    using namespace detail;
    std::vector<Check> out;
    Rng rng(seed);

    int bad = 0;
    double worst_margin = 0.0;
    for (int i = 0; i < n_condensed; ++i) {
        const auto c = random_condensed(rng);
        const auto tp = turning_profile(c);
        const Frame q = end_frame(c);
        const auto v = condensed_contains(q.p, tp.theta1);
        if (v.status == RegionStatus::outside) {
            ++bad;
            worst_margin = std::min(worst_margin, v.margin);
        }
    }
    record(out, "condensed endpoints in R_Uc", bad == 0, worst_margin, 0.0,
           std::to_string(n_condensed) + " samples");

    bad = 0;
    worst_margin = 0.0;
    for (int i = 0; i < n_critical; ++i) {
        const double theta1 = urand(rng, 0.0, kPi);
        const auto c = random_critical(rng, theta1);
        const Frame q = end_frame(c);
        const auto v = any_critical_contains(q.p, theta1);
        if (v.status == RegionStatus::outside) {
            ++bad;
            worst_margin = std::min(worst_margin, v.margin);
        }
    }
    record(out, "critical endpoints in R_T", bad == 0, worst_margin, 0.0,
           std::to_string(n_critical) + " samples");

    // Extremal families: formula endpoint = constructed curve endpoint, on circle.
    double worst_ext = 0.0, worst_circ = 0.0;
    for (int j = 0; j <= 99; ++j) {
        const double theta1 = kPi * 0.43;
        const Complex z = unit_dir(theta1);
        const double phi = theta1 + (kPi - theta1) * j / 99.0;
        const Frame e1 = extremal_boundary_point(theta1, CondensedPlus{phi});
        const Complex formula = Complex(0, 1) * (1.0 + z) - 2.0 * Complex(0, 1) * unit_dir(phi);
        worst_ext = std::max(worst_ext, std::abs(e1.p - formula));
        worst_circ = std::max(worst_circ,
                              std::abs(std::abs(e1.p - Complex(0, 1) * (1.0 + z)) - 2.0));
        const double mu = theta1 - kPi + (kPi - theta1) * j / 99.0;
        const Frame e2 = extremal_boundary_point(theta1, CriticalFamily{SignString("-+"), mu});
        const Complex f2 = Complex(0, 1) * (z - 1.0) + 4.0 * Complex(0, 1) * unit_dir(mu);
        worst_ext = std::max(worst_ext, std::abs(e2.p - f2));
        worst_circ = std::max(worst_circ,
                              std::abs(std::abs(e2.p - Complex(0, 1) * (z - 1.0)) - 4.0));
    }
    record(out, "extremal endpoints match formulas", worst_ext <= 1e-9, worst_ext, 1e-9);
    record(out, "extremal endpoints on bounding circles", worst_circ <= 1e-9, worst_circ, 1e-9);

    // Nesting R_sigma within R_T, and amplitude exclusion implies no critical.
    bool nest_ok = true, amp_ok = true;
    static const char* sigmas[] = {"-+", "+-+", "-+-+", "+-"};
    for (double theta1 : {0.0, kPi / 4, -kPi / 4, kPi / 2, -kPi / 2}) {
        for (int gx = 0; gx < 60; ++gx) {
            for (int gy = 0; gy < 60; ++gy) {
                const Complex q(-12.0 + 24.0 * gx / 59.0, -12.0 + 24.0 * gy / 59.0);
                const bool in_T = any_critical_contains(q, theta1).status == RegionStatus::inside;
                for (const char* s : sigmas) {
                    const SignString sig(s);
                    const bool matches_orientation =
                        (theta1 >= 0.0 && sig.first() == -1 && sig.size() % 2 == 0) ||
                        (theta1 <= 0.0 && sig.first() == +1 && sig.size() % 2 == 0) ||
                        sig.size() % 2 == 1;
                    if (!matches_orientation) continue;
                    if (critical_contains(q, theta1, sig).status == RegionStatus::inside && !in_T) {
                        nest_ok = false;
                    }
                }
                if (amplitude_circle_test(q, theta1, kPi) && in_T) amp_ok = false;
            }
        }
    }
    record(out, "R_sigma nested in R_T (grid)", nest_ok, nest_ok ? 0 : 1, 0);
    record(out, "amplitude-pi exclusion implies no critical", amp_ok, amp_ok ? 0 : 1, 0);

    // Region spec geometric coherence: tangency anchors sit on the circles.
    double worst_touch = 0.0;
    for (double theta1 : {0.0, 0.7, -1.2}) {
        const auto spec = condensed_region(theta1);
        for (const auto& hp : spec.half_planes) {
            double best = 1e9;
            for (const auto& a : spec.arcs) {
                best = std::min(best,
                                std::abs(std::abs(hp.anchor - a.circle.center) - a.circle.radius));
            }
            worst_touch = std::max(worst_touch, best);
        }
    }
    record(out, "tangent rays anchored on arcs", worst_touch <= 1e-9, worst_touch, 1e-9);
    return out;
}

[[nodiscard]] inline std::vector<Check> suite_dubins(std::uint64_t seed = 6, int n_samples = 50,
                                                     int grid_points = 1024) {
    using namespace detail;
    std::vector<Check> out;
    Rng rng(seed);
    double worst_len = 0.0, worst_mono = 0.0, worst_area = 0.0, worst_end = 0.0;
    for (int i = 0; i < n_samples; ++i) {
        const auto w = random_condensed(rng);
        const Frame Q = end_frame(w);
        const auto mincurve = dubins_condensed(Q, 1.0);
        const auto oracle = dubins_csc_oracle(Q, 1.0);
        worst_len = std::max(worst_len, std::abs(mincurve.length() - oracle.length));

        ExcavatorOptions opt;
        opt.grid_points = grid_points;
        const auto tr = excavator_trace(w, 1.0, 12, opt);
        for (std::size_t j = 0; j + 1 < tr.steps.size(); ++j) {
            worst_mono = std::max(worst_mono, tr.steps[j].omega - tr.steps[j + 1].omega);
            worst_mono = std::max(worst_mono, tr.steps[j].length - tr.steps[j + 1].length);
        }
        for (const auto& st : tr.steps) {
            worst_area = std::max(worst_area,
                                  std::abs(st.area - tr.area) / (1.0 + std::abs(tr.area)));
        }
        worst_end = std::max(worst_end, std::abs(tr.sampled_curve(0).back() - Q.p));
    }
    record(out, "minimal length agrees with CSC oracle", worst_len <= 1e-6, worst_len, 1e-6);
    record(out, "amplitude/length non-decreasing along traces", worst_mono <= 1e-12, worst_mono,
           1e-12);
    record(out, "area conservation (relative)", worst_area <= 1e-8, worst_area, 1e-8);
    record(out, "s=0 endpoint against Q", worst_end <= 1e-3, worst_end, 1e-3,
           "grid " + std::to_string(grid_points));
    return out;
}

[[nodiscard]] inline std::vector<Check> suite_deform(std::uint64_t seed = 7) {
    using namespace detail;
    std::vector<Check> out;
    Rng rng(seed);

    double worst_attach = 0.0;
    bool bounds_ok = true, turn_ok = true;
    for (int i = 0; i < 100; ++i) {
        const auto c = random_curve(-1.0, 1.0, 1 + static_cast<int>(rng() % 4), 1.0, rng());
        const int n = 1 + static_cast<int>(rng() % 3);
        const auto kind = rng() % 2 ? AttachKind::loop : AttachKind::eight;
        const auto a = attach_eight(c, n, 0.5, 0.125, kind);
        worst_attach = std::max(worst_attach, frame_distance(end_frame(a), end_frame(c)));
        bounds_ok = bounds_ok && in_bounds(a, -1.0, 1.0, BoundVariant::open);
        const double dt = a.total_turning() - c.total_turning();
        turn_ok = turn_ok && std::abs(dt - (kind == AttachKind::loop ? 2.0 * kPi * n : 0.0)) < 1e-12;
    }
    record(out, "attach preserves end frames", worst_attach <= 1e-9, worst_attach, 1e-9);
    record(out, "attach keeps (-1,1) bounds", bounds_ok, bounds_ok ? 0 : 1, 0);
    record(out, "attach turning increments", turn_ok, turn_ok ? 0 : 1, 0);

    const auto s25 = spread_eights(line_segment(10.0), 25, 0.02);
    const auto s50 = spread_eights(line_segment(10.0), 50, 0.02);
    const double ratio = s50.sup_abs_dev / s25.sup_abs_dev;
    record(out, "spread deviation halves from n=25 to 50", ratio >= 0.4 && ratio <= 0.6, ratio,
           0.5, "ratio in [0.4, 0.6]");

    double worst_graft = 0.0;
    for (int i = 0; i < 50; ++i) {
        const auto d = random_diffuse(rng);
        const auto pairs = find_antipodal_pairs(d);
        if (pairs.empty()) continue;
        const double len = urand(rng, 0.1, 2.0);
        const auto g = graft(d, {{pairs[0].first, len}, {pairs[0].second, len}}, {1, 0});
        worst_graft = std::max(worst_graft, frame_distance(end_frame(g), end_frame(d)));
        worst_graft = std::max(worst_graft, std::abs(g.length() - d.length() - 2.0 * len));
    }
    record(out, "graft preserves end frame and adds length", worst_graft <= 1e-9, worst_graft,
           1e-9);

    double worst_convex = 0.0;
    for (int i = 0; i < 25; ++i) {
        const double a = urand(rng, 0.4, 1.0), b = urand(rng, 1.0, 2.0);
        PiecewiseCurve c0;
        c0.segs = {{1.0, 2.0 * kPi}};
        PiecewiseCurve c1;
        c1.segs = {{1.0 / a, a * kPi / 2}, {1.0 / b, b * kPi / 2},
                   {1.0 / a, a * kPi / 2}, {1.0 / b, b * kPi / 2}};
        const auto tr = locally_convex_homotopy(c0, c1, 8);
        for (const auto& st : tr.steps) {
            worst_convex = std::max(worst_convex, frame_distance(end_frame(st.curve), Frame{}));
        }
    }
    record(out, "convex homotopy holds end frames", worst_convex <= 1e-8, worst_convex, 1e-8);
    return out;
}

[[nodiscard]] inline std::vector<Check> suite_components(std::uint64_t seed = 8,
                                                         int n_samples = 200) {
    using namespace detail;
    std::vector<Check> out;
    Rng rng(seed);

    bool consist = true;
    for (int i = 0; i < n_samples; ++i) {
        const double k1 = urand(rng, -3.0, -0.2), k2 = urand(rng, 0.2, 3.0);
        const Bounds b(k1, k2);
        auto c = random_curve(k1, k2, 1 + static_cast<int>(rng() % 5), 1.0, rng());
        c.start = random_frame(rng);
        const Frame Q = end_frame(c);
        const double theta1 = c.total_turning();
        const auto rep = component_count(c.start, Q, b, theta1);
        const bool disc = std::abs(theta1) < kPi &&
                          disconnection_test(q_hat(c.start, Q, b), theta1, BoundVariant::open);
        consist = consist && ((rep.count == ComponentCount::two) == disc);
    }
    record(out, "count=2 iff disconnection at q-hat", consist, consist ? 0 : 1, 0);

    bool equiv = true;
    for (int i = 0; i < 30; ++i) {
        const auto base = random_condensed(rng);
        const auto a = attach_eight(base, 1, 0.5, 0.125, AttachKind::eight);
        const auto b2 = attach_eight(base, 2, 0.25, 0.0625, AttachKind::eight);
        const Bounds bounds(-1.0, 1.0);
        equiv = equiv && same_component(base, base, bounds);
        equiv = equiv && (same_component(base, a, bounds) == same_component(a, base, bounds));
        if (same_component(base, a, bounds) && same_component(a, b2, bounds)) {
            equiv = equiv && same_component(base, b2, bounds);
        }
    }
    record(out, "same_component is an equivalence (spot check)", equiv, equiv ? 0 : 1, 0);

    // Base-lift invariance of the surface decomposition.
    const auto S = SurfaceModel::cylinder(Complex(3.0, 0.0));
    const auto l0 = surface_components(S, Frame{}, Frame{}, Bounds(-1, 1), 0.0, 12.0);
    const auto l1 = surface_components(S, Frame{}, Frame(Complex(3.0, 0.0), Complex(1.0, 0.0)),
                                       Bounds(-1, 1), 0.0, 12.0);
    bool lifts_ok = l0.size() == l1.size();
    if (lifts_ok) {
        for (std::size_t j = 0; j < l0.size(); ++j) {
            lifts_ok = lifts_ok && l0[j].report.count == l1[j].report.count;
        }
    }
    record(out, "surface reports invariant under base-lift change", lifts_ok, lifts_ok ? 0 : 1, 0);
    return out;
}

[[nodiscard]] inline std::vector<Check> suite_io(std::uint64_t seed = 9) {
    using namespace detail;
    std::vector<Check> out;
    Rng rng(seed);
    bool round_ok = true;
    for (int i = 0; i < 200; ++i) {
        auto c = random_curve(-2.0, 2.0, 1 + static_cast<int>(rng() % 5), 2.0, rng());
        c.start = random_frame(rng);
        const Json j1 = curve_to_json(c);
        const Json j2 = curve_to_json(curve_from_json(j1));
        round_ok = round_ok && j1 == j2;
    }
    record(out, "JSON round trip is bit-exact", round_ok, round_ok ? 0 : 1, 0);

    const auto polys = emit_region_boundary(condensed_region(0.0), 0.05);
    const auto svg = polylines_to_svg(polys);
    const bool svg_ok = svg.rfind("<?xml", 0) == 0 &&
                        svg.find("</svg>") != std::string::npos &&
                        std::count(svg.begin(), svg.end(), '<') ==
                            std::count(svg.begin(), svg.end(), '>');
    std::size_t paths = 0;
    for (std::size_t pos = svg.find("<path"); pos != std::string::npos;
         pos = svg.find("<path", pos + 1)) {
        ++paths;
    }
    record(out, "SVG well-formed with one path per polyline", svg_ok && paths == polys.size(),
           static_cast<double>(paths), static_cast<double>(polys.size()));
    return out;
}

}  // namespace curvspace::verify
