#pragma once

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "curvspace/verify.hpp"

namespace curvspace::verify {

// ---------------------------------------------------------------------------
// Acceptance criteria. Each returns one Check; run_acceptance gathers all.

[[nodiscard]] inline Check criterion_dubins_threshold() {
    Check ch{"1 Dubins threshold: two components iff x <= 4 (x=4 inside, open variant)",
             true, 0, 0, ""};
    for (double x : {0.5, 1.0, 2.0, 3.0, 3.999, 4.0}) {
        const auto rep = component_count(Frame{}, Frame(Complex(x, 0.0), Complex(1.0, 0.0)),
                                         Bounds(-1.0, 1.0), 0.0);
        if (rep.count != ComponentCount::two) {
            ch.pass = false;
            ch.note += " x=" + std::to_string(x) + " not 2;";
        }
    }
    for (double x : {4.001, 5.0, 10.0}) {
        const auto rep = component_count(Frame{}, Frame(Complex(x, 0.0), Complex(1.0, 0.0)),
                                         Bounds(-1.0, 1.0), 0.0);
        if (rep.count != ComponentCount::one) {
            ch.pass = false;
            ch.note += " x=" + std::to_string(x) + " not 1;";
        }
    }
    return ch;
}

[[nodiscard]] inline Check criterion_open_closed_flip() {
    Check ch{"2 open/closed flip at the radius-4 and radius-2 arcs", true, 0, 0, ""};
    const bool a = disconnection_test(Complex(4.0, 0.0), 0.0, BoundVariant::open);
    const bool b = disconnection_test(Complex(4.0, 0.0), 0.0, BoundVariant::closed);
    const bool c = disconnection_test(Complex(2.0, 2.0), 0.0, BoundVariant::open);
    const bool d = disconnection_test(Complex(2.0, 2.0), 0.0, BoundVariant::closed);
    ch.pass = a && !b && !c && d;
    ch.note = std::string("q=4: open=") + (a ? "true" : "false") + " closed=" +
              (b ? "true" : "false") + "; q=2+2i: open=" + (c ? "true" : "false") +
              " closed=" + (d ? "true" : "false");
    return ch;
}

[[nodiscard]] inline Check criterion_normal_translation(std::uint64_t seed) {
    const auto checks = suite_normalize(seed, 1000);
    Check ch{"3 normal translation laws over 1000 random (curve, u)", true, 0, 1e-9, ""};
    for (const auto& c : checks) {
        ch.pass = ch.pass && c.pass;
        ch.measured = std::max(ch.measured, c.measured);
        if (!c.pass) ch.note += " " + c.name + ";";
    }
    return ch;
}

[[nodiscard]] inline Check criterion_excavator_vs_oracle(std::uint64_t seed) {
    Check ch{"4 excavator minimal path vs CSC oracle (200 random Q)", true, 0, 1e-6, ""};
    Rng rng(seed);
    double worst_len = 0.0, worst_end = 0.0, worst_mono = 0.0, worst_area = 0.0;
    for (int i = 0; i < 200; ++i) {
        const auto w = detail::random_condensed(rng);
        const Frame Q = end_frame(w);
        const auto mincurve = dubins_condensed(Q, 1.0);
        const auto oracle = dubins_csc_oracle(Q, 1.0);
        worst_len = std::max(worst_len, std::abs(mincurve.length() - oracle.length));
        const auto tr = excavator_trace(w, 1.0, 16);  // default 4096-point grid
        worst_end = std::max(worst_end, std::abs(tr.sampled_curve(0).back() - Q.p));
        for (std::size_t j = 0; j + 1 < tr.steps.size(); ++j) {
            worst_mono = std::max(worst_mono, tr.steps[j].omega - tr.steps[j + 1].omega);
            worst_mono = std::max(worst_mono, tr.steps[j].length - tr.steps[j + 1].length);
        }
        for (const auto& st : tr.steps) {
            worst_area = std::max(worst_area,
                                  std::abs(st.area - tr.area) / (1.0 + std::abs(tr.area)));
        }
    }
    ch.pass = worst_len <= 1e-6 && worst_end <= 1e-4 && worst_mono <= 1e-12 && worst_area <= 1e-8;
    ch.measured = worst_len;
    ch.note = "len " + std::to_string(worst_len) + ", s0 endpoint " + std::to_string(worst_end) +
              ", monotone slack " + std::to_string(worst_mono) + ", area " +
              std::to_string(worst_area);
    return ch;
}

[[nodiscard]] inline Check criterion_spread_decay() {
    Check ch{"5 spread-curvature 1/n decay on segment(10)", true, 0, 0.6, ""};
    const auto c = line_segment(10.0);
    std::vector<double> devs;
    for (int n : {25, 50, 100, 200}) devs.push_back(spread_eights(c, n, 0.02).sup_abs_dev);
    for (std::size_t j = 0; j + 1 < devs.size(); ++j) {
        const double ratio = devs[j + 1] / devs[j];
        ch.measured = std::max(ch.measured, ratio);
        if (!(devs[j + 1] < devs[j]) || ratio < 0.4 || ratio > 0.6) ch.pass = false;
        ch.note += (j ? ", " : "") + std::to_string(ratio);
    }
    ch.note = "ratios " + ch.note;
    return ch;
}

[[nodiscard]] inline Check criterion_region_soundness(std::uint64_t seed) {
    const auto checks = suite_regions(seed, 10000, 1000);
    Check ch{"6 region soundness (1e4 condensed, 1e3 critical, extremal grid)", true, 0, 0, ""};
    for (const auto& c : checks) {
        if (c.name.rfind("R_sigma", 0) == 0 || c.name.rfind("amplitude", 0) == 0) continue;
        ch.pass = ch.pass && c.pass;
        if (!c.pass) ch.note += " " + c.name + ";";
    }
    return ch;
}

[[nodiscard]] inline Check criterion_normalization(std::uint64_t seed) {
    const auto checks = suite_canonicalize(seed, 500);
    Check ch{"7 normalization coherence over 500 random (P,Q,bounds)", true, 0, 1e-9, ""};
    for (const auto& c : checks) {
        ch.pass = ch.pass && c.pass;
        ch.measured = std::max(ch.measured, c.measured);
        if (!c.pass) ch.note += " " + c.name + ";";
    }
    return ch;
}

[[nodiscard]] inline Check criterion_amplitude_circle(std::uint64_t seed) {
    Check ch{"8 amplitude-circle exclusion (grid + 1e4 random curves)", true, 0, 0, ""};
    for (double theta1 : {0.0, kPi / 4, -kPi / 4, kPi / 2, -kPi / 2}) {
        for (int gx = 0; gx < 100; ++gx) {
            for (int gy = 0; gy < 100; ++gy) {
                const Complex q(-12.0 + 24.0 * gx / 99.0, -12.0 + 24.0 * gy / 99.0);
                if (amplitude_circle_test(q, theta1, kPi) &&
                    any_critical_contains(q, theta1).status != RegionStatus::outside) {
                    ch.pass = false;
                }
            }
        }
    }
    Rng rng(seed);
    int tested = 0;
    for (int i = 0; i < 10000; ++i) {
        const auto c = random_curve(-1.0, 1.0, 1 + static_cast<int>(rng() % 6),
                                    0.3 + detail::urand(rng, 0.0, 1.2), rng());
        const auto tp = turning_profile(c);
        if (tp.omega > kPi || std::abs(tp.theta1) > kPi) continue;
        const double omega = tp.omega - 1e-3;
        if (omega < std::abs(tp.theta1)) continue;
        ++tested;
        if (amplitude_circle_test(end_frame(c).p, tp.theta1, omega)) ch.pass = false;
    }
    ch.measured = tested;
    ch.note = std::to_string(tested) + " curves inside the omega window";
    return ch;
}

[[nodiscard]] inline Check criterion_flat_surfaces() {
    Check ch{"9 flat-surface decomposition (cylinder lifts, torus lattice)", true, 0, 0, ""};
    const auto cyl = SurfaceModel::cylinder(Complex(3.0, 0.0));
    const auto lifts = surface_components(cyl, Frame{}, Frame{}, Bounds(-1, 1), 0.0, 10.0);
    bool saw3 = false, saw6 = false;
    for (const auto& l : lifts) {
        if (std::abs(l.lift.p - Complex(3.0, 0.0)) < 1e-9) {
            saw3 = true;
            if (l.report.count != ComponentCount::two) ch.pass = false;
        }
        if (std::abs(l.lift.p - Complex(6.0, 0.0)) < 1e-9) {
            saw6 = true;
            if (l.report.count != ComponentCount::one) ch.pass = false;
        }
    }
    if (!saw3 || !saw6) ch.pass = false;

    const auto tor = SurfaceModel::torus(Complex(4.0, 0.0), Complex(0.0, 4.0));
    const auto tl = surface_components(tor, Frame{}, Frame{}, Bounds(-1, 1), 0.0, 10.0);
    std::size_t direct = 0;
    for (int k = -4; k <= 4; ++k) {
        for (int l = -4; l <= 4; ++l) {
            if (std::abs(Complex(4.0 * k, 4.0 * l)) <= 10.0) ++direct;
        }
    }
    ch.measured = static_cast<double>(tl.size());
    ch.bound = static_cast<double>(direct);
    if (tl.size() != direct) ch.pass = false;
    ch.note = "torus lifts " + std::to_string(tl.size()) + " vs lattice " + std::to_string(direct);
    return ch;
}

namespace detail {

/// Condensed curves to (3, 0) with heading 0 at both ends, sampled as smooth
/// slope functions with exactly zero net area.
struct SlopeSample {
    double length{0.0};
    double omega{0.0};
};

[[nodiscard]] inline SlopeSample sample_slope_curve(Rng& rng, double b) {
    constexpr int kModes = 6;
    constexpr int kGrid = 400;
    std::array<double, kModes> a{};
    for (;;) {
        double slope_sum = 0.0;
        for (int k = 0; k < kModes; ++k) {
            a[static_cast<std::size_t>(k)] = urand(rng, -1.0, 1.0) / ((k + 1.0) * (k + 1.0));
            slope_sum += std::abs(a[static_cast<std::size_t>(k)]) * (k + 1.0) * kPi / b;
        }
        const double scale = 0.9 / std::max(1.0, slope_sum);
        for (auto& v : a) v *= scale;
        // Zero the area using the first odd mode.
        double area = 0.0;
        for (int k = 2; k < kModes; k += 2) {  // odd modes are k+1 = 3, 5, ...
            area += a[static_cast<std::size_t>(k)] * 2.0 * b / ((k + 1.0) * kPi);
        }
        a[0] = -area / (2.0 * b / kPi);
        double worst_slope = 0.0;
        for (int j = 0; j <= kGrid; ++j) {
            const double x = b * j / kGrid;
            double fp = 0.0;
            for (int k = 0; k < kModes; ++k) {
                fp += a[static_cast<std::size_t>(k)] * (k + 1.0) * kPi / b *
                      std::cos((k + 1.0) * kPi * x / b);
            }
            worst_slope = std::max(worst_slope, std::abs(fp));
        }
        if (worst_slope > 0.98) continue;  // curvature bound must stay strict

        SlopeSample s;
        double fmin = 0.0, fmax = 0.0, len = 0.0, prev = 1.0;
        for (int j = 0; j <= kGrid; ++j) {
            const double x = b * j / kGrid;
            double f = 0.0;
            for (int k = 0; k < kModes; ++k) {
                f += a[static_cast<std::size_t>(k)] * std::sin((k + 1.0) * kPi * x / b);
            }
            fmin = std::min(fmin, std::atan(f));
            fmax = std::max(fmax, std::atan(f));
            const double cur = std::sqrt(1.0 + f * f);
            if (j > 0) len += 0.5 * (prev + cur) * (b / kGrid);
            prev = cur;
        }
        s.length = len;
        s.omega = fmax - fmin;
        return s;
    }
}

}  // namespace detail

[[nodiscard]] inline Check criterion_length_experiment(std::uint64_t seed) {
    Check ch{"10 length-bound experiment at (q=3, theta1=0)", true, 0, 0, ""};
    Rng rng(seed);
    const double b = 3.0;
    double max_len = 0.0, min_len = 1e18, omega_hat = 0.0;
    for (int i = 0; i < 10000; ++i) {
        const auto s = detail::sample_slope_curve(rng, b);
        max_len = std::max(max_len, s.length);
        min_len = std::min(min_len, s.length);
        omega_hat = std::max(omega_hat, s.omega);
    }
    const double sec_bound = b / std::cos(omega_hat / 2.0);
    ch.measured = max_len;
    ch.bound = sec_bound;
    if (!(max_len < sec_bound + 1e-9)) ch.pass = false;
    // Diffuse companions: the same curves with one eight attached.
    const double eight_len = eight_curve(1).length();
    const double min_diffuse = min_len + eight_len;
    const bool gap = max_len < min_diffuse;
    ch.note = "max condensed " + std::to_string(max_len) + " < sec bound " +
              std::to_string(sec_bound) + "; min diffuse " + std::to_string(min_diffuse) +
              (gap ? "; m<M gap holds (conjecture, logged)" : "; m<M GAP FAILED (logged only)");
    return ch;
}

[[nodiscard]] inline std::vector<Check> run_acceptance(std::uint64_t seed = 2026) {
    std::vector<Check> out;
    out.push_back(criterion_dubins_threshold());
    out.push_back(criterion_open_closed_flip());
    out.push_back(criterion_normal_translation(seed + 3));
    out.push_back(criterion_excavator_vs_oracle(seed + 4));
    out.push_back(criterion_spread_decay());
    out.push_back(criterion_region_soundness(seed + 6));
    out.push_back(criterion_normalization(seed + 7));
    out.push_back(criterion_amplitude_circle(seed + 8));
    out.push_back(criterion_flat_surfaces());
    out.push_back(criterion_length_experiment(seed + 10));
    return out;
}

// ---------------------------------------------------------------------------
// Suite registry for the CLI

[[nodiscard]] inline std::vector<std::string> suite_names() {
    return {"geom", "curve", "normalize", "regions", "dubins", "deform",
            "components", "io", "acceptance", "all"};
}

[[nodiscard]] inline std::vector<Check> run_suite(const std::string& name,
                                                  std::uint64_t seed = 2026) {
    if (name == "geom") return suite_geom(seed);
    if (name == "curve") return suite_curve(seed);
    if (name == "normalize") {
        auto a = suite_normalize(seed);
        const auto b = suite_canonicalize(seed);
        a.insert(a.end(), b.begin(), b.end());
        return a;
    }
    if (name == "regions") return suite_regions(seed);
    if (name == "dubins") return suite_dubins(seed);
    if (name == "deform") return suite_deform(seed);
    if (name == "components") return suite_components(seed);
    if (name == "io") return suite_io(seed);
    if (name == "acceptance") return run_acceptance(seed);
    if (name == "all") {
        std::vector<Check> out;
        for (const auto& s : {"geom", "curve", "normalize", "regions", "dubins", "deform",
                              "components", "io"}) {
            const auto r = run_suite(s, seed);
            out.insert(out.end(), r.begin(), r.end());
        }
        return out;
    }
    throw ParameterOutOfRange("unknown verify suite: " + name);
}

}  // namespace curvspace::verify
