#pragma once

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "curvspace/acceptance.hpp"
#include "curvspace/io.hpp"

namespace curvspace::cli {

namespace detail {

[[nodiscard]] inline double parse_extended(const std::string& s) {
    if (s == "inf" || s == "+inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
    return std::stod(s);
}

[[nodiscard]] inline Complex parse_complex(const std::string& s) {
    const auto comma = s.find(',');
    if (comma == std::string::npos) return Complex(std::stod(s), 0.0);
    return Complex(std::stod(s.substr(0, comma)), std::stod(s.substr(comma + 1)));
}

[[nodiscard]] inline Frame parse_frame(const std::string& s) {
    std::stringstream ss(s);
    std::string part;
    std::vector<double> vals;
    while (std::getline(ss, part, ',')) vals.push_back(std::stod(part));
    if (vals.size() == 2) return Frame(Complex(vals[0], vals[1]), Complex(1.0, 0.0));
    if (vals.size() == 3) return Frame(Complex(vals[0], vals[1]), unit_dir(vals[2]));
    throw ParameterOutOfRange("frame must be 'x,y' or 'x,y,theta'");
}

[[nodiscard]] inline std::uint64_t default_seed() {
    if (const char* env = std::getenv("CURVSPACE_SEED")) {
        return static_cast<std::uint64_t>(std::strtoull(env, nullptr, 10));
    }
    return 2026;
}

inline void write_svg_file(const std::string& path,
                           const std::vector<std::vector<Complex>>& polys) {
    std::ofstream f(path);
    if (!f) throw ParameterOutOfRange("cannot open SVG output file: " + path);
    f << polylines_to_svg(polys);
}

}  // namespace detail

/// Run one CLI invocation. Writes a single JSON document to `out` on
/// success; a JSON error object goes to `err`. Exit codes: 0 ok, 1/3 check
/// or numeric failure, 2 usage.
inline int dispatch(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"curvature-constrained plane curve spaces: components, minimal paths, homotopies"};
    app.require_subcommand(1);

    std::string curve_json, curve2_json, q_str = "0", p_str, frame_u = "0,0,0", frame_v = "0,0,0";
    std::string which = "condensed", variant = "open", sigma_str, kind_str = "eight";
    std::string op, surface_kind = "cylinder", gen1 = "3,0", gen2, svg_path, suite = "all";
    std::string k1_str = "-1", k2_str = "1";
    double theta = 0.0, kappa0 = 1.0, omega = kPi, t0 = 0.5, eps = 0.125, ds = 0.05;
    double max_seg_len = 1.0, max_radius = 10.0, sigma_len = 1.0, s1 = -1.0, s2 = -1.0;
    int n = 1, steps = 16, grid = 4096, n_segs = 4;
    std::uint64_t seed = detail::default_seed();

    auto* c_classify = app.add_subcommand("classify", "turning profile and class of a curve");
    c_classify->add_option("--curve", curve_json, "curve JSON")->required();

    auto* c_end = app.add_subcommand("endframe", "final frame of a curve");
    c_end->add_option("--curve", curve_json, "curve JSON")->required();

    auto* c_comp = app.add_subcommand("components", "component count for (P, Q, bounds, theta1)");
    c_comp->add_option("--q", q_str, "target position 'x[,y]'")->required();
    c_comp->add_option("--theta", theta, "total turning")->required();
    c_comp->add_option("--k1", k1_str, "lower curvature bound (accepts -inf)");
    c_comp->add_option("--k2", k2_str, "upper curvature bound (accepts inf)");
    c_comp->add_option("--p", p_str, "start position 'x[,y[,heading]]'");

    auto* c_region = app.add_subcommand("region", "geometric region predicates");
    c_region->add_option("--q", q_str)->required();
    c_region->add_option("--theta", theta);
    c_region->add_option("--which", which, "condensed|critical|disconnection|amplitude");
    c_region->add_option("--sigma", sigma_str, "sign string for a specific R_sigma");
    c_region->add_option("--variant", variant, "open|closed");
    c_region->add_option("--omega", omega, "amplitude for the circle test");
    c_region->add_option("--svg", svg_path, "write the region boundary as SVG");
    c_region->add_option("--ds", ds);

    auto* c_dubins = app.add_subcommand("dubins", "minimal-length curve in the closed bounds");
    c_dubins->add_option("--q", q_str)->required();
    c_dubins->add_option("--theta", theta);
    c_dubins->add_option("--kappa0", kappa0);
    c_dubins->add_option("--svg", svg_path);

    auto* c_deform = app.add_subcommand("deform", "homotopy operators");
    c_deform->add_option("--op", op, "excavator|attach|spread|graft|convex")->required();
    c_deform->add_option("--curve", curve_json, "curve JSON")->required();
    c_deform->add_option("--curve2", curve2_json, "second curve (convex)");
    c_deform->add_option("--kind", kind_str, "loop|eight (attach)");
    c_deform->add_option("--n", n, "loop/eight count");
    c_deform->add_option("--t0", t0);
    c_deform->add_option("--eps", eps);
    c_deform->add_option("--kappa0", kappa0);
    c_deform->add_option("--steps", steps);
    c_deform->add_option("--grid", grid);
    c_deform->add_option("--ds", ds);
    c_deform->add_option("--s1", s1, "first graft point (arc length)");
    c_deform->add_option("--s2", s2, "second graft point");
    c_deform->add_option("--sigma-len", sigma_len, "grafted segment length");
    c_deform->add_option("--svg", svg_path);

    auto* c_surface = app.add_subcommand("surface", "flat-surface decomposition into lifts");
    c_surface->add_option("--kind", surface_kind, "plane|cylinder|torus|mobius|klein");
    c_surface->add_option("--gen", gen1, "generator translation/glide 'x,y'");
    c_surface->add_option("--gen2", gen2, "second generator 'x,y'");
    c_surface->add_option("--u", frame_u, "base frame 'x,y,theta'");
    c_surface->add_option("--v", frame_v, "target frame 'x,y,theta'");
    c_surface->add_option("--k1", k1_str);
    c_surface->add_option("--k2", k2_str);
    c_surface->add_option("--theta", theta);
    c_surface->add_option("--max-radius", max_radius);

    auto* c_random = app.add_subcommand("random", "seeded random curve inside open bounds");
    c_random->add_option("--k1", k1_str);
    c_random->add_option("--k2", k2_str);
    c_random->add_option("--n", n_segs, "segment count");
    c_random->add_option("--max-seg-len", max_seg_len);
    c_random->add_option("--seed", seed);

    auto* c_verify = app.add_subcommand("verify", "run a self-verification suite");
    c_verify->add_option("suite", suite, "geom|curve|normalize|regions|dubins|deform|components|io|acceptance|all");
    c_verify->add_option("--seed", seed);

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << Json{{"error", e.what()}}.dump(2) << "\n";
        return 2;
    }

    try {
        Json result;
        if (*c_classify) {
            result = profile_to_json(turning_profile(curve_from_json(Json::parse(curve_json))));
        } else if (*c_end) {
            result = frame_to_json(end_frame(curve_from_json(Json::parse(curve_json))));
        } else if (*c_comp) {
            const Bounds b(detail::parse_extended(k1_str), detail::parse_extended(k2_str));
            Frame P{};
            if (!p_str.empty()) P = detail::parse_frame(p_str + (p_str.find(',') == std::string::npos ? ",0" : ""));
            const Frame Q(detail::parse_complex(q_str), P.w * unit_dir(theta));
            result = report_to_json(component_count(P, Q, b, theta));
        } else if (*c_region) {
            const Complex q = detail::parse_complex(q_str);
            const BoundVariant bv = variant == "closed" ? BoundVariant::closed : BoundVariant::open;
            if (which == "condensed") {
                result = verdict_to_json(condensed_contains(q, theta));
                if (!svg_path.empty()) {
                    detail::write_svg_file(svg_path,
                                           emit_region_boundary(condensed_region(theta), ds));
                }
            } else if (which == "critical") {
                if (sigma_str.empty()) {
                    result = verdict_to_json(any_critical_contains(q, theta));
                    if (!svg_path.empty()) {
                        const SignString sig(theta >= 0.0 ? "-+" : "+-");
                        detail::write_svg_file(svg_path,
                                               emit_region_boundary(critical_region(theta, sig), ds));
                    }
                } else {
                    const SignString sig(sigma_str);
                    result = verdict_to_json(critical_contains(q, theta, sig));
                    if (!svg_path.empty()) {
                        detail::write_svg_file(svg_path,
                                               emit_region_boundary(critical_region(theta, sig), ds));
                    }
                }
            } else if (which == "disconnection") {
                result = Json{{"disconnected", disconnection_test(q, theta, bv)}};
            } else if (which == "amplitude") {
                result = Json{{"excluded", amplitude_circle_test(q, theta, omega)}};
            } else {
                throw ParameterOutOfRange("unknown region predicate: " + which);
            }
        } else if (*c_dubins) {
            const Frame Q(detail::parse_complex(q_str), unit_dir(theta));
            const auto curve = dubins_condensed(Q, kappa0);
            const auto oracle = dubins_csc_oracle(Q, kappa0);
            result = Json{{"curve", curve_to_json(curve)},
                          {"length", curve.length()},
                          {"word", oracle.word},
                          {"tie", oracle.tie},
                          {"oracle_length", oracle.length}};
            if (!svg_path.empty()) {
                detail::write_svg_file(svg_path, {curve_polyline(curve, ds)});
            }
        } else if (*c_deform) {
            const auto c = curve_from_json(Json::parse(curve_json));
            if (op == "attach") {
                const auto kind = kind_str == "loop" ? AttachKind::loop : AttachKind::eight;
                result = curve_to_json(attach_eight(c, n, t0, eps, kind));
            } else if (op == "spread") {
                const auto sr = spread_eights(c, n, ds);
                result = Json{{"sup_abs_dev", sr.sup_abs_dev},
                              {"c_estimate", sr.c_estimate},
                              {"theta1", sr.theta1},
                              {"n_samples", sr.samples.size()}};
                if (!svg_path.empty()) {
                    std::vector<Complex> poly;
                    for (const auto& sp : sr.samples) poly.push_back(sp.pos);
                    detail::write_svg_file(svg_path, {poly});
                }
            } else if (op == "excavator") {
                ExcavatorOptions opt;
                opt.grid_points = grid;
                const auto tr = excavator_trace(c, kappa0, steps, opt);
                Json svals = Json::array(), ovals = Json::array(), lvals = Json::array();
                for (const auto& st : tr.steps) {
                    svals.push_back(st.s);
                    ovals.push_back(st.omega);
                    lvals.push_back(st.length);
                }
                result = Json{{"s", svals},          {"omega", ovals}, {"length", lvals},
                              {"area", tr.area},     {"axis", tr.axis}, {"b", tr.b},
                              {"theta1", tr.theta1}};
                if (!svg_path.empty()) {
                    std::vector<std::vector<Complex>> polys;
                    for (std::size_t j = 0; j < tr.steps.size(); ++j) {
                        polys.push_back(tr.sampled_curve(j));
                    }
                    detail::write_svg_file(svg_path, polys);
                }
            } else if (op == "convex") {
                const auto c2 = curve_from_json(Json::parse(curve2_json));
                const auto tr = locally_convex_homotopy(c, c2, steps);
                Json curves = Json::array();
                for (const auto& st : tr.steps) curves.push_back(curve_to_json(st.curve));
                result = Json{{"curves", curves}};
                if (!svg_path.empty()) {
                    std::vector<std::vector<Complex>> polys;
                    for (const auto& st : tr.steps) polys.push_back(curve_polyline(st.curve, ds));
                    detail::write_svg_file(svg_path, polys);
                }
            } else if (op == "graft") {
                double a = s1, b2 = s2;
                if (a < 0.0 || b2 < 0.0) {
                    const auto pairs = find_antipodal_pairs(c);
                    if (pairs.empty()) throw NotDiffuse("no antipodal pair found");
                    a = pairs.front().first;
                    b2 = pairs.front().second;
                }
                result = curve_to_json(graft(c, {{a, sigma_len}, {b2, sigma_len}}, {1, 0}));
            } else {
                throw ParameterOutOfRange("unknown deform op: " + op);
            }
        } else if (*c_surface) {
            SurfaceModel S;
            if (surface_kind == "plane") S = SurfaceModel::plane();
            else if (surface_kind == "cylinder") S = SurfaceModel::cylinder(detail::parse_complex(gen1));
            else if (surface_kind == "torus") {
                if (gen2.empty()) throw ParameterOutOfRange("torus needs --gen2");
                S = SurfaceModel::torus(detail::parse_complex(gen1), detail::parse_complex(gen2));
            } else if (surface_kind == "mobius") S = SurfaceModel::mobius(detail::parse_complex(gen1));
            else if (surface_kind == "klein") {
                if (gen2.empty()) throw ParameterOutOfRange("klein needs --gen2");
                S = SurfaceModel::klein(detail::parse_complex(gen1), detail::parse_complex(gen2));
            } else {
                throw ParameterOutOfRange("unknown surface kind: " + surface_kind);
            }
            const Bounds b(detail::parse_extended(k1_str), detail::parse_extended(k2_str));
            result = lifts_to_json(surface_components(S, detail::parse_frame(frame_u),
                                                      detail::parse_frame(frame_v), b, theta,
                                                      max_radius));
        } else if (*c_random) {
            result = curve_to_json(random_curve(detail::parse_extended(k1_str),
                                                detail::parse_extended(k2_str), n_segs,
                                                max_seg_len, seed));
        } else if (*c_verify) {
            const auto checks = verify::run_suite(suite, seed);
            Json arr = Json::array();
            bool all_pass = true;
            for (const auto& ch : checks) {
                all_pass = all_pass && ch.pass;
                arr.push_back({{"name", ch.name},
                               {"pass", ch.pass},
                               {"measured", ch.measured},
                               {"bound", ch.bound},
                               {"note", ch.note}});
            }
            result = Json{{"suite", suite}, {"pass", all_pass}, {"checks", arr}};
            out << result.dump(2) << "\n";
            return all_pass ? 0 : 3;
        }
        out << result.dump(2) << "\n";
        return 0;
    } catch (const GridTooCoarse& e) {
        err << Json{{"error", e.what()}}.dump(2) << "\n";
        return 3;
    } catch (const Unreachable& e) {
        err << Json{{"error", e.what()}}.dump(2) << "\n";
        return 3;
    } catch (const NoAxis& e) {
        err << Json{{"error", e.what()}}.dump(2) << "\n";
        return 3;
    } catch (const std::exception& e) {
        err << Json{{"error", e.what()}}.dump(2) << "\n";
        return 2;
    }
}

}  // namespace curvspace::cli
