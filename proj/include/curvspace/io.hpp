#pragma once

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "curvspace/components.hpp"
#include "curvspace/curve.hpp"
#include "curvspace/dubins.hpp"
#include "curvspace/errors.hpp"
#include "curvspace/geom.hpp"
#include "curvspace/normalize.hpp"
#include "curvspace/regions.hpp"

namespace curvspace {

using Json = nlohmann::json;

// ---------------------------------------------------------------------------
// Canonical curve format
// {"start":{"x":f64,"y":f64,"theta":f64},"segments":[{"kappa":f64,"length":f64},...]}

// The heading is written as its argument `theta` plus the exact unit-vector
// components `wx`, `wy`: theta alone cannot round-trip the heading bit-exactly
// through arg/exp, and the round trip is required to be lossless. Documents
// carrying only `theta` are accepted.
[[nodiscard]] inline Json frame_to_json(const Frame& f) {
    return Json{{"x", f.p.real()},
                {"y", f.p.imag()},
                {"theta", std::arg(f.w)},
                {"wx", f.w.real()},
                {"wy", f.w.imag()}};
}

[[nodiscard]] inline Frame frame_from_json(const Json& j) {
    const Complex p(j.at("x").get<double>(), j.at("y").get<double>());
    if (j.contains("wx") && j.contains("wy")) {
        Frame f;
        f.p = p;
        f.w = Complex(j.at("wx").get<double>(), j.at("wy").get<double>());
        return f;  // taken verbatim; producers guarantee |w| = 1
    }
    return Frame(p, unit_dir(j.at("theta").get<double>()));
}

[[nodiscard]] inline Json curve_to_json(const PiecewiseCurve& c) {
    Json segs = Json::array();
    for (const auto& s : c.segs) segs.push_back({{"kappa", s.kappa}, {"length", s.len}});
    return Json{{"start", frame_to_json(c.start)}, {"segments", segs}};
}

[[nodiscard]] inline PiecewiseCurve curve_from_json(const Json& j) {
    PiecewiseCurve c;
    c.start = frame_from_json(j.at("start"));
    for (const auto& s : j.at("segments")) {
        c.segs.push_back({s.at("kappa").get<double>(), s.at("length").get<double>()});
    }
    validate(c);
    return c;
}

// ---------------------------------------------------------------------------
// Result serialization

[[nodiscard]] inline Json profile_to_json(const TurningProfile& tp) {
    return Json{{"theta_plus", tp.theta_plus},
                {"theta_minus", tp.theta_minus},
                {"theta1", tp.theta1},
                {"omega", tp.omega},
                {"class", to_string(tp.cls)}};
}

[[nodiscard]] inline Json verdict_to_json(const RegionVerdict& v) {
    return Json{{"status", to_string(v.status)}, {"margin", v.margin}, {"tol", v.boundary_tol}};
}

[[nodiscard]] inline Json record_to_json(const NormalizationRecord& rec) {
    Json pipeline = Json::array();
    for (const auto& step : rec.pipeline) {
        if (const auto* nt = std::get_if<NormalTranslateStep>(&step)) {
            pipeline.push_back({{"op", "normal_translate"}, {"u", nt->u}});
        } else if (const auto* d = std::get_if<DilateStep>(&step)) {
            pipeline.push_back({{"op", "dilate"}, {"scale", d->scale}});
        } else if (const auto* lm = std::get_if<LeftMultiplyStep>(&step)) {
            pipeline.push_back({{"op", "left_multiply"}, {"frame", frame_to_json(lm->e)}});
        } else {
            pipeline.push_back({{"op", "reverse"}});
        }
    }
    return Json{{"canonical_type", to_string(rec.canonical_type)},
                {"case", std::string(1, rec.case_label)},
                {"Q0", frame_to_json(rec.Q0)},
                {"turning_sign", rec.turning_sign},
                {"pipeline", pipeline}};
}

[[nodiscard]] inline Json report_to_json(const ComponentReport& rep) {
    Json count;
    switch (rep.count) {
        case ComponentCount::zero: count = 0; break;
        case ComponentCount::one: count = 1; break;
        case ComponentCount::two: count = 2; break;
        default: count = "unknown"; break;
    }
    Json j{{"mode", rep.mode == CountMode::per_turning ? "per_turning" : "fixed_turning"},
           {"count", count},
           {"labels", rep.labels},
           {"canonical", record_to_json(rep.canonical)}};
    if (rep.canonical.canonical_type == CanonicalType::minus_one_plus_one) {
        j["q_hat"] = Json{{"x", rep.q_hat.real()}, {"y", rep.q_hat.imag()}};
    }
    if (rep.boundary_turning) j["boundary_turning"] = true;
    if (rep.witness) j["witness"] = curve_to_json(*rep.witness);
    return j;
}

[[nodiscard]] inline Json lifts_to_json(const std::vector<LiftReport>& lifts) {
    Json arr = Json::array();
    for (const auto& l : lifts) {
        arr.push_back({{"lift", frame_to_json(l.lift)},
                       {"theta1", l.theta1},
                       {"reflected", l.reflected},
                       {"report", report_to_json(l.report)}});
    }
    return Json{{"lifts", arr}};
}

// ---------------------------------------------------------------------------
// SVG 1.1 emission; the y-axis is flipped so positive y points up.

[[nodiscard]] inline std::string polylines_to_svg(const std::vector<std::vector<Complex>>& polys,
                                                  double margin = 1.0) {
    double x0 = 0.0, x1 = 1.0, y0 = 0.0, y1 = 1.0;
    bool first = true;
    for (const auto& poly : polys) {
        for (const Complex& p : poly) {
            if (first) {
                x0 = x1 = p.real();
                y0 = y1 = p.imag();
                first = false;
            }
            x0 = std::min(x0, p.real());
            x1 = std::max(x1, p.real());
            y0 = std::min(y0, p.imag());
            y1 = std::max(y1, p.imag());
        }
    }
    x0 -= margin;
    y0 -= margin;
    x1 += margin;
    y1 += margin;
    std::ostringstream os;
    os.precision(12);
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"" << x0 << " "
       << -y1 << " " << (x1 - x0) << " " << (y1 - y0) << "\">\n";
    for (const auto& poly : polys) {
        if (poly.empty()) continue;
        os << "  <path fill=\"none\" stroke=\"black\" stroke-width=\""
           << 0.004 * std::max(x1 - x0, y1 - y0) << "\" d=\"";
        for (std::size_t k = 0; k < poly.size(); ++k) {
            os << (k == 0 ? "M" : " L") << poly[k].real() << " " << -poly[k].imag();
        }
        os << "\"/>\n";
    }
    os << "</svg>\n";
    return os.str();
}

[[nodiscard]] inline std::vector<Complex> curve_polyline(const PiecewiseCurve& c, double ds) {
    std::vector<Complex> pts;
    for (const auto& sp : sample_points(c, ds)) pts.push_back(sp.pos);
    return pts;
}

}  // namespace curvspace
