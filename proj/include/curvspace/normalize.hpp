#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "curvspace/curve.hpp"
#include "curvspace/errors.hpp"
#include "curvspace/geom.hpp"

namespace curvspace {

/// Curvature interval (kappa1, kappa2), extended reals allowed.
/// Sign class follows the convention 0 * (+-inf) = 0.
struct Bounds {
    double kappa1{-1.0};
    double kappa2{+1.0};

    Bounds() = default;
    Bounds(double k1, double k2) : kappa1(k1), kappa2(k2) {
        if (!(kappa1 < kappa2)) throw InvalidBounds("kappa1 must be < kappa2");
    }

    /// Radius of curvature of a bound, with 1/(+-inf) = 0.
    [[nodiscard]] static double rho(double k) { return std::isinf(k) ? 0.0 : 1.0 / k; }
    [[nodiscard]] double rho1() const { return rho(kappa1); }
    [[nodiscard]] double rho2() const { return rho(kappa2); }

    [[nodiscard]] int sign_class() const {
        const auto sgn = [](double k) { return k > 0.0 ? 1 : (k < 0.0 ? -1 : 0); };
        return sgn(kappa1) * sgn(kappa2);
    }

    [[nodiscard]] bool unconstrained() const {
        return std::isinf(kappa1) && std::isinf(kappa2);
    }
};

struct Interval {
    double lo{0.0};  // -inf allowed
    double hi{0.0};  // +inf allowed
    [[nodiscard]] bool contains(double u) const { return u >= lo && u <= hi; }
};

/// The set of u with 1 - u*k > 0 for every k in (kappa1, kappa2): the
/// maximal closed interval containing 0 and avoiding reciprocals of the
/// open interval.
[[nodiscard]] inline Interval admissible_u_interval(const Bounds& b) {
    const double r1 = b.rho1();
    const double r2 = b.rho2();
    if (b.kappa1 >= 0.0) return {-std::numeric_limits<double>::infinity(), r2};
    if (b.kappa2 <= 0.0) return {r1, std::numeric_limits<double>::infinity()};
    return {r1, r2};
}

/// Normal translation by u: each point moves by u along the unit normal.
/// Per segment kappa -> kappa/(1-u*kappa) and len -> len*(1-u*kappa), which
/// keeps the result arc-length parametrized; headings are unchanged.
[[nodiscard]] inline PiecewiseCurve normal_translate(const PiecewiseCurve& c, double u) {
    validate(c);
    PiecewiseCurve out;
    out.start = Frame(c.start.p + Complex(0.0, 1.0) * u * c.start.w, c.start.w);
    out.segs.reserve(c.segs.size());
    for (const auto& s : c.segs) {
        const double fac = 1.0 - u * s.kappa;
        if (!(fac > 0.0)) throw InadmissibleU("1 - u*kappa must stay positive on every segment");
        out.segs.push_back({s.kappa / fac, s.len * fac});
    }
    return out;
}

/// Dilatation x -> scale*x: kappa/scale, len*scale.
[[nodiscard]] inline PiecewiseCurve dilate(const PiecewiseCurve& c, double scale) {
    validate(c);
    if (!(scale > 0.0)) throw ParameterOutOfRange("scale must be positive");
    PiecewiseCurve out;
    out.start = Frame(scale * c.start.p, c.start.w);
    out.segs.reserve(c.segs.size());
    for (const auto& s : c.segs) out.segs.push_back({s.kappa / scale, s.len * scale});
    return out;
}

/// Left multiplication by a Euclidean motion.
[[nodiscard]] inline PiecewiseCurve left_multiply(const PiecewiseCurve& c, const Frame& e) {
    validate(c);
    PiecewiseCurve out = c;
    out.start = frame_mul(e, c.start);
    return out;
}

// ---------------------------------------------------------------------------
// Canonicalization pipeline

enum class CanonicalType { minus_one_plus_one, zero_inf, one_inf, unconstrained };

[[nodiscard]] inline const char* to_string(CanonicalType t) {
    switch (t) {
        case CanonicalType::minus_one_plus_one: return "(-1,1)";
        case CanonicalType::zero_inf: return "(0,+inf)";
        case CanonicalType::one_inf: return "(1,+inf)";
        default: return "unconstrained";
    }
}

[[nodiscard]] inline Bounds canonical_bounds(CanonicalType t) {
    const double inf = std::numeric_limits<double>::infinity();
    switch (t) {
        case CanonicalType::minus_one_plus_one: return {-1.0, 1.0};
        case CanonicalType::zero_inf: return {0.0, inf};
        case CanonicalType::one_inf: return {1.0, inf};
        default: return {-inf, inf};
    }
}

struct NormalTranslateStep { double u; };
struct DilateStep { double scale; };
struct LeftMultiplyStep { Frame e; };
struct ReverseStep {};

using PipelineStep = std::variant<NormalTranslateStep, DilateStep, LeftMultiplyStep, ReverseStep>;

/// Result of reducing (P, Q, bounds) to one of the three canonical types.
struct NormalizationRecord {
    CanonicalType canonical_type{CanonicalType::minus_one_plus_one};
    char case_label{'a'};  // which case of the reduction applied ('a'..'e', or 'u')
    Frame Q0{};            // canonical end frame, start frame becomes the identity
    int turning_sign{+1};  // -1 exactly when orientation was reversed
    std::vector<PipelineStep> pipeline;
};

[[nodiscard]] inline PiecewiseCurve transform_curve(const PiecewiseCurve& c,
                                                    const NormalizationRecord& rec) {
    PiecewiseCurve out = c;
    for (const auto& step : rec.pipeline) {
        if (const auto* nt = std::get_if<NormalTranslateStep>(&step)) {
            out = normal_translate(out, nt->u);
        } else if (const auto* d = std::get_if<DilateStep>(&step)) {
            out = dilate(out, d->scale);
        } else if (const auto* lm = std::get_if<LeftMultiplyStep>(&step)) {
            out = left_multiply(out, lm->e);
        } else {
            out = reverse(out);
        }
    }
    return out;
}

namespace detail {

/// Track a frame through the forward pipeline (start and end transform the
/// same way except under reversal, where they swap with flipped headings).
struct FramePair {
    Frame start;
    Frame end;
    void apply(const PipelineStep& step) {
        if (const auto* nt = std::get_if<NormalTranslateStep>(&step)) {
            const Complex iu = Complex(0.0, 1.0) * nt->u;
            start = Frame(start.p + iu * start.w, start.w);
            end = Frame(end.p + iu * end.w, end.w);
        } else if (const auto* d = std::get_if<DilateStep>(&step)) {
            start = Frame(d->scale * start.p, start.w);
            end = Frame(d->scale * end.p, end.w);
        } else if (const auto* lm = std::get_if<LeftMultiplyStep>(&step)) {
            start = frame_mul(lm->e, start);
            end = frame_mul(lm->e, end);
        } else {
            const Frame s = start;
            start = Frame(end.p, -end.w);
            end = Frame(s.p, -s.w);
        }
    }
};

}  // namespace detail

/// Explicit homeomorphism data sending curves between (P, Q) with the given
/// bounds into a canonical space from the identity frame. Q0 is computed by
/// the closed formulas; the pipeline realizes the same map constructively.
[[nodiscard]] inline NormalizationRecord canonicalize(const Frame& P, const Frame& Q,
                                                      const Bounds& b) {
    NormalizationRecord rec;
    if (b.unconstrained()) {
        rec.canonical_type = CanonicalType::unconstrained;
        rec.case_label = 'u';
        rec.Q0 = frame_mul(frame_inv(P), Q);
        rec.pipeline = {LeftMultiplyStep{frame_inv(P)}};
        return rec;
    }

    const double r1 = b.rho1();
    const double r2 = b.rho2();
    const Complex p = P.p, w = P.w, q = Q.p, z = Q.w;
    const Complex wbar = std::conj(w), zbar = std::conj(z);
    const int sc = b.sign_class();

    if (sc < 0) {
        // (a): translate by the midpoint of the rho interval, dilate to (-1,1).
        const double u = 0.5 * (r1 + r2);
        const double k0 = 2.0 / (r2 - r1);
        rec.canonical_type = CanonicalType::minus_one_plus_one;
        rec.case_label = 'a';
        rec.Q0 = Frame(k0 * wbar * ((q - p) + Complex(0.0, 0.5) * (r1 + r2) * (z - w)), z * wbar);
        rec.pipeline = {NormalTranslateStep{u}, DilateStep{k0}};
    } else if (b.kappa1 > 0.0) {
        // (b): 0 < kappa1 < kappa2.
        rec.canonical_type = CanonicalType::one_inf;
        rec.case_label = 'b';
        rec.Q0 = Frame(wbar / (r1 - r2) * ((q - p) + Complex(0.0, r2) * (z - w)), z * wbar);
        rec.pipeline = {NormalTranslateStep{r2}, DilateStep{1.0 / (r1 - r2)}};
    } else if (b.kappa1 == 0.0) {
        // (c): 0 = kappa1 < kappa2.
        rec.canonical_type = CanonicalType::zero_inf;
        rec.case_label = 'c';
        rec.Q0 = Frame(wbar * ((q - p) + Complex(0.0, r2) * (z - w)), z * wbar);
        rec.pipeline = {NormalTranslateStep{r2}};
    } else if (b.kappa2 < 0.0) {
        // (d): kappa1 < kappa2 < 0, reversed orientation then case (b).
        rec.canonical_type = CanonicalType::one_inf;
        rec.case_label = 'd';
        rec.turning_sign = -1;
        rec.Q0 = Frame(zbar / (r1 - r2) * ((q - p) + Complex(0.0, r1) * (z - w)), w * zbar);
        rec.pipeline = {ReverseStep{}, NormalTranslateStep{-r1}, DilateStep{1.0 / (r1 - r2)}};
    } else {
        // (e): kappa1 < kappa2 = 0, reversed orientation then case (c).
        rec.canonical_type = CanonicalType::zero_inf;
        rec.case_label = 'e';
        rec.turning_sign = -1;
        rec.Q0 = Frame(zbar * ((q - p) + Complex(0.0, r1) * (z - w)), w * zbar);
        rec.pipeline = {ReverseStep{}, NormalTranslateStep{-r1}};
    }

    // Final Euclidean motion: send the transformed start frame to the identity.
    detail::FramePair fp{P, Q};
    for (const auto& step : rec.pipeline) fp.apply(step);
    rec.pipeline.push_back(LeftMultiplyStep{frame_inv(fp.start)});
    return rec;
}

/// The normalized endpoint of T:classification(b); equals the position of Q1
/// for kappa1 < 0 < kappa2.
[[nodiscard]] inline Complex q_hat(const Frame& P, const Frame& Q, const Bounds& b) {
    if (b.sign_class() >= 0) throw DomainError("q_hat requires kappa1*kappa2 < 0");
    const double r1 = b.rho1();
    const double r2 = b.rho2();
    return 2.0 / (r2 - r1) * std::conj(P.w) *
           ((Q.p - P.p) + Complex(0.0, 0.5) * (r1 + r2) * (Q.w - P.w));
}

}  // namespace curvspace
