#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "curvspace/curve.hpp"
#include "curvspace/errors.hpp"
#include "curvspace/geom.hpp"

namespace curvspace {

// ---------------------------------------------------------------------------
// Sign strings

/// Alternating sequence of signs of length >= 2, e.g. "+-+" or "-+".
struct SignString {
    std::vector<int> signs;

    SignString() = default;
    explicit SignString(std::vector<int> s) : signs(std::move(s)) { validate(); }
    explicit SignString(const std::string& s) {
        signs.reserve(s.size());
        for (char ch : s) {
            if (ch == '+') signs.push_back(+1);
            else if (ch == '-') signs.push_back(-1);
            else throw ParameterOutOfRange("sign string must consist of '+' and '-'");
        }
        validate();
    }

    void validate() const {
        if (signs.size() < 2) throw ParameterOutOfRange("sign string needs length >= 2");
        for (std::size_t i = 0; i + 1 < signs.size(); ++i) {
            if (signs[i] == signs[i + 1]) throw ParameterOutOfRange("sign string must alternate");
            if (signs[i] != 1 && signs[i] != -1) throw ParameterOutOfRange("signs must be +-1");
        }
    }

    [[nodiscard]] int size() const { return static_cast<int>(signs.size()); }
    [[nodiscard]] int first() const { return signs.front(); }
    [[nodiscard]] int last() const { return signs.back(); }

    [[nodiscard]] SignString opposite() const {
        SignString o;
        o.signs.reserve(signs.size());
        for (int s : signs) o.signs.push_back(-s);
        return o;
    }

    [[nodiscard]] std::string str() const {
        std::string s;
        for (int v : signs) s.push_back(v > 0 ? '+' : '-');
        return s;
    }
};

// ---------------------------------------------------------------------------
// Verdicts and region boundary data

enum class RegionStatus { inside, boundary, outside };

[[nodiscard]] inline const char* to_string(RegionStatus s) {
    switch (s) {
        case RegionStatus::inside: return "inside";
        case RegionStatus::boundary: return "boundary";
        default: return "outside";
    }
}

inline constexpr double kBoundaryTol = 1e-9;

/// Tri-state membership. `margin` is a signed distance-like quantity,
/// positive inside; open/closed semantics are applied only when collapsing
/// the verdict to a bool.
struct RegionVerdict {
    RegionStatus status{RegionStatus::outside};
    double margin{0.0};
    double boundary_tol{kBoundaryTol};

    [[nodiscard]] bool contains(BoundVariant variant) const {
        if (status == RegionStatus::inside) return true;
        return variant == BoundVariant::closed && status == RegionStatus::boundary;
    }
};

[[nodiscard]] inline RegionVerdict make_verdict(double margin, double tol = kBoundaryTol) {
    RegionVerdict v;
    v.margin = margin;
    v.boundary_tol = tol;
    if (margin > tol) v.status = RegionStatus::inside;
    else if (margin < -tol) v.status = RegionStatus::outside;
    else v.status = RegionStatus::boundary;
    return v;
}

/// Boundary description: circular arcs plus tangent rays, and the point the
/// region must not contain.
struct RegionArc {
    Circle circle;
    double angle0{0.0};  // points circle.center + radius * e^{i angle}
    double angle1{0.0};
};

struct RegionSpec {
    std::vector<RegionArc> arcs;
    std::vector<HalfPlane> half_planes;  // anchor = tangency point, direction = outgoing ray
    Complex excluded_point{0.0, 0.0};
    [[nodiscard]] bool empty() const { return arcs.empty() && half_planes.empty(); }
};

namespace detail {

/// Is x congruent mod 2pi to a point of [lo, hi]?
[[nodiscard]] inline bool angle_in_interval(double x, double lo, double hi) {
    const double shifted = x - 2.0 * kPi * std::floor((x - lo) / (2.0 * kPi));
    return shifted <= hi;  // shifted lies in [lo, lo + 2pi)
}

/// Extremes of t |-> sin(beta - t) over [lo, hi].
[[nodiscard]] inline double min_sin(double beta, double lo, double hi) {
    double m = std::min(std::sin(beta - lo), std::sin(beta - hi));
    if (angle_in_interval(beta + kPi / 2.0, lo, hi)) m = -1.0;
    return m;
}

[[nodiscard]] inline double max_sin(double beta, double lo, double hi) {
    double m = std::max(std::sin(beta - lo), std::sin(beta - hi));
    if (angle_in_interval(beta - kPi / 2.0, lo, hi)) m = 1.0;
    return m;
}

/// min over phi in [lo, hi] of <q - center, i e^{i phi}> + radius.
/// This is the supporting-line margin of an arc family against its tangents;
/// the interior critical value is radius - |q - center|.
[[nodiscard]] inline double min_tangent_margin_plus(Complex q, Complex center, double radius,
                                                    double lo, double hi) {
    const Complex d = q - center;
    const double r = std::abs(d);
    if (r == 0.0) return radius;
    return r * min_sin(std::arg(d), lo, hi) + radius;
}

[[nodiscard]] inline double min_tangent_margin_minus(Complex q, Complex center, double radius,
                                                     double lo, double hi) {
    // min over psi of -<q - center, i e^{i psi}> + radius
    const Complex d = q - center;
    const double r = std::abs(d);
    if (r == 0.0) return radius;
    return -r * max_sin(std::arg(d), lo, hi) + radius;
}

/// Distance from q to the arc {center + radius e^{i a}: a in [lo, hi]}.
[[nodiscard]] inline double dist_to_arc(Complex q, Complex center, double radius, double lo,
                                        double hi) {
    const Complex d = q - center;
    const double r = std::abs(d);
    if (r > 0.0 && angle_in_interval(std::arg(d), lo, hi)) return std::abs(r - radius);
    const double d0 = std::abs(q - (center + radius * unit_dir(lo)));
    const double d1 = std::abs(q - (center + radius * unit_dir(hi)));
    return std::min(d0, d1);
}

[[nodiscard]] inline double dist_to_ray(Complex q, Complex anchor, Complex dir) {
    const double t = inner(q - anchor, dir);
    if (t <= 0.0) return std::abs(q - anchor);
    return std::abs(q - (anchor + t * dir));
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Condensed curves: region R_{U_c}

/// Signed distance of q to the boundary of R_{U_c}, positive inside, for
/// theta1 in (-pi, pi). Membership comes from the tangent-line inequalities
/// of the two extremal two-arc families (q is inside iff it lies strictly
/// beyond some tangent of each family); the magnitude is the distance to the
/// explicit boundary chain (two arcs plus two tangent rays).
[[nodiscard]] inline double condensed_margin(Complex q, double theta1) {
    if (!(std::abs(theta1) < kPi)) return -std::numeric_limits<double>::infinity();
    if (theta1 < 0.0) {  // mirror across the x-axis
        q = std::conj(q);
        theta1 = -theta1;
    }
    const Complex i(0.0, 1.0);
    const Complex z = unit_dir(theta1);
    const Complex a_plus = i * (1.0 + z);
    // m_plus = min over phi in [theta1, pi] of <q - a+, i e^{i phi}> + 2
    const double m_plus = detail::min_tangent_margin_plus(q, a_plus, 2.0, theta1, kPi);
    // m_minus = min over psi in [theta1 - pi, 0] of -<q + a+, i e^{i psi}> + 2
    const double m_minus = detail::min_tangent_margin_minus(q, -a_plus, 2.0, theta1 - kPi, 0.0);
    // Strict test with a rounding guard: the zero level of the minima extends
    // past the arcs along two tangent half-lines, where the sign is noise;
    // points that close to it are settled by the distance term.
    const double guard = 1e-12 * (4.0 + std::abs(q));
    const bool inside = m_plus < -guard && m_minus < -guard;

    const double lo = theta1 - kPi / 2.0, hi = kPi / 2.0;  // arc-point angles
    double d = detail::dist_to_arc(q, a_plus, 2.0, lo, hi);
    d = std::min(d, detail::dist_to_arc(q, -a_plus, 2.0, lo, hi));
    d = std::min(d, detail::dist_to_ray(q, a_plus + 2.0 * i, unit_dir(kPi)));
    d = std::min(d, detail::dist_to_ray(q, -a_plus - 2.0 * i * z, unit_dir(theta1 - kPi)));
    return inside ? d : -d;
}

[[nodiscard]] inline RegionVerdict condensed_contains(Complex q, double theta1,
                                                      double tol = kBoundaryTol) {
    return make_verdict(condensed_margin(q, theta1), tol);
}

[[nodiscard]] inline bool condensed_exists(Complex q, double theta1, BoundVariant variant,
                                           double tol = kBoundaryTol) {
    return condensed_contains(q, theta1, tol).contains(variant);
}

// ---------------------------------------------------------------------------
// Critical curves: regions R_sigma and R_T

namespace detail {

struct CriticalGeometry {
    Complex a;
    double r;
};

/// Center and radius of the bounding circle of R_sigma, theta1 in [0, pi].
[[nodiscard]] inline CriticalGeometry critical_geometry(double theta1, const SignString& sigma) {
    const Complex z = unit_dir(theta1);
    const double parity = (sigma.size() % 2 == 0) ? -1.0 : 1.0;  // (-1)^{|sigma|+1}
    CriticalGeometry g;
    g.a = Complex(0.0, 1.0) * static_cast<double>(sigma.first()) * (1.0 + parity * z);
    g.r = 2.0 * static_cast<double>(sigma.size());
    return g;
}

}  // namespace detail

/// Signed distance of q to the boundary of R_sigma, positive inside. The
/// boundary circle is traced by the extremal curves' endpoints
/// a + r i e^{i mu}, mu in [theta1 - pi, 0]; q is inside iff it lies
/// strictly beyond some tangent line of that family.
[[nodiscard]] inline double critical_margin(Complex q, double theta1, SignString sigma) {
    if (std::abs(theta1) > kPi) return -std::numeric_limits<double>::infinity();
    if (theta1 < 0.0) {
        q = std::conj(q);
        theta1 = -theta1;
        sigma = sigma.opposite();
    }
    const Complex i(0.0, 1.0);
    const Complex z = unit_dir(theta1);
    const auto g = detail::critical_geometry(theta1, sigma);
    // max over mu in [theta1 - pi, 0] of <q - a, i e^{i mu}> - r
    const Complex dv = q - g.a;
    const double rd = std::abs(dv);
    const double guard = 1e-12 * (g.r + std::abs(q));
    const bool inside =
        rd > 0.0 && rd * detail::max_sin(std::arg(dv), theta1 - kPi, 0.0) - g.r > guard;

    double d = detail::dist_to_arc(q, g.a, g.r, theta1 - kPi / 2.0, kPi / 2.0);
    d = std::min(d, detail::dist_to_ray(q, g.a + g.r * i, unit_dir(kPi)));
    d = std::min(d, detail::dist_to_ray(q, g.a - g.r * i * z, unit_dir(theta1 - kPi)));
    return inside ? d : -d;
}

[[nodiscard]] inline RegionVerdict critical_contains(Complex q, double theta1,
                                                     const SignString& sigma,
                                                     double tol = kBoundaryTol) {
    return make_verdict(critical_margin(q, theta1, sigma), tol);
}

/// R_T: critical curves of any type exist iff q is in R_{-+} (theta1 >= 0)
/// or R_{+-} (theta1 <= 0).
[[nodiscard]] inline RegionVerdict any_critical_contains(Complex q, double theta1,
                                                         double tol = kBoundaryTol) {
    const SignString sigma(theta1 >= 0.0 ? "-+" : "+-");
    return make_verdict(critical_margin(q, theta1, sigma), tol);
}

[[nodiscard]] inline bool critical_exists(Complex q, double theta1, BoundVariant variant,
                                          double tol = kBoundaryTol) {
    return any_critical_contains(q, theta1, tol).contains(variant);
}

// ---------------------------------------------------------------------------
// Disconnection: condensed curves exist but critical ones do not

[[nodiscard]] inline bool disconnection_test(Complex q, double theta1, BoundVariant variant,
                                             double tol = kBoundaryTol) {
    if (!(std::abs(theta1) < kPi)) return false;
    return condensed_exists(q, theta1, variant, tol) && !critical_exists(q, theta1, variant, tol);
}

// ---------------------------------------------------------------------------
// Amplitude circle

/// True iff no curve of amplitude exactly omega can reach (q, e^{i theta1}):
/// q lies strictly inside the circle of radius 4 sin(omega/2).
[[nodiscard]] inline bool amplitude_circle_test(Complex q, double theta1, double omega) {
    if (std::abs(theta1) > kPi) throw DomainError("requires |theta1| <= pi");
    if (!(omega >= std::abs(theta1) && omega <= kPi)) {
        throw DomainError("omega must lie in [|theta1|, pi]");
    }
    const Complex z = unit_dir(theta1);
    const double sgn = theta1 >= 0.0 ? 1.0 : -1.0;
    const Complex center = sgn * Complex(0.0, 1.0) * (z - 1.0);
    return std::abs(q - center) < 4.0 * std::sin(omega / 2.0);
}

// ---------------------------------------------------------------------------
// Extremal families

struct CondensedPlus { double phi; };
struct CondensedMinus { double psi; };
struct CriticalFamily {
    SignString sigma;
    double mu;
};

namespace detail {

inline void push_arc(PiecewiseCurve& c, double kappa, double len) {
    if (len > 1e-15) c.segs.push_back({kappa, len});
}

/// Extremal curves for theta1 in [0, pi]; all pieces are unit-radius arcs.
[[nodiscard]] inline PiecewiseCurve extremal_curve_nonneg(double theta1, const CondensedPlus& f) {
    if (!(f.phi >= theta1 - 1e-12 && f.phi <= kPi + 1e-12)) {
        throw ParameterOutOfRange("phi must lie in [theta1, pi]");
    }
    PiecewiseCurve c;
    push_arc(c, +1.0, f.phi);
    push_arc(c, -1.0, f.phi - theta1);
    if (c.segs.empty()) throw ParameterOutOfRange("degenerate extremal curve");
    return c;
}

[[nodiscard]] inline PiecewiseCurve extremal_curve_nonneg(double theta1, const CondensedMinus& f) {
    if (!(f.psi >= theta1 - kPi - 1e-12 && f.psi <= 1e-12)) {
        throw ParameterOutOfRange("psi must lie in [theta1 - pi, 0]");
    }
    PiecewiseCurve c;
    push_arc(c, -1.0, -f.psi);
    push_arc(c, +1.0, theta1 - f.psi);
    if (c.segs.empty()) throw ParameterOutOfRange("degenerate extremal curve");
    return c;
}

[[nodiscard]] inline PiecewiseCurve extremal_curve_nonneg(double theta1, const CriticalFamily& f) {
    if (!(f.mu >= theta1 - kPi - 1e-12 && f.mu <= 1e-12)) {
        throw ParameterOutOfRange("mu must lie in [theta1 - pi, 0]");
    }
    const int n = f.sigma.size();
    const int s1 = f.sigma.first();
    PiecewiseCurve c;
    // First extreme, then n-1 full half-turns between the extremes, then home.
    push_arc(c, static_cast<double>(s1), s1 > 0 ? f.mu + kPi : -f.mu);
    double kappa = -static_cast<double>(s1);
    for (int j = 1; j < n; ++j) {
        push_arc(c, kappa, kPi);
        kappa = -kappa;
    }
    if (f.sigma.last() > 0) push_arc(c, -1.0, f.mu + kPi - theta1);
    else push_arc(c, +1.0, theta1 - f.mu);
    return c;
}

}  // namespace detail

[[nodiscard]] inline PiecewiseCurve extremal_curve(double theta1, const CondensedPlus& f) {
    if (theta1 >= 0.0) return detail::extremal_curve_nonneg(theta1, f);
    return mirror_x(detail::extremal_curve_nonneg(-theta1, CondensedMinus{-f.phi}));
}

[[nodiscard]] inline PiecewiseCurve extremal_curve(double theta1, const CondensedMinus& f) {
    if (theta1 >= 0.0) return detail::extremal_curve_nonneg(theta1, f);
    return mirror_x(detail::extremal_curve_nonneg(-theta1, CondensedPlus{-f.psi}));
}

[[nodiscard]] inline PiecewiseCurve extremal_curve(double theta1, const CriticalFamily& f) {
    if (theta1 >= 0.0) return detail::extremal_curve_nonneg(theta1, f);
    return mirror_x(
        detail::extremal_curve_nonneg(-theta1, CriticalFamily{f.sigma.opposite(), -f.mu}));
}

/// Endpoint frames of the extremal families from the closed formulas; the
/// constructed curves (when nondegenerate) end at the same frames. The
/// condensed formulas hold for either sign of theta1; the critical arc
/// parameter flips orientation under the mirror.
[[nodiscard]] inline Frame extremal_boundary_point(double theta1, const CondensedPlus& f) {
    const Complex i(0.0, 1.0);
    const Complex z = unit_dir(theta1);
    return Frame(i * (1.0 + z) - 2.0 * i * unit_dir(f.phi), z);
}

[[nodiscard]] inline Frame extremal_boundary_point(double theta1, const CondensedMinus& f) {
    const Complex i(0.0, 1.0);
    const Complex z = unit_dir(theta1);
    return Frame(-i * (1.0 + z) + 2.0 * i * unit_dir(f.psi), z);
}

[[nodiscard]] inline Frame extremal_boundary_point(double theta1, const CriticalFamily& f) {
    const double sgn = theta1 >= 0.0 ? 1.0 : -1.0;
    const auto g = detail::critical_geometry(std::abs(theta1),
                                             theta1 >= 0.0 ? f.sigma : f.sigma.opposite());
    const Complex a = theta1 >= 0.0 ? g.a : std::conj(g.a);
    return Frame(a + sgn * g.r * Complex(0.0, 1.0) * unit_dir(f.mu), unit_dir(theta1));
}

// ---------------------------------------------------------------------------
// Region boundary specs (for rendering and validation)

namespace detail {

/// Orient each tangent half-plane so that side_of_line is negative at the
/// excluded point.
inline void orient_half_planes(RegionSpec& spec) {
    for (auto& hp : spec.half_planes) {
        hp.side = +1;
        if (side_of_line(spec.excluded_point, hp) > 0.0) hp.side = -1;
    }
}

}  // namespace detail

[[nodiscard]] inline RegionSpec condensed_region(double theta1) {
    RegionSpec spec;
    if (!(std::abs(theta1) < kPi)) return spec;
    const bool mirrored = theta1 < 0.0;
    const double t1 = std::abs(theta1);
    const Complex z = unit_dir(t1);
    const Complex a_plus = Complex(0.0, 1.0) * (1.0 + z);
    const Complex i(0.0, 1.0);

    // Arc of the plus family: points a+ + 2 e^{i(phi - pi/2)}, phi in [t1, pi].
    spec.arcs.push_back({{a_plus, 2.0}, t1 - kPi / 2.0, kPi / 2.0});
    // Arc of the minus family: points -a+ + 2 e^{i(psi + pi/2)}, psi in [t1 - pi, 0].
    spec.arcs.push_back({{-a_plus, 2.0}, t1 - kPi / 2.0, kPi / 2.0});
    // Tangent rays at the far arc ends.
    spec.half_planes.push_back({a_plus + 2.0 * i, unit_dir(kPi), -1});
    spec.half_planes.push_back({-a_plus - 2.0 * i * z, unit_dir(t1 - kPi), -1});
    spec.excluded_point = -i + i * z;

    if (mirrored) {
        for (auto& a : spec.arcs) {
            a.circle.center = std::conj(a.circle.center);
            const double a0 = -a.angle1, a1 = -a.angle0;
            a.angle0 = a0;
            a.angle1 = a1;
        }
        for (auto& hp : spec.half_planes) {
            hp.anchor = std::conj(hp.anchor);
            hp.direction = std::conj(hp.direction);
        }
        spec.excluded_point = std::conj(spec.excluded_point);
    }
    detail::orient_half_planes(spec);
    return spec;
}

[[nodiscard]] inline RegionSpec critical_region(double theta1, SignString sigma) {
    if (std::abs(theta1) > kPi) throw DomainError("requires |theta1| <= pi");
    const bool mirrored = theta1 < 0.0;
    if (mirrored) sigma = sigma.opposite();
    const double t1 = std::abs(theta1);
    const Complex z = unit_dir(t1);
    const auto g = detail::critical_geometry(t1, sigma);
    const Complex i(0.0, 1.0);

    RegionSpec spec;
    // Points a + r e^{i(mu + pi/2)}, mu in [t1 - pi, 0]; degenerate at t1 = pi.
    spec.arcs.push_back({{g.a, g.r}, t1 - kPi / 2.0, kPi / 2.0});
    spec.half_planes.push_back({g.a + g.r * i, -unit_dir(0.0), -1});
    spec.half_planes.push_back({g.a - g.r * i * z, unit_dir(t1 - kPi), -1});
    spec.excluded_point = -i + i * z;

    if (mirrored) {
        for (auto& a : spec.arcs) {
            a.circle.center = std::conj(a.circle.center);
            const double a0 = -a.angle1, a1 = -a.angle0;
            a.angle0 = a0;
            a.angle1 = a1;
        }
        for (auto& hp : spec.half_planes) {
            hp.anchor = std::conj(hp.anchor);
            hp.direction = std::conj(hp.direction);
        }
        spec.excluded_point = std::conj(spec.excluded_point);
    }
    detail::orient_half_planes(spec);
    return spec;
}

/// Sampled boundary: one polyline per arc and per truncated tangent ray.
[[nodiscard]] inline std::vector<std::vector<Complex>> emit_region_boundary(
    const RegionSpec& spec, double ds, double ray_length = 16.0) {
    if (!(ds > 0.0)) throw ParameterOutOfRange("ds must be positive");
    std::vector<std::vector<Complex>> out;
    for (const auto& arc : spec.arcs) {
        const double span = arc.angle1 - arc.angle0;
        if (span <= 0.0) continue;
        const int n = std::max(1, static_cast<int>(std::ceil(span * arc.circle.radius / ds)));
        std::vector<Complex> poly;
        poly.reserve(static_cast<std::size_t>(n) + 1);
        for (int k = 0; k <= n; ++k) {
            const double a = arc.angle0 + span * static_cast<double>(k) / n;
            poly.push_back(arc.circle.center + arc.circle.radius * unit_dir(a));
        }
        out.push_back(std::move(poly));
    }
    for (const auto& hp : spec.half_planes) {
        const int n = std::max(1, static_cast<int>(std::ceil(ray_length / ds)));
        std::vector<Complex> poly;
        poly.reserve(static_cast<std::size_t>(n) + 1);
        for (int k = 0; k <= n; ++k) {
            poly.push_back(hp.anchor + hp.direction * (ray_length * static_cast<double>(k) / n));
        }
        out.push_back(std::move(poly));
    }
    return out;
}

}  // namespace curvspace
