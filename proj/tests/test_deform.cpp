#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "curvspace/deform.hpp"

using namespace curvspace;

TEST_CASE("loops and eights close up") {
    for (int n : {1, 2, 3}) {
        CHECK(frame_distance(end_frame(loop_curve(n)), Frame{}) < 1e-12);
        CHECK(frame_distance(end_frame(eight_curve(n)), Frame{}) < 1e-12);
        CHECK(loop_curve(n).total_turning() == Catch::Approx(2 * kPi * n));
        CHECK(eight_curve(n).total_turning() == Catch::Approx(0.0));
        CHECK(in_bounds(eight_curve(n), -1.0, 1.0, BoundVariant::open));
    }
}

TEST_CASE("attaching eights and loops") {
    const auto c = line_segment(5.0);
    const auto with_eight = attach_eight(c, 1, 0.5, 0.125, AttachKind::eight);
    const auto tp = turning_profile(with_eight);
    CHECK(tp.theta1 == Catch::Approx(0.0));
    CHECK(tp.cls == CurveClass::diffuse);
    CHECK(frame_distance(end_frame(with_eight), end_frame(c)) < 1e-9);
    CHECK(in_bounds(with_eight, -1.0, 1.0, BoundVariant::open));

    const auto with_loops = attach_eight(c, 2, 0.5, 0.125, AttachKind::loop);
    CHECK(turning_profile(with_loops).theta1 == Catch::Approx(4 * kPi));

    CHECK_THROWS_AS(attach_eight(c, 1, 0.5, 0.3, AttachKind::eight), BadWindow);
    CHECK_THROWS_AS(attach_eight(c, 1, 0.1, 0.08, AttachKind::eight), BadWindow);
}

TEST_CASE("spreading eights") {
    const auto c = line_segment(10.0);
    const auto s50 = spread_eights(c, 50, 0.02);
    CHECK(s50.sup_abs_dev < 0.2);
    CHECK(frame_distance(s50.start, c.start) < 1e-9);
    CHECK(frame_distance(s50.end, end_frame(c)) < 1e-6);
    CHECK(std::abs(s50.samples.front().pos - c.start.p) < 1e-12);
    CHECK(std::abs(s50.samples.back().pos - end_frame(c).p) < 1e-9);
    CHECK(std::abs(s50.theta1) < 1e-9);

    const auto s100 = spread_eights(c, 100, 0.02);
    const double ratio = s100.sup_abs_dev / s50.sup_abs_dev;
    CHECK(ratio > 0.4);
    CHECK(ratio < 0.6);

    // Works on curved bases too.
    const auto base = arc(0.3, 4.0);
    const auto sb = spread_eights(base, 80, 0.02);
    CHECK(sb.sup_abs_dev < 0.2);
    CHECK(std::abs(sb.samples.back().pos - end_frame(base).p) < 1e-9);
}

TEST_CASE("grafting") {
    const auto d = arc(1.0, 3 * kPi / 2);  // diffuse

    // Zero-length insertions change nothing.
    const auto same = graft(d, {{1.0, 0.0}, {1.0 + kPi, 0.0}}, {1, 0});
    CHECK(same.length() == Catch::Approx(d.length()));
    CHECK(frame_distance(end_frame(same), end_frame(d)) < 1e-12);

    const auto pairs = find_antipodal_pairs(d);
    REQUIRE_FALSE(pairs.empty());
    for (const auto& [s_lo, s_hi] : pairs) {
        CHECK(std::abs(std::abs(theta_at(d, s_hi) - theta_at(d, s_lo)) - kPi) < 1e-9);
    }
    const auto g = graft(d, {{pairs[0].first, 2.0}, {pairs[0].second, 2.0}}, {1, 0});
    CHECK(g.length() == Catch::Approx(d.length() + 4.0));
    CHECK(frame_distance(end_frame(g), end_frame(d)) < 1e-9);
    CHECK(turning_profile(g).theta1 == Catch::Approx(turning_profile(d).theta1));

    // Heading mismatch is rejected.
    CHECK_THROWS_AS(graft(d, {{0.5, 1.0}, {0.7, 1.0}}, {1, 0}), PairingViolation);
    // Length mismatch is rejected.
    CHECK_THROWS_AS(graft(d, {{pairs[0].first, 1.0}, {pairs[0].second, 2.0}}, {1, 0}),
                    PairingViolation);

    CHECK_THROWS_AS(find_antipodal_pairs(line_segment(2.0)), NotDiffuse);
}

TEST_CASE("locally convex homotopy") {
    PiecewiseCurve circle;
    circle.segs = {{1.0, 2 * kPi}};
    const auto constant = locally_convex_homotopy(circle, circle, 4);
    for (const auto& st : constant.steps) {
        CHECK(st.length == Catch::Approx(2 * kPi));
        CHECK(frame_distance(end_frame(st.curve), Frame{}) < 1e-12);
    }

    // Distinct curvatures in (0, 2) closing the same frame with theta1 = 2 pi.
    const double a = 0.6, b = 1.4;
    PiecewiseCurve mixed;
    mixed.segs = {{1 / a, a * kPi / 2}, {1 / b, b * kPi / 2},
                  {1 / a, a * kPi / 2}, {1 / b, b * kPi / 2}};
    REQUIRE(frame_distance(end_frame(mixed), Frame{}) < 1e-12);
    const auto tr = locally_convex_homotopy(circle, mixed, 8);
    for (const auto& st : tr.steps) {
        CHECK(frame_distance(end_frame(st.curve), Frame{}) < 1e-8);
        CHECK(st.profile.theta1 == Catch::Approx(2 * kPi));
        CHECK(in_bounds(st.curve, 1.0 / 1.5, 1.0 / 0.5, BoundVariant::closed));
    }
    // Midpoint radius is the pointwise average.
    const auto& mid = tr.steps[4].curve;
    CHECK(1.0 / mid.segs[0].kappa == Catch::Approx(0.5 * (1.0 + a)));

    PiecewiseCurve with_negative;
    with_negative.segs = {{-0.5, 1.0}};
    CHECK_THROWS_AS(locally_convex_homotopy(circle, with_negative, 4), NotLocallyConvex);

    PiecewiseCurve two_loops;
    two_loops.segs = {{1.0, 4 * kPi}};
    CHECK_THROWS_AS(locally_convex_homotopy(circle, two_loops, 4), TurningMismatch);
}

TEST_CASE("eight attachment separates exactly in the disconnected case") {
    CHECK(eight_same_component(line_segment(5.0), Bounds(-1, 1), BoundVariant::open));
    CHECK_FALSE(eight_same_component(line_segment(3.0), Bounds(-1, 1), BoundVariant::open));
    CHECK(eight_same_component(arc(0.5, 3.5 * kPi), Bounds(-1, 1), BoundVariant::open));
    CHECK_THROWS_AS(
        eight_same_component(line_segment(3.0),
                             Bounds(0.0, std::numeric_limits<double>::infinity()),
                             BoundVariant::open),
        NotApplicable);
}
