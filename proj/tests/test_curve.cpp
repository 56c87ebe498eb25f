#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "curvspace/curve.hpp"

using namespace curvspace;

TEST_CASE("end frames of elementary curves") {
    CHECK(frame_distance(end_frame(line_segment(4.0)),
                         Frame(Complex(4, 0), Complex(1, 0))) < 1e-15);

    // Unit-curvature arc of length pi/2 from O ends at (1+i, i).
    const Frame q = end_frame(arc(1.0, kPi / 2));
    CHECK(std::abs(q.p - Complex(1, 1)) < 1e-15);
    CHECK(std::abs(q.w - Complex(0, 1)) < 1e-15);

    CHECK(frame_distance(end_frame(arc(1.0, 2 * kPi)), Frame{}) < 1e-14);
}

TEST_CASE("turning profiles and classification") {
    const auto p0 = turning_profile(line_segment(5.0));
    CHECK(p0.theta1 == 0.0);
    CHECK(p0.omega == 0.0);
    CHECK(p0.cls == CurveClass::condensed);

    const auto p1 = turning_profile(arc(1.0, kPi));
    CHECK(p1.theta1 == Catch::Approx(kPi));
    CHECK(p1.omega == Catch::Approx(kPi));
    CHECK(p1.cls == CurveClass::critical);

    const auto p2 = turning_profile(arc(1.0, 3 * kPi / 2));
    CHECK(p2.omega == Catch::Approx(3 * kPi / 2));
    CHECK(p2.cls == CurveClass::diffuse);

    CHECK(classify_amplitude(kPi - 1e-8) == CurveClass::condensed);
    CHECK(classify_amplitude(kPi - 1e-10) == CurveClass::critical);
    CHECK(classify_amplitude(kPi + 1e-10) == CurveClass::critical);
    CHECK(classify_amplitude(kPi + 1e-8) == CurveClass::diffuse);
}

TEST_CASE("concatenation") {
    auto c2 = line_segment(3.0, end_frame(line_segment(2.0)));
    const auto joined = concat(line_segment(2.0), c2);
    CHECK(joined.length() == Catch::Approx(5.0));

    auto quarter = arc(1.0, kPi / 2);
    auto back = arc(-1.0, kPi / 2, end_frame(quarter));
    CHECK(turning_profile(concat(quarter, back)).theta1 == Catch::Approx(0.0));

    auto wrong = line_segment(1.0, Frame(Complex(9, 9), Complex(1, 0)));
    CHECK_THROWS_AS(concat(quarter, wrong), FrameMismatch);
}

TEST_CASE("reversal") {
    const auto r = reverse(line_segment(2.5));
    CHECK(std::abs(r.start.p - Complex(2.5, 0)) < 1e-15);
    CHECK(std::abs(r.start.w - Complex(-1, 0)) < 1e-15);
    CHECK(frame_distance(end_frame(r), Frame(Complex(0, 0), Complex(-1, 0))) < 1e-14);

    PiecewiseCurve c;
    c.start = Frame(Complex(1, 2), unit_dir(0.3));
    c.segs = {{0.5, 1.0}, {-0.25, 2.0}, {0.0, 0.5}};
    const auto rr = reverse(reverse(c));
    CHECK(frame_distance(rr.start, c.start) < 1e-12);
    REQUIRE(rr.segs.size() == c.segs.size());
    for (std::size_t i = 0; i < c.segs.size(); ++i) {
        CHECK(rr.segs[i].kappa == Catch::Approx(c.segs[i].kappa));
        CHECK(rr.segs[i].len == Catch::Approx(c.segs[i].len));
    }

    CHECK(turning_profile(reverse(arc(1.0, kPi))).theta1 == Catch::Approx(-kPi));
    CHECK(turning_profile(reverse(arc(1.0, kPi))).omega == Catch::Approx(kPi));
}

TEST_CASE("curvature bounds, open and closed") {
    PiecewiseCurve c;
    c.segs = {{0.5, 1.0}};
    CHECK(in_bounds(c, -1.0, 1.0, BoundVariant::open));

    const auto half = arc(1.0, kPi);
    CHECK_FALSE(in_bounds(half, -1.0, 1.0, BoundVariant::open));
    CHECK(in_bounds(half, -1.0, 1.0, BoundVariant::closed));

    PiecewiseCurve steep;
    steep.segs = {{2.0, 1.0}};
    CHECK(in_bounds(steep, 0.0, std::numeric_limits<double>::infinity(), BoundVariant::open));

    CHECK_THROWS_AS(in_bounds(c, 1.0, -1.0, BoundVariant::open), InvalidBounds);
    CHECK_THROWS_AS(
        in_bounds(c, 0.0, std::numeric_limits<double>::infinity(), BoundVariant::closed),
        InvalidBounds);
}

TEST_CASE("seeded random curves are deterministic and in bounds") {
    const auto a = random_curve(-1.0, 1.0, 5, 2.0, 42);
    const auto b = random_curve(-1.0, 1.0, 5, 2.0, 42);
    REQUIRE(a.segs.size() == b.segs.size());
    for (std::size_t i = 0; i < a.segs.size(); ++i) {
        CHECK(a.segs[i].kappa == b.segs[i].kappa);
        CHECK(a.segs[i].len == b.segs[i].len);
    }
    std::mt19937_64 rng(5);
    for (int i = 0; i < 1000; ++i) {
        const auto c = random_curve(-1.0, 1.0, 1 + static_cast<int>(rng() % 8), 1.5, rng());
        CHECK(in_bounds(c, -1.0, 1.0, BoundVariant::open));
    }
    CHECK(random_curve(-1.0, 1.0, 1, 1.0, 7).segs.size() == 1);
}

TEST_CASE("sampling") {
    const auto pts = sample_points(line_segment(1.0), 0.5);
    REQUIRE(pts.size() == 3);
    CHECK(pts[1].pos.imag() == 0.0);
    CHECK(pts.back().s == Catch::Approx(1.0));

    const auto circ = sample_points(arc(1.0, 2 * kPi), 0.01);
    double worst = 0.0;
    for (std::size_t j = 1; j + 1 < circ.size(); ++j) {
        const Complex p1 = circ[j - 1].pos, p2 = circ[j].pos, p3 = circ[j + 1].pos;
        const double a = std::abs(p2 - p1), b = std::abs(p3 - p2), cc = std::abs(p3 - p1);
        worst = std::max(worst, std::abs(2.0 * cross(p2 - p1, p3 - p2) / (a * b * cc) - 1.0));
    }
    CHECK(worst < 1e-3);  // central-difference curvature against the exact circle

    PiecewiseCurve c;
    c.start = Frame(Complex(0.5, -1), unit_dir(0.4));
    c.segs = {{0.7, 1.1}, {-0.2, 0.8}};
    CHECK(std::abs(sample_points(c, 0.05).back().pos - end_frame(c).p) < 1e-9);
}

TEST_CASE("curve invariants over random inputs") {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> d(-4.0, 4.0), ang(-kPi, kPi);
    double worst_fact = 0.0;
    for (int i = 0; i < 1000; ++i) {
        auto c = random_curve(-2.0, 2.0, 1 + static_cast<int>(rng() % 6), 1.5, rng());
        const Frame F(Complex(d(rng), d(rng)), unit_dir(ang(rng)));
        const Frame from_o = end_frame(c);
        c.start = F;
        worst_fact = std::max(worst_fact, frame_distance(end_frame(c), frame_mul(F, from_o)));

        const auto tp = turning_profile(c);
        c.start = Frame{};
        const auto tp0 = turning_profile(c);
        CHECK(tp.theta1 == tp0.theta1);
        CHECK(tp.omega == tp0.omega);
        CHECK(tp.cls == tp0.cls);
        CHECK(tp.theta_minus <= 0.0);
        CHECK(tp.theta_plus >= 0.0);
        CHECK(tp.theta1 <= tp.theta_plus);
        CHECK(tp.theta1 >= tp.theta_minus);
    }
    CHECK(worst_fact <= 1e-10);
}
