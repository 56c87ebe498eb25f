#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "curvspace/normalize.hpp"

using namespace curvspace;

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

TEST_CASE("admissible translation interval") {
    const auto j1 = admissible_u_interval(Bounds(-1.0, 1.0));
    CHECK(j1.lo == Catch::Approx(-1.0));
    CHECK(j1.hi == Catch::Approx(1.0));

    const auto j2 = admissible_u_interval(Bounds(0.0, kInf));
    CHECK(std::isinf(j2.lo));
    CHECK(j2.lo < 0.0);
    CHECK(j2.hi == 0.0);

    const auto j3 = admissible_u_interval(Bounds(-kInf, 0.0));
    CHECK(j3.lo == 0.0);
    CHECK(std::isinf(j3.hi));
}

TEST_CASE("normal translation of a circle") {
    const auto t = normal_translate(arc(1.0, 2 * kPi), 0.5);
    REQUIRE(t.segs.size() == 1);
    CHECK(t.segs[0].kappa == Catch::Approx(2.0));
    CHECK(t.segs[0].len == Catch::Approx(kPi));

    PiecewiseCurve c;
    c.start = Frame(Complex(1, -2), unit_dir(0.9));
    c.segs = {{0.4, 1.0}, {-0.3, 2.0}};
    const auto same = normal_translate(c, 0.0);
    CHECK(frame_distance(same.start, c.start) == 0.0);
    CHECK(same.segs[0].kappa == c.segs[0].kappa);

    const auto back = normal_translate(normal_translate(c, 0.8), -0.8);
    CHECK(frame_distance(back.start, c.start) < 1e-12);
    CHECK(frame_distance(end_frame(back), end_frame(c)) < 1e-9);

    CHECK_THROWS_AS(normal_translate(arc(1.0, 1.0), 1.0), InadmissibleU);
}

TEST_CASE("dilatation") {
    const auto d = dilate(arc(1.0, 2 * kPi), 2.0);
    CHECK(d.segs[0].kappa == Catch::Approx(0.5));

    const auto i = dilate(arc(0.7, 2.0), 1.0);
    CHECK(i.segs[0].kappa == Catch::Approx(0.7));

    PiecewiseCurve c;
    c.start = Frame(Complex(2, 1), unit_dir(-0.5));
    c.segs = {{0.4, 1.3}};
    const auto rt = dilate(dilate(c, 3.0), 1.0 / 3.0);
    CHECK(std::abs(rt.start.p - c.start.p) < 1e-12);
    CHECK(rt.segs[0].kappa == Catch::Approx(c.segs[0].kappa).margin(1e-12));
}

TEST_CASE("canonicalize examples") {
    const Frame Q(Complex(1.4, -0.6), unit_dir(0.8));

    const auto r1 = canonicalize(Frame{}, Q, Bounds(-1.0, 1.0));
    CHECK(r1.canonical_type == CanonicalType::minus_one_plus_one);
    CHECK(frame_distance(r1.Q0, Q) < 1e-12);
    CHECK(r1.turning_sign == 1);

    const auto r2 = canonicalize(Frame{}, Q, Bounds(-2.0, 2.0));
    CHECK(std::abs(r2.Q0.p - 2.0 * Q.p) < 1e-12);
    CHECK(std::abs(r2.Q0.w - Q.w) < 1e-12);

    const auto r3 = canonicalize(Frame{}, Q, Bounds(1.0, kInf));
    CHECK(r3.canonical_type == CanonicalType::one_inf);
    CHECK(std::abs(r3.Q0.p - Q.p) < 1e-12);

    const auto r4 = canonicalize(Frame{}, Q, Bounds(-kInf, kInf));
    CHECK(r4.canonical_type == CanonicalType::unconstrained);
    CHECK(frame_distance(r4.Q0, Q) < 1e-12);

    CHECK(canonicalize(Frame{}, Q, Bounds(-3.0, -1.0)).turning_sign == -1);
    CHECK(canonicalize(Frame{}, Q, Bounds(-3.0, 0.0)).turning_sign == -1);
}

TEST_CASE("transform_curve lands in canonical data") {
    PiecewiseCurve c;
    c.start = Frame(Complex(0.5, 0.25), unit_dir(0.3));
    c.segs = {{1.2, 0.7}, {-0.8, 0.5}};
    const Frame Q = end_frame(c);
    const Bounds b(-2.0, 2.0);
    const auto rec = canonicalize(c.start, Q, b);
    const auto out = transform_curve(c, rec);
    CHECK(in_bounds(out, -1.0, 1.0, BoundVariant::open));
    CHECK(frame_distance(out.start, Frame{}) < 1e-9);
    CHECK(frame_distance(end_frame(out), rec.Q0) < 1e-9);
    CHECK(std::abs(out.total_turning() - c.total_turning()) < 1e-12);

    // Case (d) flips the turning sign.
    PiecewiseCurve neg;
    neg.segs = {{-1.5, 0.9}};
    const auto rec_d = canonicalize(neg.start, end_frame(neg), Bounds(-2.0, -1.0));
    CHECK(rec_d.case_label == 'd');
    const auto out_d = transform_curve(neg, rec_d);
    CHECK(out_d.total_turning() == Catch::Approx(-neg.total_turning()));
    CHECK(in_bounds(out_d, 1.0, kInf, BoundVariant::open));

    // Identity-equivalent record leaves the curve unchanged.
    const auto rec_id = canonicalize(c.start, Q, Bounds(-1.0, 1.0));
    const auto out_id = transform_curve(c, rec_id);
    CHECK(std::abs(out_id.segs[0].kappa - c.segs[0].kappa) < 1e-12);
    CHECK(frame_distance(end_frame(out_id), rec_id.Q0) < 1e-12);
}

TEST_CASE("q_hat matches the canonical endpoint") {
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> d(-3.0, 3.0), ang(-kPi, kPi), k(0.2, 2.5);
    for (int i = 0; i < 200; ++i) {
        const Frame P(Complex(d(rng), d(rng)), unit_dir(ang(rng)));
        const Frame Q(Complex(d(rng), d(rng)), unit_dir(ang(rng)));
        const Bounds b(-k(rng), k(rng));
        const auto rec = canonicalize(P, Q, b);
        CHECK(std::abs(q_hat(P, Q, b) - rec.Q0.p) < 1e-10);
    }
    CHECK_THROWS_AS(q_hat(Frame{}, Frame{}, Bounds(1.0, 2.0)), DomainError);
}

TEST_CASE("normal translation laws over random admissible pairs") {
    std::mt19937_64 rng(29);
    std::uniform_real_distribution<double> ku(0.2, 3.0), uu(0.0, 1.0), ang(-kPi, kPi),
        pos(-3.0, 3.0);
    double worst_end = 0.0, worst_turn = 0.0, worst_rho = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const Bounds b(-ku(rng), ku(rng));
        auto c = random_curve(b.kappa1, b.kappa2, 1 + static_cast<int>(rng() % 5), 1.0, rng());
        c.start = Frame(Complex(pos(rng), pos(rng)), unit_dir(ang(rng)));
        const auto J = admissible_u_interval(b);
        const double u = J.lo + (J.hi - J.lo) * uu(rng);
        const auto t = normal_translate(c, u);
        const Frame q = end_frame(c);
        worst_end = std::max(worst_end,
                             frame_distance(end_frame(t),
                                            Frame(q.p + Complex(0, 1) * u * q.w, q.w)));
        worst_turn = std::max(worst_turn, std::abs(t.total_turning() - c.total_turning()));
        for (std::size_t j = 0; j < c.segs.size(); ++j) {
            if (std::abs(c.segs[j].kappa) < 1e-6) continue;
            worst_rho = std::max(worst_rho,
                                 std::abs(1.0 / t.segs[j].kappa - (1.0 / c.segs[j].kappa - u)) /
                                     std::max(1.0, std::abs(1.0 / t.segs[j].kappa)));
        }
    }
    CHECK(worst_end <= 1e-9);
    CHECK(worst_turn <= 1e-12);
    CHECK(worst_rho <= 1e-12);
}
