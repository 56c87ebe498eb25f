#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "curvspace/dubins.hpp"

using namespace curvspace;

namespace {
PiecewiseCurve random_condensed(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> len(0.2, 1.1);
    for (;;) {
        const auto c = random_curve(-1.0, 1.0, 1 + static_cast<int>(rng() % 6), len(rng), rng());
        if (classify(c) == CurveClass::condensed) return c;
    }
}
}  // namespace

TEST_CASE("minimal paths for simple targets") {
    // Straight target: a single segment of length x.
    const auto seg = dubins_condensed(Frame(Complex(3, 0), Complex(1, 0)), 1.0);
    CHECK(seg.length() == Catch::Approx(3.0));
    REQUIRE(seg.segs.size() == 1);
    CHECK(seg.segs[0].kappa == 0.0);

    // Quarter circle, length pi/2.
    const auto quarter = dubins_condensed(Frame(Complex(1, 1), Complex(0, 1)), 1.0);
    CHECK(quarter.length() == Catch::Approx(kPi / 2));
    REQUIRE(quarter.segs.size() == 1);
    CHECK(quarter.segs[0].kappa == Catch::Approx(1.0));

    // Boundary target 2+2i: two unit arcs, length pi.
    const auto cc = dubins_condensed(Frame(Complex(2, 2), Complex(1, 0)), 1.0);
    CHECK(cc.length() == Catch::Approx(kPi));
    CHECK(frame_distance(end_frame(cc), Frame(Complex(2, 2), Complex(1, 0))) < 1e-7);

    // Scaled bound.
    const auto half = dubins_condensed(Frame(Complex(2, 2), Complex(0, 1)), 0.5);
    CHECK(frame_distance(end_frame(half), Frame(Complex(2, 2), Complex(0, 1))) < 1e-7);
    CHECK(in_bounds(half, -0.5, 0.5, BoundVariant::closed));

    CHECK_THROWS_AS(dubins_condensed(Frame(Complex(-1, 0), Complex(1, 0)), 1.0), Unreachable);
}

TEST_CASE("CSC oracle examples") {
    const auto s = dubins_csc_oracle(Frame(Complex(7, 0), Complex(1, 0)), 1.0);
    CHECK(s.length == Catch::Approx(7.0));

    const auto q = dubins_csc_oracle(Frame(Complex(1, 1), Complex(0, 1)), 1.0);
    CHECK(q.length == Catch::Approx(kPi / 2));

    CHECK_THROWS_AS(dubins_csc_oracle(Frame(Complex(-2, 0), Complex(1, 0)), 1.0), Unreachable);
}

namespace {
std::string word_of(const PiecewiseCurve& c) {
    std::string w;
    for (const auto& s : c.segs) w.push_back(s.kappa > 0 ? 'L' : (s.kappa < 0 ? 'R' : 'S'));
    return w;
}
}  // namespace

TEST_CASE("construction agrees with the oracle on random reachable targets") {
    std::mt19937_64 rng(41);
    double worst = 0.0, worst_min = 0.0;
    for (int i = 0; i < 100; ++i) {
        const auto w = random_condensed(rng);
        const Frame Q = end_frame(w);
        const auto curve = dubins_condensed(Q, 1.0);
        const auto oracle = dubins_csc_oracle(Q, 1.0);
        worst = std::max(worst, std::abs(curve.length() - oracle.length));
        // Minimality: never longer than the random witness.
        worst_min = std::max(worst_min, curve.length() - w.length());
        CHECK(frame_distance(end_frame(curve), Q) < 1e-7);
        CHECK(in_bounds(curve, -1.0 - 1e-12, 1.0 + 1e-12, BoundVariant::closed));
        // Same word except at ties (degenerate pieces already dropped).
        if (!oracle.tie) CHECK(word_of(curve) == word_of(oracle.curve));
    }
    CHECK(worst <= 1e-6);
    CHECK(worst_min <= 1e-9);
}

TEST_CASE("excavator trace of a straight segment is constant") {
    const auto tr = excavator_trace(line_segment(5.0), 1.0, 8);
    for (const auto& st : tr.steps) {
        CHECK(st.omega == Catch::Approx(0.0).margin(1e-12));
        CHECK(st.length == Catch::Approx(5.0).margin(1e-9));
    }
}

TEST_CASE("excavator s=0 limit matches the oracle") {
    PiecewiseCurve c;
    c.segs = {{0.8, 0.4}, {-0.8, 0.4}};
    const auto tr = excavator_trace(c, 1.0, 64);
    const auto oracle = dubins_csc_oracle(end_frame(c), 1.0);
    CHECK(std::abs(tr.steps.front().length - oracle.length) < 1e-6);
    CHECK(std::abs(tr.sampled_curve(0).back() - end_frame(c).p) < 1e-4);
    // s = 1 reproduces the input up to grid resampling.
    CHECK(std::abs(tr.steps.back().length - c.length()) < 1e-6);
}

TEST_CASE("excavator monotonicity and area conservation on random inputs") {
    std::mt19937_64 rng(43);
    ExcavatorOptions opt;
    opt.grid_points = 1024;
    for (int i = 0; i < 20; ++i) {
        const auto c = random_condensed(rng);
        const auto tr = excavator_trace(c, 1.0, 64, opt);
        for (std::size_t j = 0; j + 1 < tr.steps.size(); ++j) {
            CHECK(tr.steps[j + 1].omega >= tr.steps[j].omega - 1e-12);
            CHECK(tr.steps[j + 1].length >= tr.steps[j].length - 1e-12);
        }
        for (const auto& st : tr.steps) {
            CHECK(std::abs(st.area - tr.area) <= 1e-8 * (1.0 + std::abs(tr.area)));
            // Barrier containment: clipped slopes stay inside the envelopes.
            const auto bar = excavator_detail::Barriers(1.0, tr.b, tr.r0, tr.rb);
            for (std::size_t k = 0; k < st.f.size(); k += 37) {
                CHECK(st.f[k] >= bar.lower(tr.x[k]) - 1e-9);
                CHECK(st.f[k] <= bar.upper(tr.x[k]) + 1e-9);
            }
        }
    }
}

TEST_CASE("clipped slope equals the seven-value median") {
    std::mt19937_64 rng(47);
    std::uniform_real_distribution<double> d(-10.0, 10.0);
    for (int i = 0; i < 100000; ++i) {
        excavator_detail::GridProblem grid;
        const double f = d(rng);
        grid.x = {0.0};
        grid.f = {f};
        grid.gm = {f - std::abs(d(rng))};
        grid.hm = {f - std::abs(d(rng))};
        grid.gp = {f + std::abs(d(rng))};
        grid.hp = {f + std::abs(d(rng))};
        double a = d(rng), b = d(rng);
        if (a > b) std::swap(a, b);
        const double med = excavator_detail::median7(
            {grid.hm[0], grid.gm[0], a, grid.f[0], b, grid.gp[0], grid.hp[0]});
        REQUIRE(grid.clipped(0, a, b) == med);
    }
}

TEST_CASE("excavator input validation") {
    CHECK_THROWS_AS(excavator_trace(arc(1.0, 3 * kPi / 2), 1.0, 8), NotCondensed);
    CHECK_THROWS_AS(excavator_trace(arc(0.9, 1.0), 0.5, 8), OutOfBounds);
}
