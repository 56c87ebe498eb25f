#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "curvspace/regions.hpp"
#include "curvspace/verify.hpp"

using namespace curvspace;

namespace {

/// Grid-sweep oracle for the condensed region: q is outside iff it stays
/// weakly on the non-region side of every tangent line of one of the two
/// extremal families.
bool sweep_says_outside(Complex q, double theta1, int grid = 4000) {
    const Complex a_plus = Complex(0, 1) * (1.0 + unit_dir(theta1));
    bool plus_all = true, minus_all = true;
    for (int j = 0; j <= grid; ++j) {
        const double phi = theta1 + (kPi - theta1) * j / grid;
        if (inner(q - a_plus, Complex(0, 1) * unit_dir(phi)) + 2.0 < -1e-9) plus_all = false;
        const double psi = (theta1 - kPi) * (1.0 - static_cast<double>(j) / grid);
        if (-inner(q + a_plus, Complex(0, 1) * unit_dir(psi)) + 2.0 < -1e-9) minus_all = false;
    }
    return plus_all || minus_all;
}

}  // namespace

TEST_CASE("sign strings") {
    const SignString s("+-+-");
    CHECK(s.size() == 4);
    CHECK(s.first() == 1);
    CHECK(s.opposite().str() == "-+-+");
    CHECK_THROWS_AS(SignString("+"), ParameterOutOfRange);
    CHECK_THROWS_AS(SignString("++"), ParameterOutOfRange);
}

TEST_CASE("condensed region membership at theta1 = 0") {
    CHECK(condensed_contains(Complex(1, 0), 0.0).status == RegionStatus::inside);
    CHECK(condensed_contains(Complex(2, 2), 0.0).status == RegionStatus::boundary);
    CHECK(condensed_contains(Complex(-1, 0), 0.0).status == RegionStatus::outside);
    CHECK(sweep_says_outside(Complex(-1, 0), 0.0));
    CHECK_FALSE(sweep_says_outside(Complex(1, 0), 0.0));

    // Empty for |theta1| >= pi.
    CHECK(condensed_contains(Complex(1, 0), kPi).status == RegionStatus::outside);
    CHECK(condensed_region(kPi).empty());
}

TEST_CASE("condensed region boundary data at theta1 = 0") {
    const auto spec = condensed_region(0.0);
    REQUIRE(spec.arcs.size() == 2);
    CHECK(std::abs(spec.arcs[0].circle.center - Complex(0, 2)) < 1e-12);
    CHECK(std::abs(spec.arcs[1].circle.center - Complex(0, -2)) < 1e-12);

    const auto polys = emit_region_boundary(spec, 0.01);
    REQUIRE(polys.size() == 4);
    const auto near = [&](Complex target) {
        double best = 1e9;
        for (const auto& poly : polys) {
            for (const auto& p : poly) best = std::min(best, std::abs(p - target));
        }
        return best;
    };
    CHECK(near(Complex(0, 0)) < 1e-9);
    CHECK(near(Complex(2, 2)) < 1e-2);
    CHECK(near(Complex(2, -2)) < 1e-2);
    CHECK(near(Complex(0, 4)) < 1e-9);
    CHECK(near(Complex(0, -4)) < 1e-9);

    CHECK(emit_region_boundary(RegionSpec{}, 0.1).empty());
    for (const auto& arcpts : {polys[0], polys[1]}) {
        for (const auto& p : arcpts) {
            const double d0 = std::abs(std::abs(p - Complex(0, 2)) - 2.0);
            const double d1 = std::abs(std::abs(p - Complex(0, -2)) - 2.0);
            CHECK(std::min(d0, d1) < 1e-9);
        }
    }
}

TEST_CASE("critical regions") {
    const SignString mp("-+");
    CHECK(critical_contains(Complex(5, 0), 0.0, mp).status == RegionStatus::inside);
    CHECK(critical_contains(Complex(3, 0), 0.0, mp).status == RegionStatus::outside);
    CHECK(critical_contains(Complex(4, 0), 0.0, mp).status == RegionStatus::boundary);

    CHECK(any_critical_contains(Complex(5, 0), 0.0).status == RegionStatus::inside);
    CHECK(any_critical_contains(Complex(3, 0), 0.0).status == RegionStatus::outside);
    CHECK(any_critical_contains(Complex(4, 0), 0.0).status == RegionStatus::boundary);

    // theta1 = pi degenerates to a half-plane above the line through a + ri.
    CHECK(any_critical_contains(Complex(0, 3), kPi).status == RegionStatus::inside);
    CHECK(any_critical_contains(Complex(0, 1.5), kPi).status == RegionStatus::outside);
    CHECK(any_critical_contains(Complex(-7, 2), kPi).status == RegionStatus::boundary);

    // r = 2 |sigma|.
    const auto spec = critical_region(0.0, SignString("+-+-"));
    REQUIRE(spec.arcs.size() == 1);
    CHECK(spec.arcs[0].circle.radius == Catch::Approx(8.0));

    // Mirror symmetry for negative turning.
    CHECK(critical_contains(Complex(4, -1), -0.7, SignString("+-")).status ==
          critical_contains(Complex(4, 1), 0.7, SignString("-+")).status);
}

TEST_CASE("disconnection and the open/closed flip") {
    CHECK(disconnection_test(Complex(3, 0), 0.0, BoundVariant::open));
    CHECK_FALSE(disconnection_test(Complex(5, 0), 0.0, BoundVariant::open));
    CHECK(disconnection_test(Complex(4, 0), 0.0, BoundVariant::open));
    CHECK_FALSE(disconnection_test(Complex(4, 0), 0.0, BoundVariant::closed));
    CHECK_FALSE(disconnection_test(Complex(2, 2), 0.0, BoundVariant::open));
    CHECK(disconnection_test(Complex(2, 2), 0.0, BoundVariant::closed));
    CHECK_FALSE(disconnection_test(Complex(3, 0), kPi, BoundVariant::open));
}

TEST_CASE("amplitude circle") {
    CHECK(amplitude_circle_test(Complex(3, 0), 0.0, kPi));
    CHECK_FALSE(amplitude_circle_test(Complex(3, 0), 0.0, kPi / 2));
    CHECK(amplitude_circle_test(Complex(0.1, 0), 0.0, kPi / 6));
    CHECK_THROWS_AS(amplitude_circle_test(Complex(1, 0), 1.0, 0.5), DomainError);
}

TEST_CASE("extremal families") {
    const Frame p1 = extremal_boundary_point(0.0, CondensedPlus{kPi / 2});
    CHECK(std::abs(p1.p - Complex(2, 2)) < 1e-12);
    const Frame p0 = extremal_boundary_point(0.0, CondensedPlus{0.0});
    CHECK(std::abs(p0.p) < 1e-12);
    const Frame c0 = extremal_boundary_point(0.0, CriticalFamily{SignString("-+"), 0.0});
    CHECK(std::abs(c0.p - Complex(0, 4)) < 1e-12);
    CHECK(std::abs(std::abs(c0.p) - 4.0) < 1e-12);

    CHECK_THROWS_AS(extremal_curve(0.0, CondensedPlus{4.0}), ParameterOutOfRange);

    // End frames of the constructed curves match the closed formulas on a
    // parameter grid, and sit on the bounding circles.
    const double theta1 = 0.6;
    const Complex z = unit_dir(theta1);
    for (int j = 0; j <= 99; ++j) {
        const double phi = theta1 + (kPi - theta1) * j / 99.0;
        const auto curve = extremal_curve(theta1, CondensedPlus{phi});
        const Complex formula = Complex(0, 1) * (1.0 + z) - 2.0 * Complex(0, 1) * unit_dir(phi);
        CHECK(std::abs(end_frame(curve).p - formula) < 1e-9);
        CHECK(std::abs(end_frame(curve).w - z) < 1e-9);

        const double psi = (theta1 - kPi) * j / 99.0;
        const auto cm = extremal_curve(theta1, CondensedMinus{psi});
        const Complex fm = -Complex(0, 1) * (1.0 + z) + 2.0 * Complex(0, 1) * unit_dir(psi);
        CHECK(std::abs(end_frame(cm).p - fm) < 1e-9);

        const double mu = theta1 - kPi + (kPi - theta1) * j / 99.0;
        for (const char* s : {"-+", "+-+", "-+-+"}) {
            const SignString sig(s);
            const auto cc = extremal_curve(theta1, CriticalFamily{sig, mu});
            CHECK(turning_profile(cc).omega == Catch::Approx(kPi));
            CHECK(turning_profile(cc).theta1 == Catch::Approx(theta1));
            const double parity = sig.size() % 2 == 0 ? -1.0 : 1.0;
            const Complex a = Complex(0, 1) * static_cast<double>(sig.first()) *
                              (1.0 + parity * z);
            CHECK(std::abs(std::abs(end_frame(cc).p - a) - 2.0 * sig.size()) < 1e-9);
        }
    }
}

TEST_CASE("Monte-Carlo soundness (reduced samples)") {
    const auto checks = verify::suite_regions(99, 2000, 300);
    for (const auto& ch : checks) {
        INFO(ch.name << " measured=" << ch.measured << " " << ch.note);
        CHECK(ch.pass);
    }
}

TEST_CASE("constructed critical curves forbid closed-variant disconnection") {
    // Contrapositive of class separation: wherever a critical curve (closed
    // bounds) ends, the closed-variant space cannot be disconnected there.
    std::mt19937_64 rng(73);
    std::uniform_real_distribution<double> t(0.0, kPi);
    for (int i = 0; i < 300; ++i) {
        const double theta1 = t(rng);
        const auto c = verify::detail::random_critical(rng, theta1);
        const Frame q = end_frame(c);
        CHECK_FALSE(disconnection_test(q.p, theta1, BoundVariant::closed));
    }
}

TEST_CASE("membership is mirror symmetric in theta1") {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> d(-10.0, 10.0), t(0.0, kPi - 1e-6);
    for (int i = 0; i < 500; ++i) {
        const Complex q(d(rng), d(rng));
        const double theta1 = t(rng);
        CHECK(condensed_contains(q, theta1).status ==
              condensed_contains(std::conj(q), -theta1).status);
        CHECK(any_critical_contains(q, theta1).status ==
              any_critical_contains(std::conj(q), -theta1).status);
    }
}
