#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "curvspace/geom.hpp"

using namespace curvspace;

namespace {
Frame rand_frame(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> d(-5.0, 5.0), a(-kPi, kPi);
    return Frame(Complex(d(rng), d(rng)), unit_dir(a(rng)));
}
}  // namespace

TEST_CASE("group law on UT C") {
    const Frame O{};
    const Frame Q(Complex(2.0, -1.0), unit_dir(0.7));
    CHECK(frame_distance(frame_mul(O, Q), Q) == 0.0);

    // (1, i) . (i, -1) = (0, -i)
    const Frame a(Complex(1, 0), Complex(0, 1));
    const Frame b(Complex(0, 1), Complex(-1, 0));
    const Frame ab = frame_mul(a, b);
    CHECK(std::abs(ab.p - Complex(0, 0)) < 1e-15);
    CHECK(std::abs(ab.w - Complex(0, -1)) < 1e-15);
}

TEST_CASE("inverses") {
    CHECK(frame_distance(frame_inv(Frame{}), Frame{}) == 0.0);

    const Frame f(Complex(0, 1), Complex(0, 1));  // (i, i)
    const Frame fi = frame_inv(f);
    CHECK(std::abs(fi.p - Complex(-1, 0)) < 1e-15);
    CHECK(std::abs(fi.w - Complex(0, -1)) < 1e-15);
    CHECK(frame_distance(frame_mul(f, fi), Frame{}) < 1e-12);

    const Frame t(Complex(3.5, -2.0), Complex(1, 0));
    CHECK(std::abs(frame_inv(t).p + t.p) < 1e-15);
}

TEST_CASE("frame action on points") {
    CHECK(std::abs(frame_apply(Frame{}, Complex(2, 3)) - Complex(2, 3)) == 0.0);
    CHECK(std::abs(frame_apply(Frame(Complex(0, 2), Complex(0, 1)), Complex(1, 0)) -
                   Complex(0, 3)) < 1e-15);
    CHECK(std::abs(frame_apply(Frame(Complex(5, 1), unit_dir(1.2)), Complex(0, 0)) -
                   Complex(5, 1)) == 0.0);
}

TEST_CASE("signed distance to oriented lines") {
    const HalfPlane hp{Complex(0, 0), Complex(1, 0), +1};
    CHECK(side_of_line(Complex(7.0, 0.0), hp) == 0.0);
    CHECK(side_of_line(Complex(0, 1), hp) == Catch::Approx(1.0));
    CHECK(side_of_line(Complex(0, -1), hp) == Catch::Approx(-1.0));
    const HalfPlane flipped{Complex(0, 0), Complex(1, 0), -1};
    CHECK(side_of_line(Complex(0, 1), flipped) == Catch::Approx(-1.0));
}

TEST_CASE("associativity and action homomorphism over random frames") {
    std::mt19937_64 rng(11);
    double worst_assoc = 0.0, worst_hom = 0.0, worst_norm = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const Frame f = rand_frame(rng), g = rand_frame(rng), h = rand_frame(rng);
        worst_assoc = std::max(worst_assoc,
                               frame_distance(frame_mul(frame_mul(f, g), h),
                                              frame_mul(f, frame_mul(g, h))));
        const Complex a(0.3, -1.7);
        worst_hom = std::max(worst_hom, std::abs(frame_apply(frame_mul(f, g), a) -
                                                 frame_apply(f, frame_apply(g, a))));
        worst_norm = std::max(worst_norm, std::abs(std::abs(frame_mul(f, g).w) - 1.0));
    }
    CHECK(worst_assoc <= 1e-10);
    CHECK(worst_hom <= 1e-10);
    CHECK(worst_norm <= 1e-12);
}

TEST_CASE("angle wrapping") {
    CHECK(wrap_angle(kPi) == Catch::Approx(kPi));
    CHECK(wrap_angle(-kPi) == Catch::Approx(kPi));
    CHECK(wrap_angle(3 * kPi) == Catch::Approx(kPi));
    CHECK(wrap_angle(0.25) == Catch::Approx(0.25));
    CHECK(std::abs(wrap_angle(2 * kPi)) < 1e-15);
}
