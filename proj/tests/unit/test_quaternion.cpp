#include <doctest.h>

#include <algorithm>
#include <array>

#include "gen.hpp"
#include "hkt/quaternion.hpp"

using namespace hkt;

namespace {

// Hamilton product written out by components, kept separate from the library.
std::array<Rational, 4> hamilton(const std::array<Rational, 4>& p, const std::array<Rational, 4>& q) {
    return {p[0] * q[0] - p[1] * q[1] - p[2] * q[2] - p[3] * q[3],
            p[0] * q[1] + p[1] * q[0] + p[2] * q[3] - p[3] * q[2],
            p[0] * q[2] - p[1] * q[3] + p[2] * q[0] + p[3] * q[1],
            p[0] * q[3] + p[1] * q[2] - p[2] * q[1] + p[3] * q[0]};
}

std::array<Rational, 4> act(const Mat4& m, const std::array<Rational, 4>& x) {
    std::array<Rational, 4> y;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) y[r] += m(r, c) * x[c];
    return y;
}

std::array<Rational, 4> coords(const Quaternion& q) { return {q.w, q.x, q.y, q.z}; }

bool contains(const FrameReport& r, const std::string& name) {
    return std::find(r.failed.begin(), r.failed.end(), name) != r.failed.end();
}

}  // namespace

TEST_CASE("unit i acts on coordinates as expected on both sides") {
    const std::array<Rational, 4> x{1, 2, 3, 5};
    const Mat4 L = structure_matrix(Side::left, AxisTriple::e1());
    const Mat4 R = structure_matrix(Side::right, AxisTriple::e1());
    CHECK(act(L, x) == std::array<Rational, 4>{-2, 1, -5, 3});
    CHECK(act(R, x) == std::array<Rational, 4>{-2, 1, 5, -3});
}

TEST_CASE("multiplication matrices agree with the Hamilton product") {
    testing::Gen gen(11);
    for (int t = 0; t < 50; ++t) {
        const Quaternion u{gen.rational(), gen.rational(), gen.rational(), gen.rational()};
        const std::array<Rational, 4> x{gen.rational(), gen.rational(), gen.rational(), gen.rational()};
        CHECK(act(multiplication_matrix(Side::left, u), x) == hamilton(coords(u), x));
        CHECK(act(multiplication_matrix(Side::right, u), x) == hamilton(x, coords(u)));
        CHECK(coords(u * Quaternion{x[0], x[1], x[2], x[3]}) == hamilton(coords(u), x));
    }
}

TEST_CASE("structure matrices square to minus identity for rational unit axes") {
    testing::Gen gen(12);
    for (int t = 0; t < 20; ++t) {
        const AxisTriple a = gen.axis();
        CHECK(structure_matrix(Side::left, a).is_almost_complex());
        CHECK(structure_matrix(Side::right, a).is_almost_complex());
        CHECK(HypercomplexFrame::left().structure(a) == structure_matrix(Side::left, a));
    }
}

TEST_CASE("left and right actions commute") {
    testing::Gen gen(13);
    for (int t = 0; t < 20; ++t) {
        const Quaternion u{gen.rational(), gen.rational(), gen.rational(), gen.rational()};
        const Quaternion v{gen.rational(), gen.rational(), gen.rational(), gen.rational()};
        const Mat4 L = multiplication_matrix(Side::left, u), R = multiplication_matrix(Side::right, v);
        CHECK(L * R == R * L);
    }
}

TEST_CASE("both standard frames satisfy the quaternion relations") {
    for (const auto& f : {HypercomplexFrame::left(), HypercomplexFrame::right()}) {
        const auto r = verify_frame(f);
        CHECK(r.ok());
        CHECK(f.I * f.J == f.K);
        CHECK(f.I * f.J == -(f.J * f.I));
    }
}

TEST_CASE("right frame stores -R_k as its third structure") {
    const auto f = HypercomplexFrame::right();
    CHECK(f.K == -multiplication_matrix(Side::right, Quaternion::k()));
    CHECK(f.I == multiplication_matrix(Side::right, Quaternion::i()));
}

TEST_CASE("corrupted frame reports the broken identity") {
    auto f = HypercomplexFrame::left();
    f.K = -f.K;
    const auto r = verify_frame(f);
    CHECK_FALSE(r.ok());
    CHECK(contains(r, kIdentityIJK));
    CHECK_FALSE(contains(r, kIdentityI2));
    CHECK_FALSE(contains(r, kIdentityAnti));

    auto g = HypercomplexFrame::left();
    g.J = g.I;
    const auto rg = verify_frame(g);
    CHECK(contains(rg, kIdentityAnti));
}

TEST_CASE("independence ranks") {
    const auto L = HypercomplexFrame::left(), R = HypercomplexFrame::right();
    CHECK(independence_rank(L, R) == 6);
    CHECK(independence_rank(L, L) == 3);
    auto mixed = R;
    mixed.K = L.K;
    CHECK(independence_rank(L, mixed) <= 5);
}

TEST_CASE("exact rank of small matrices") {
    CHECK(exact_rank({{1, 2}, {2, 4}}) == 1);
    CHECK(exact_rank({{1, 0, 0}, {0, Rational(1, 3), 0}, {1, 1, 0}}) == 2);
    CHECK(exact_rank({}) == 0);
}

TEST_CASE("non-unit axes are rejected") {
    CHECK_THROWS_AS(AxisTriple(1, 1, 0), std::invalid_argument);
    CHECK_THROWS_AS(AxisTriple(0, 0, 0), std::invalid_argument);
    CHECK_NOTHROW(AxisTriple(Rational(3, 5), Rational(4, 5), 0));
}

TEST_CASE("rational parsing") {
    CHECK(parse_rational("3/6") == Rational(1, 2));
    CHECK(parse_rational("-1.25") == Rational(-5, 4));
    CHECK(parse_rational("7") == 7);
    CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    Rational r;
    CHECK(exact_sqrt(Rational(9, 4), r));
    CHECK(r == Rational(3, 2));
    CHECK_FALSE(exact_sqrt(Rational(2), r));
}
