#include <doctest.h>

#include "gen.hpp"
#include "hkt/exterior.hpp"

using namespace hkt;

namespace {

const Mat4& left_I() {
    static const Mat4 m = HypercomplexFrame::left().I;
    return m;
}

RationalForm sum_of_types(const Mat4& L, const RationalForm& a) {
    RationalForm s(a.degree());
    for (int p = 0; p <= a.degree(); ++p) s += pq_project(L, a, p, a.degree() - p);
    return s;
}

ScalarField x(int i) { return ScalarField::variable(i); }

}  // namespace

TEST_CASE("wedge of basis covectors") {
    CHECK(wedge(RationalForm::dx(0), RationalForm::dx(1)) == RationalForm::basis({0, 1}));
    CHECK(wedge(RationalForm::dx(1), RationalForm::dx(0)) == -RationalForm::basis({0, 1}));
    CHECK(RationalForm::basis({2, 0, 1}) == RationalForm::basis({0, 1, 2}));
    CHECK(RationalForm::basis({1, 0, 2, 3}) == -RationalForm::volume());
    CHECK(wedge(RationalForm::dx(2), RationalForm::dx(2)).is_zero());
    CHECK(wedge_sign(0b0010, 0b0001) == -1);
    CHECK(wedge_sign(0b0011, 0b0010) == 0);
    CHECK(mask_name(0b0101) == "dx0^dx2");
    CHECK(basis_masks(2).size() == 6);
    CHECK_THROWS_AS(wedge(RationalForm::basis({0, 1}), RationalForm::basis({1, 2, 3})), std::domain_error);
}

TEST_CASE("graded commutativity of the wedge product") {
    testing::Gen gen(21);
    for (int t = 0; t < 30; ++t) {
        const int p = static_cast<int>(gen.range(0, 2)), q = static_cast<int>(gen.range(0, 2));
        const auto a = gen.form(p), b = gen.form(q);
        const RationalForm ab = wedge(a, b), ba = wedge(b, a);
        CHECK(ab == (((p * q) % 2) ? -ba : ba));
    }
}

TEST_CASE("exterior derivative of a polynomial function") {
    // f = x0^2 x1 + 3 x2 x3
    const ScalarField f = x(0) * x(0) * x(1) + ScalarField(3) * x(2) * x(3);
    RationalForm expected(1);
    expected.set(0b0001, ScalarField(2) * x(0) * x(1));
    expected.set(0b0010, x(0) * x(0));
    expected.set(0b0100, ScalarField(3) * x(3));
    expected.set(0b1000, ScalarField(3) * x(2));
    CHECK(exterior_d(RationalForm::function(f)) == expected);
}

TEST_CASE("d of 1/phi") {
    // d(1/phi) = -2 sum x_a dx_a / phi^2
    RationalForm expected(1);
    for (int a = 0; a < 4; ++a) expected.set(BasisMask(1u << a), ScalarField(Polynomial::variable(a) * Polynomial(-2), 2));
    CHECK(exterior_d(RationalForm::function(ScalarField::inverse_phi())) == expected);
}

TEST_CASE("d squares to zero and satisfies graded Leibniz") {
    testing::Gen gen(22);
    for (int t = 0; t < 40; ++t) {
        const int p = static_cast<int>(gen.range(0, 2));
        const auto a = gen.form(p);
        CHECK(exterior_d(exterior_d(a)).is_zero());
        const int q = static_cast<int>(gen.range(0, 3 - p - 1 < 0 ? 0 : 3 - p - 1));
        const auto b = gen.form(q);
        const RationalForm lhs = exterior_d(wedge(a, b));
        RationalForm rhs = wedge(exterior_d(a), b);
        if (p % 2) rhs -= wedge(a, exterior_d(b));
        else rhs += wedge(a, exterior_d(b));
        CHECK(lhs == rhs);
    }
    CHECK_THROWS_AS(exterior_d(RationalForm::volume()), std::domain_error);
}

TEST_CASE("structure action on covectors") {
    CHECK(structure_action(left_I(), RationalForm::dx(0)) == -RationalForm::dx(1));
    CHECK(structure_action(left_I(), RationalForm::dx(1)) == RationalForm::dx(0));
    const Mat4 bad = Mat4::identity();
    CHECK_THROWS_AS(structure_action(bad, RationalForm::dx(0)), std::invalid_argument);
}

TEST_CASE("twisted differential of functions and of phi") {
    const ScalarField f = x(0) * x(2) + x(1);
    const RationalForm df = exterior_d(RationalForm::function(f));
    // d^c f (X) = -df(I X)
    CHECK(twisted_d(left_I(), RationalForm::function(f)) == -structure_action(left_I(), df));

    RationalForm expected(1);
    expected.set(0b0001, ScalarField(-2) * x(1));
    expected.set(0b0010, ScalarField(2) * x(0));
    expected.set(0b0100, ScalarField(-2) * x(3));
    expected.set(0b1000, ScalarField(2) * x(2));
    const RationalForm dc_phi = twisted_d(left_I(), RationalForm::function(ScalarField::phi()));
    CHECK(dc_phi == expected);
    CHECK(exterior_d(dc_phi) == ScalarField(4) * (RationalForm::basis({0, 1}) + RationalForm::basis({2, 3})));
    CHECK(twist_convention_holds());
}

TEST_CASE("del equals half of d + i d^c on functions") {
    testing::Gen gen(23);
    const GaussianRational half_i(Rational(0), Rational(1, 2));
    for (int t = 0; t < 20; ++t) {
        const RationalForm f = RationalForm::function(gen.field());
        const RationalForm expected =
            ScalarField(Rational(1, 2)) * exterior_d(f) + ScalarField(half_i) * twisted_d(left_I(), f);
        CHECK(del(left_I(), f, 0, 0) == expected);
        CHECK(pq_project(left_I(), exterior_d(f), 1, 0) == expected);
    }
}

TEST_CASE("type decomposition") {
    const GaussianRational i = GaussianRational::i();
    const RationalForm v10 = RationalForm::dx(0) + ScalarField(i) * RationalForm::dx(1);
    CHECK(pq_project(left_I(), v10, 1, 0) == v10);
    CHECK(pq_project(left_I(), v10, 0, 1).is_zero());
    const RationalForm omega = RationalForm::basis({0, 1}) + RationalForm::basis({2, 3});
    CHECK(pq_project(left_I(), omega, 1, 1) == omega);
    CHECK_THROWS_AS(pq_project(left_I(), omega, 2, 1), std::invalid_argument);

    testing::Gen gen(24);
    for (int t = 0; t < 30; ++t) {
        const int deg = static_cast<int>(gen.range(1, 3));
        const auto a = gen.form(deg, true);
        const Mat4 L = HypercomplexFrame::right().structure(gen.axis());
        CHECK(sum_of_types(L, a) == a);
        const int p = static_cast<int>(gen.range(0, deg));
        const auto once = pq_project(L, a, p, deg - p);
        CHECK(pq_project(L, once, p, deg - p) == once);
        if (deg == 3) {
            CHECK(pq_project(L, a, 3, 0).is_zero());
            CHECK(pq_project(L, a, 0, 3).is_zero());
        }
    }
}

TEST_CASE("Hodge star for the Euclidean metric") {
    const auto g = ConstantMetric::euclidean();
    CHECK(hodge_star(g, RationalForm::basis({0, 1})) == RationalForm::basis({2, 3}));
    CHECK(hodge_star(g, RationalForm::basis({0, 2})) == -RationalForm::basis({1, 3}));
    CHECK(hodge_star(g, RationalForm::function(1)) == RationalForm::volume());
    CHECK(hodge_star(g, RationalForm::volume()) == RationalForm::function(1));
    CHECK(hodge_star(g, RationalForm::dx(0)) == RationalForm::basis({1, 2, 3}));
}

TEST_CASE("Hodge star squares to the expected sign for non-diagonal metrics") {
    testing::Gen gen(25);
    for (int t = 0; t < 10; ++t) {
        // g = A^T A with A upper unitriangular has determinant 1
        Mat4 A = Mat4::identity();
        for (int r = 0; r < 4; ++r)
            for (int c = r + 1; c < 4; ++c) A(r, c) = gen.rational(2);
        const ConstantMetric g(A.transpose() * A);
        const auto a2 = gen.form(2), a1 = gen.form(1);
        CHECK(hodge_star(g, hodge_star(g, a2)) == a2);
        CHECK(hodge_star(g, hodge_star(g, a1)) == -a1);
    }
    Mat4 d = Mat4::identity();
    d(0, 0) = 2;
    CHECK_THROWS_AS(hodge_star(ConstantMetric(d), RationalForm::dx(0)), std::domain_error);
    Mat4 indefinite = Mat4::identity();
    indefinite(3, 3) = -1;
    CHECK_THROWS_AS(ConstantMetric{indefinite}, std::invalid_argument);
}

TEST_CASE("Lambda contraction") {
    const RationalForm omega = RationalForm::basis({0, 1}) + RationalForm::basis({2, 3});
    CHECK(lambda_contract(omega, omega) == ScalarField(2));
    CHECK(lambda_contract(omega, RationalForm::basis({0, 2})).is_zero());
    CHECK(lambda_contract(omega, RationalForm::basis({0, 1}) - RationalForm::basis({2, 3})).is_zero());
    CHECK(lambda_contract(omega, RationalForm::basis({0, 1})) == ScalarField(1));
}

TEST_CASE("scale pullback") {
    const Rational q(3, 2);
    CHECK(scale_pullback(RationalForm::dx(2), q) == ScalarField(q) * RationalForm::dx(2));
    CHECK(scale_pullback(RationalForm::function(ScalarField::phi()), q) ==
          RationalForm::function(ScalarField(Rational(q * q)) * ScalarField::phi()));
    const RationalForm homogeneous = ScalarField(Polynomial(1), 1) * RationalForm::basis({0, 3});
    CHECK(scale_pullback(homogeneous, q) == homogeneous);
    CHECK_THROWS_AS(scale_pullback(homogeneous, 0), std::invalid_argument);
}
