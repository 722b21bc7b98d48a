#include <doctest.h>

#include "gen.hpp"
#include "hkt/hermitian.hpp"

using namespace hkt;

namespace {

Mat4 diag(Rational a, Rational b, Rational c, Rational d) {
    Mat4 m;
    m(0, 0) = a;
    m(1, 1) = b;
    m(2, 2) = c;
    m(3, 3) = d;
    return m;
}

// omega(e_a, e_b) = g(L e_a, e_b) = (g L)_{ba} for the constant metric g.
RationalForm hermitian_form_oracle(const Mat4& g, const Mat4& L) {
    const Mat4 gL = g * L;
    RationalForm w(2);
    for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b)
            if (gL(b, a) != 0) w.set(BasisMask((1u << a) | (1u << b)), ScalarField(gL(b, a)));
    return w;
}

HermitianMetric hopf_metric() { return HermitianMetric::conformal(ScalarField(Polynomial(4), 1)); }

}  // namespace

TEST_CASE("Hermitian forms of the Euclidean metric") {
    const auto left = HypercomplexFrame::left();
    const auto g = HermitianMetric::euclidean();
    CHECK(hermitian_form(g, left.I) == RationalForm::basis({0, 1}) + RationalForm::basis({2, 3}));
    CHECK(hermitian_form(g, left.J) == RationalForm::basis({0, 2}) - RationalForm::basis({1, 3}));
    for (const auto& f : {left, HypercomplexFrame::right()})
        for (int k = 0; k < 3; ++k) {
            const RationalForm w = hermitian_form(g, f[k]);
            CHECK(w == hermitian_form_oracle(Mat4::identity(), f[k]));
            CHECK(wedge(w, w) == ScalarField(f.side == Side::left ? 2 : -2) * RationalForm::volume());
            CHECK(structure_action(f[k], w) == w);
            CHECK(pq_project(f[k], w, 2, 0).is_zero());
        }
}

TEST_CASE("Hermitian form of a non-Euclidean invariant metric") {
    testing::Gen gen(31);
    const auto left = HypercomplexFrame::left();
    for (int t = 0; t < 5; ++t) {
        const Mat4 L = left.structure(gen.axis());
        Mat4 g0 = diag(1, 2, 3, 4);
        g0(0, 1) = g0(1, 0) = Rational(1, 3);
        const ConstantMetric g = average_metric(ConstantMetric(g0), left);
        CHECK(hermitian_form(HermitianMetric::constant(g), L) == hermitian_form_oracle(g.matrix(), L));
    }
}

TEST_CASE("Hermitian condition") {
    const auto left = HypercomplexFrame::left();
    testing::Gen gen(32);
    for (int t = 0; t < 5; ++t) CHECK(check_hermitian(ConstantMetric::euclidean(), left.structure(gen.axis())));
    const ConstantMetric skewed(diag(1, 2, 1, 1));
    CHECK_FALSE(check_hermitian(skewed, left.I));
    CHECK_THROWS_AS(hermitian_form(HermitianMetric::constant(skewed), left.I), std::invalid_argument);
}

TEST_CASE("averaged metrics") {
    const auto left = HypercomplexFrame::left();
    CHECK(average_metric(ConstantMetric::euclidean(), left) == ConstantMetric::euclidean());
    const ConstantMetric avg = average_metric(ConstantMetric(diag(1, 2, 3, 4)), left);
    CHECK(avg.matrix() == Rational(5, 2) * Mat4::identity());

    testing::Gen gen(33);
    Mat4 g0 = diag(2, 3, 5, 7);
    g0(0, 2) = g0(2, 0) = 1;
    g0(1, 3) = g0(3, 1) = Rational(-1, 2);
    const ConstantMetric a = average_metric(ConstantMetric(g0), left);
    CHECK(average_metric(a, left) == a);
    for (int t = 0; t < 10; ++t) CHECK(check_hermitian(a, left.structure(gen.axis())));
}

TEST_CASE("torsion of flat and conformal metrics") {
    const auto left = HypercomplexFrame::left();
    const auto flat = bismut_torsion(HermitianMetric::euclidean(), left.I);
    CHECK(flat.kahler());
    CHECK(flat.torsion_H.is_zero());

    const auto hopf = bismut_torsion(hopf_metric(), left.I);
    CHECK_FALSE(hopf.torsion_H.is_zero());
    CHECK(hopf.strong());
    CHECK(hopf.torsion_T == ScalarField(kTorsionOverH) * hopf.torsion_H);
    CHECK(hopf.dH == exterior_d(hopf.torsion_H));

    // T = L d omega
    CHECK(hopf.torsion_T == structure_action(left.I, exterior_d(hopf.omega)));
}

TEST_CASE("Gauduchon defect") {
    const auto left = HypercomplexFrame::left(), right = HypercomplexFrame::right();
    CHECK(gauduchon_defect(HermitianMetric::euclidean(), left.I).is_zero());
    for (const auto& f : {left, right})
        for (int k = 0; k < 3; ++k) CHECK(gauduchon_defect(hopf_metric(), f[k]).is_zero());
    const ScalarField bump = ScalarField(1) + ScalarField::variable(0) * ScalarField::variable(0);
    CHECK_FALSE(gauduchon_defect(HermitianMetric::conformal(bump), left.I).is_zero());
}

TEST_CASE("HKT reports") {
    const auto left = HypercomplexFrame::left();
    const auto flat = hkt_report(HermitianMetric::euclidean(), left);
    CHECK(flat.hkt());
    CHECK(flat.hyperkahler());

    const auto hopf = hkt_report(hopf_metric(), left);
    CHECK(hopf.hkt());
    CHECK(hopf.strong);
    CHECK_FALSE(hopf.hyperkahler());
    CHECK(hopf.omega_is_20);
    CHECK(hopf.del_Omega.is_zero());
    CHECK(pq_project(left.I, hopf.Omega, 2, 0) == hopf.Omega);

    const ConstantMetric skewed(diag(1, 2, 1, 1));
    CHECK_THROWS_AS(hkt_report(HermitianMetric::constant(skewed), left), std::invalid_argument);
}

TEST_CASE("bi-Hermitian pairs") {
    const auto left = HypercomplexFrame::left(), right = HypercomplexFrame::right();
    CHECK(bihermitian_check(hopf_metric(), left.I, right.I));
    CHECK_FALSE(bihermitian_check(hopf_metric(), left.I, left.J));
    CHECK_FALSE(bihermitian_check(hopf_metric(), left.I, left.I));
    CHECK(bihermitian_check(HermitianMetric::euclidean(), left.I, right.I));
    CHECK(bihermitian_check(HermitianMetric::euclidean(), left.K, left.K));
    CHECK_THROWS_AS(bihermitian_check(HermitianMetric::constant(ConstantMetric(diag(1, 2, 1, 1))), left.I, right.I),
                    std::invalid_argument);
}
