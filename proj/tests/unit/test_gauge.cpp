#include <doctest.h>

#include <cmath>
#include <numbers>

#include "hkt/gauge.hpp"
#include "hkt/slice.hpp"

using namespace hkt;
using Eigen::MatrixXcd;

namespace {

constexpr double kTwoPi = 2 * std::numbers::pi;
const cplx I1{0.0, 1.0};

MatrixXcd pauli(int k) {
    MatrixXcd s(2, 2);
    if (k == 1) s << 0, 1, 1, 0;
    if (k == 2) s << 0, -I1, I1, 0;
    if (k == 3) s << 1, 0, 0, -1;
    return s;
}

double max_diff(const LatticeField& a, const LatticeField& b) {
    double m = 0;
    for (std::size_t i = 0; i < a.raw().size(); ++i) m = std::max(m, std::abs(a.raw()[i] - b.raw()[i]));
    return m;
}

// Euclidean Hodge star on 2-form components (01, 02, 03, 12, 13, 23), written out.
Eigen::Matrix<double, 6, 6> star_table() {
    Eigen::Matrix<double, 6, 6> s = Eigen::Matrix<double, 6, 6>::Zero();
    s(5, 0) = 1;
    s(4, 1) = -1;
    s(3, 2) = 1;
    s(2, 3) = 1;
    s(1, 4) = -1;
    s(0, 5) = 1;
    return s;
}

}  // namespace

TEST_CASE("algebra bases are orthonormal for -tr") {
    for (int n : {2, 3, 4})
        for (Algebra alg : {Algebra::su, Algebra::u}) {
            const auto T = algebra_basis(n, alg);
            CHECK(T.size() == static_cast<std::size_t>(alg == Algebra::su ? n * n - 1 : n * n));
            for (std::size_t a = 0; a < T.size(); ++a) {
                CHECK((T[a] + T[a].adjoint()).norm() < 1e-15);
                if (alg == Algebra::su) CHECK(std::abs(T[a].trace()) < 1e-15);
                for (std::size_t b = 0; b < T.size(); ++b)
                    CHECK(std::abs(-(T[a] * T[b]).trace() - (a == b ? 1.0 : 0.0)) < 1e-14);
            }
        }
}

TEST_CASE("stored values are projected onto the algebra") {
    LatticeField f(3, 2, 1);
    MatrixXcd m(2, 2);
    m << 1.0 + 2.0 * I1, 3.0, -1.0, 4.0 * I1;
    f.set(0, 5, m);
    const MatrixXcd v = f.at(0, 5);
    CHECK((v + v.adjoint()).norm() < 1e-15);
    CHECK(std::abs(v.trace()) < 1e-15);
    CHECK(f.site_index(f.site_coords(37)) == 37);
    CHECK(f.position(f.site_index({1, 0, 2, 0}))[2] == doctest::Approx(2.0 / 3.0));
}

TEST_CASE("spectral round trip and gradient of a single mode") {
    const int N = 5;
    LatticeField f(N, 2, 0);
    const MatrixXcd T = algebra_basis(2, Algebra::su)[1];
    for (int s = 0; s < f.sites(); ++s) f.set(0, s, std::sin(kTwoPi * f.position(s)[1]) * T);

    LatticeField g = f;
    from_spectral(g, to_spectral(f));
    CHECK(max_diff(f, g) < 1e-14);

    const auto grad = spectral_gradient(f);
    double err = 0, other = 0;
    for (int s = 0; s < f.sites(); ++s) {
        const MatrixXcd expected = kTwoPi * std::cos(kTwoPi * f.position(s)[1]) * T;
        err = std::max(err, (grad[1].at(0, s) - expected).norm());
        other = std::max(other, grad[0].at(0, s).norm() + grad[2].at(0, s).norm() + grad[3].at(0, s).norm());
    }
    CHECK(err < 1e-12);
    CHECK(other < 1e-12);
    CHECK(band_radius(4) == 1);
    CHECK(band_radius(5) == 2);
    CHECK(signed_wavenumber(3, 4) == -1);
    CHECK(signed_wavenumber(2, 4) == 0);
}

TEST_CASE("band limiting removes Nyquist content") {
    LatticeField f(4, 2, 0);
    const MatrixXcd T = algebra_basis(2, Algebra::su)[0];
    for (int s = 0; s < f.sites(); ++s) f.set(0, s, std::cos(std::numbers::pi * 4 * f.position(s)[3]) * T);
    CHECK(f.max_abs() > 0.5);
    f.band_limit();
    CHECK(f.max_abs() < 1e-14);
}

TEST_CASE("curvature of constant connections") {
    const TorusSpec spec(3, 2);
    CHECK(curvature(zero_connection(spec)).max_abs() == 0.0);
    CHECK(curvature(cartan_connection(spec, {0.3, 0.1, -0.2, 0.7})).max_abs() == 0.0);

    const double a = 0.4, b = -1.3;
    const MatrixXcd A0 = a * I1 * pauli(1), A1 = b * I1 * pauli(2);
    Connection A{spec.zero_form(1)};
    A.A.fill(0, A0);
    A.A.fill(1, A1);
    const LatticeField F = curvature(A);
    const MatrixXcd bracket = A0 * A1 - A1 * A0;
    CHECK((F.at(0, 7) - bracket).norm() < 1e-14);
    for (int c = 1; c < 6; ++c) CHECK(F.at(c, 7).norm() < 1e-14);
    CHECK(F.is_spatially_constant(1e-14));

    // Self-dual part against the 6x6 projector built from the star table.
    const Eigen::Matrix<double, 6, 6> P = 0.5 * (Eigen::Matrix<double, 6, 6>::Identity() + star_table());
    double expected_sq = 0;
    for (int r = 0; r < 6; ++r) {
        MatrixXcd m = MatrixXcd::Zero(2, 2);
        for (int c = 0; c < 6; ++c) m += P(r, c) * F.at(c, 0);
        expected_sq += m.squaredNorm();
    }
    const auto res = asd_residual(F, spec.orientation());
    CHECK(res.norm == doctest::Approx(std::sqrt(expected_sq)).epsilon(1e-13));
    CHECK(res.norm == doctest::Approx(bracket.norm() / std::sqrt(2.0)).epsilon(1e-13));
}

TEST_CASE("ASD and SD basis forms") {
    const TorusSpec spec(3, 2);
    CHECK(spec.orientation() == 1);
    const MatrixXcd xi = algebra_basis(2, Algebra::su)[2];
    LatticeField asd = spec.zero_form(2), sd = spec.zero_form(2);
    asd.fill(0, xi);
    asd.fill(5, -xi);
    sd.fill(0, xi);
    sd.fill(5, xi);
    CHECK(asd_residual(asd, 1).norm < 1e-15);
    const auto r = asd_residual(sd, 1);
    CHECK(max_diff(r.F_plus, sd) < 1e-15);
    CHECK(hodge_star(hodge_star(sd, 1), 1).max_abs() == doctest::Approx(sd.max_abs()));
}

TEST_CASE("Hermitian-Einstein residual") {
    const TorusSpec spec(3, 2);
    const Mat4& L = spec.frame.I;

    LatticeField asd = spec.zero_form(2);
    asd.fill(0, algebra_basis(2, Algebra::su)[0]);
    asd.fill(5, -algebra_basis(2, Algebra::su)[0]);
    const auto h0 = he_residual(asd, L);
    CHECK(std::abs(h0.gamma) < 1e-15);
    CHECK(h0.residual_norm < 1e-15);
    CHECK(h0.type_11);

    // omega_I (x) i c Id in u(2): i Lambda F = -2c Id
    const double c = 0.7;
    LatticeField central(3, 2, 2, Algebra::u);
    central.fill(0, c * I1 * MatrixXcd::Identity(2, 2));
    central.fill(5, c * I1 * MatrixXcd::Identity(2, 2));
    const auto h1 = he_residual(central, L);
    CHECK(h1.gamma == doctest::Approx(-2 * c));
    CHECK(h1.residual_norm < 1e-14);

    // omega_I (x) i D with D traceless diagonal: gamma 0, residual |2 D|
    MatrixXcd D = MatrixXcd::Zero(2, 2);
    D(0, 0) = 0.5;
    D(1, 1) = -0.5;
    LatticeField traceless = spec.zero_form(2);
    traceless.fill(0, I1 * D);
    traceless.fill(5, I1 * D);
    const auto h2 = he_residual(traceless, L);
    CHECK(std::abs(h2.gamma) < 1e-15);
    CHECK(h2.residual_norm == doctest::Approx(2 * D.norm()));

    // Re(dz1 ^ dz2) = dx02 - dx13 is of type (2,0) + (0,2)
    LatticeField f20 = spec.zero_form(2);
    f20.fill(1, algebra_basis(2, Algebra::su)[0]);
    f20.fill(4, -algebra_basis(2, Algebra::su)[0]);
    const auto h3 = he_residual(f20, L);
    CHECK_FALSE(h3.type_11);
    CHECK(h3.non11_norm > 0.5);
}

TEST_CASE("d_A* is the adjoint of d_A") {
    const TorusSpec spec(4, 2);
    Connection A{random_field(spec, 1, 5, 0.3)};
    for (int p = 0; p <= 2; ++p) {
        const LatticeField a = random_field(spec, p, 10 + p), b = random_field(spec, p + 1, 20 + p);
        const double lhs = l2_inner(d_A(A, a), b), rhs = l2_inner(a, d_A_star(A, b));
        CHECK(std::abs(lhs - rhs) < 1e-12 * std::max(1.0, std::abs(lhs)));
    }
    // d_A d_A a = [F, a] vanishes for flat A
    const Connection flat = cartan_connection(spec, {0.31, 0.17, 0.23, 0.41});
    const LatticeField a = random_field(spec, 1, 31);
    CHECK(d_A(flat, d_A(flat, a)).max_abs() < 1e-11);
}

TEST_CASE("Lambda d^c_L equals d^* on 1-forms of the flat torus") {
    const TorusSpec spec(4, 3);
    const LatticeField a = random_field(spec, 1, 41);
    for (int k = 0; k < 3; ++k) {
        const LatticeField lhs = lambda_contract(spec.frame[k], twisted_d_A(zero_connection(spec), spec.frame[k], a));
        const LatticeField rhs = d_A_star(zero_connection(spec), a);
        CHECK(max_diff(lhs, rhs) < 1e-11);
        CHECK(coulomb_identity_residual(spec, zero_connection(spec), spec.frame[k], a) < 1e-10);
    }
}

TEST_CASE("flow preconditions and fixed points") {
    const TorusSpec spec(3, 2);
    const Connection flat = cartan_connection(spec, {0.31, 0.17, 0.23, 0.41});
    CHECK_THROWS_AS(ym_flow(flat, 1, {0.0, 10, 0.0}), std::invalid_argument);
    CHECK_THROWS_AS(ym_flow(flat, 1, {-1.0, 10, 0.0}), std::invalid_argument);
    const FlowResult r = ym_flow(flat, 1, {0.01, 10, 0.0});
    CHECK(r.energy.front() == 0.0);
    CHECK(max_diff(r.A.A, flat.A) < 1e-15);
}

TEST_CASE("flow energies never increase") {
    const TorusSpec spec(3, 2);
    Connection A = cartan_connection(spec, {0.31, 0.17, 0.23, 0.41});
    A.A += random_field(spec, 1, 7, 0.05);
    const FlowResult r = ym_flow(A, 1, {0.05, 200, 0.0});
    REQUIRE(r.energy.size() > 2);
    for (std::size_t i = 1; i < r.energy.size(); ++i) CHECK(r.energy[i] <= r.energy[i - 1]);
    CHECK(r.energy.back() < r.energy.front());
}
