#pragma once

#include <vector>

#include <Eigen/Dense>

#include "hkt/lattice_field.hpp"
#include "hkt/quaternion.hpp"

namespace hkt {

/// Flat 4-torus R^4 / Z^4 sampled on an N^4 grid, trivial rank-n bundle, constant hypercomplex frame.
struct TorusSpec {
    int N = 4;
    int n = 2;
    HypercomplexFrame frame = HypercomplexFrame::left();

    /// Throws std::invalid_argument unless N >= 3 and n >= 2.
    TorusSpec(int grid, int rank, HypercomplexFrame f = HypercomplexFrame::left());

    /// +1 when omega_I ^ omega_I is a positive multiple of dx0123, else -1. The Hodge star uses
    /// this orientation, so omega_I, omega_J, omega_K are self-dual.
    int orientation() const;
    LatticeField zero_form(int degree, Algebra alg = Algebra::su) const { return LatticeField(N, n, degree, alg); }
};

struct Connection {
    LatticeField A;
};

Connection zero_connection(const TorusSpec& spec);
/// Constant connection with A_mu = theta_mu * H for a fixed diagonal su(n) direction H.
Connection cartan_connection(const TorusSpec& spec, const std::array<double, 4>& theta);

/// Real matrix of a constant linear operator on form components (rows: output basis, columns:
/// input basis, both in basis_masks order).
using FormMatrix = Eigen::MatrixXd;

/// Induced action of a constant structure on p-forms.
FormMatrix structure_matrix_on_forms(const Mat4& L, int degree);
/// Euclidean Hodge star from p-forms to (4 - p)-forms for the given orientation sign.
FormMatrix hodge_matrix(int degree, int orientation);
/// Row vector w with Lambda beta = sum_J w_J beta_J for the Euclidean Hermitian form of L.
Eigen::RowVectorXd lambda_row(const Mat4& L);
/// Components of the Euclidean Hermitian form omega_L.
Eigen::VectorXd hermitian_coefficients(const Mat4& L);

/// Applies a constant component-mixing operator; the output has degree out_degree.
LatticeField apply_forms(const FormMatrix& M, const LatticeField& a, int out_degree);

/// Covariant exterior derivative on adjoint-valued p-forms, p <= 3.
LatticeField d_A(const Connection& A, const LatticeField& alpha);
/// Formal L^2 adjoint of d_A on p-forms, p >= 1.
LatticeField d_A_star(const Connection& A, const LatticeField& beta);
/// d^c_{L,A} = kTwistSign (-1)^p L d_A L on p-forms.
LatticeField twisted_d_A(const Connection& A, const Mat4& L, const LatticeField& alpha);
LatticeField hodge_star(const LatticeField& beta, int orientation);
/// Lambda contraction of a 2-form against omega_L; returns a 0-form.
LatticeField lambda_contract(const Mat4& L, const LatticeField& beta);

/// F = dA + A ^ A with spectral derivatives and pointwise products, filtered to the band.
LatticeField curvature(const Connection& A);

struct ASDResidual {
    LatticeField F_plus;
    double norm = 0.0;
};

/// F+ = (F + *F) / 2 and its L^2 norm.
ASDResidual asd_residual(const LatticeField& F, int orientation);

struct HEReport {
    /// Volume average of tr(i Lambda F) / n.
    double gamma = 0.0;
    /// L^2 norm of i Lambda F - gamma Id.
    double residual_norm = 0.0;
    /// L^2 norm of the (2,0) + (0,2) part of F.
    double non11_norm = 0.0;
    bool type_11 = true;
};

/// Hermitian-Einstein data of F with respect to omega_L. type_11 is false when the (2,0) + (0,2)
/// part exceeds tol relative to max(1, |F|).
HEReport he_residual(const LatticeField& F, const Mat4& L, double tol = 1e-10);

struct FlowOptions {
    double step = 0.01;
    int max_iters = 10000;
    /// Stop once |F+|^2 <= target.
    double target = 0.0;
};

struct FlowResult {
    Connection A;
    /// |F+|^2 after each accepted step, starting with the initial value.
    std::vector<double> energy;
    int iterations = 0;
    int halvings = 0;
    bool reached_target = false;
};

/// Gradient descent on |F+|^2 with gradient 2 d_A^* F+. A step that would raise the energy is
/// halved and retried, so the recorded energies never increase. Throws std::invalid_argument for
/// step <= 0 and std::runtime_error on non-finite values.
FlowResult ym_flow(const Connection& A0, int orientation, const FlowOptions& opts);

/// L^2 inner product -(1/vol) sum tr(a1_J a2_J), for fields of any equal shape.
double l2_inner(const LatticeField& a1, const LatticeField& a2);

}  // namespace hkt
