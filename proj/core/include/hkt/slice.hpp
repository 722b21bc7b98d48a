#pragma once

#include <array>
#include <vector>

#include <Eigen/Dense>

#include "hkt/check.hpp"
#include "hkt/gauge.hpp"

namespace hkt {

/// Kernel of a -> (d_A^+ a, Lambda d^c_L a) on band-limited adjoint-valued 1-forms.
struct TangentBasis {
    Connection base;
    Mat4 structure;
    std::vector<LatticeField> basis;
    /// gram(i, j) = l2_inner(basis[i], basis[j]).
    Eigen::MatrixXd gram;
    /// Matrices of I~, J~, K~ of the torus frame: L~ basis[j] = sum_i ops(i, j) basis[i].
    std::array<Eigen::MatrixXd, 3> ops;
    /// |L~ b - projection of L~ b onto the slice| maximized over the basis, per operator.
    std::array<double, 3> invariance_defect{};
    /// Largest value of the stacked operator on a basis element.
    double equation_residual = 0.0;
    /// Singular values classified as kernel, and the smallest one that was not.
    std::vector<double> kernel_singular_values;
    double smallest_nonkernel = 0.0;
    /// smallest_nonkernel / largest kernel value (infinite when the kernel values vanish).
    double gap = 0.0;
    bool well_conditioned = true;
    /// True when the per-Fourier-mode solver was used (spatially constant A).
    bool per_mode = false;

    int dimension() const { return static_cast<int>(basis.size()); }
};

inline constexpr double kGapThreshold = 1e3;

/// Precondition: |F+(A)| <= max(tol, 1e-12); std::invalid_argument otherwise. Singular values at
/// most tol * max(1, sigma_max) form the kernel; a gap below kGapThreshold is reported through
/// well_conditioned.
TangentBasis horizontal_slice(const TorusSpec& spec, const Connection& A, const Mat4& L, double tol = 1e-10);

/// (P+ d_A a, Lambda d^c_L a) evaluated on a lattice 1-form; returns the L^2 norm.
double slice_equation_residual(const TorusSpec& spec, const Connection& A, const Mat4& L, const LatticeField& a);

/// L~ a = i (a^{0,1} - a^{1,0}), computed per site through the complexified splitting and
/// compared with -L a. Throws std::logic_error if the two disagree beyond round-off.
LatticeField induced_structure(const Mat4& L, const LatticeField& a);

/// Residual of d_A^* a = Lambda d^c_L a + *(d^c_L omega_L ^ a); returns its L^2 norm.
double coulomb_identity_residual(const TorusSpec& spec, const Connection& A, const Mat4& L, const LatticeField& a);

/// Orthogonal projection onto span(tb.basis).
LatticeField project_to_slice(const TangentBasis& tb, const LatticeField& a);

/// Largest distance between unit elements of one slice and the other slice; 1 if dimensions differ.
double subspace_distance(const TangentBasis& a, const TangentBasis& b);

enum class ModuliControl { none, negate_K };

struct ModuliReport {
    CheckList checks;
    int dimension = 0;
    /// Slices for J and K of the frame, used for the L-independence checks.
    double distance_J = 0.0, distance_K = 0.0;
};

/// Quaternionic identities of I~, J~, K~ on the slice, their L^2 isometry, slice invariance and
/// L-independence, each compared against tol.
ModuliReport verify_moduli_structure(const TorusSpec& spec, const TangentBasis& tb, double tol = 1e-10,
                                     ModuliControl control = ModuliControl::none);

/// omega~(a1, a2) = integral of omega_L ^ tr(a1 ^ a2), L = tb.structure. Throws
/// std::invalid_argument if an input is farther than slice_tol (relative) from the slice.
double moduli_hermitian_form(const TangentBasis& tb, const LatticeField& a1, const LatticeField& a2,
                             double slice_tol = 1e-8);

/// Gaussian samples (seeded) projected onto the band-limited space.
LatticeField random_field(const TorusSpec& spec, int degree, std::uint64_t seed, double amplitude = 1.0);

}  // namespace hkt
