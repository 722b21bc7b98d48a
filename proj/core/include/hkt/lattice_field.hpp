#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

namespace hkt {

using cplx = std::complex<double>;

/// Value algebra of a lattice field: trace-free anti-Hermitian (su) or anti-Hermitian (u).
enum class Algebra { su, u };

/// Orthonormal basis T_a of su(n) (or u(n)) for <X, Y> = -tr(XY).
std::vector<Eigen::MatrixXcd> algebra_basis(int n, Algebra alg);

/// p-form on the periodic N^4 grid of the unit torus with matrix values.
///
/// Sites are indexed row-major, site = ((j0 N + j1) N + j2) N + j3, at x = j / N. Stored values are
/// kept anti-Hermitian (and trace-free for su) by projecting on write. Fields live in the
/// band-limited space |k_mu| < N/2; operations that can create Nyquist content call band_limit().
class LatticeField {
public:
    LatticeField() = default;
    LatticeField(int N, int n, int degree, Algebra alg = Algebra::su);

    int grid() const { return N_; }
    int rank() const { return n_; }
    int degree() const { return degree_; }
    Algebra algebra() const { return alg_; }
    int sites() const { return sites_; }
    int components() const { return comps_; }
    bool same_shape(const LatticeField& o) const;

    Eigen::MatrixXcd at(int comp, int site) const;
    /// Stores the anti-Hermitian (trace-free for su) part of m.
    void set(int comp, int site, const Eigen::MatrixXcd& m);
    void fill(int comp, const Eigen::MatrixXcd& m);

    /// Raw channel storage, [comp][entry][site] with entry = row * n + col.
    std::vector<cplx>& raw() { return data_; }
    const std::vector<cplx>& raw() const { return data_; }
    cplx& entry(int comp, int row, int col, int site) {
        return data_[(static_cast<std::size_t>(comp) * n_ * n_ + row * n_ + col) * sites_ + site];
    }
    const cplx& entry(int comp, int row, int col, int site) const {
        return data_[(static_cast<std::size_t>(comp) * n_ * n_ + row * n_ + col) * sites_ + site];
    }

    LatticeField& operator+=(const LatticeField& o);
    LatticeField& operator-=(const LatticeField& o);
    LatticeField& operator*=(double s);
    friend LatticeField operator+(LatticeField a, const LatticeField& b) { return a += b; }
    friend LatticeField operator-(LatticeField a, const LatticeField& b) { return a -= b; }
    friend LatticeField operator*(double s, LatticeField a) { return a *= s; }

    /// Remove Fourier modes with |k_mu| >= N/2 in some direction.
    void band_limit();
    /// Re-impose anti-Hermiticity (and tracelessness) on every stored value.
    void project_values();

    /// Every stored matrix equals the value at site 0.
    bool is_spatially_constant(double tol = 0.0) const;
    double max_abs() const;
    /// sqrt(mean over sites of sum_comp |X|_F^2).
    double l2_norm() const;

    /// Spatial coordinates of a site.
    std::array<double, 4> position(int site) const;
    std::array<int, 4> site_coords(int site) const;
    int site_index(const std::array<int, 4>& j) const;

private:
    int N_ = 0, n_ = 0, degree_ = 0, comps_ = 0, sites_ = 0;
    Algebra alg_ = Algebra::su;
    std::vector<cplx> data_;
};

/// Wavenumbers of the band-limited mode set, |k_mu| <= (N - 1) / 2 (Nyquist excluded for even N).
int band_radius(int N);
/// Signed wavenumber of FFT index j, or 0 for the Nyquist index of an even grid.
int signed_wavenumber(int j, int N);

/// Forward DFT of every channel: fhat(k) = (1/V) sum_j f(j) exp(-2 pi i k.j / N).
std::vector<cplx> to_spectral(const LatticeField& f);
/// Inverse of to_spectral; the result is projected onto the field's value algebra.
void from_spectral(LatticeField& f, const std::vector<cplx>& spectrum);

/// Spectral partial derivatives d/dx_mu of every component, mu = 0..3, in one transform.
std::array<LatticeField, 4> spectral_gradient(const LatticeField& f);

}  // namespace hkt
