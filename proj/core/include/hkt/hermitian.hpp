#pragma once

#include <array>
#include <string>

#include "hkt/check.hpp"
#include "hkt/exterior.hpp"

namespace hkt {

/// g = factor * base, with base constant. The Hopf metric is 4/phi times the Euclidean metric.
struct HermitianMetric {
    ScalarField factor{1};
    ConstantMetric base = ConstantMetric::euclidean();

    static HermitianMetric euclidean() { return {}; }
    static HermitianMetric constant(ConstantMetric g) { return {ScalarField(1), std::move(g)}; }
    static HermitianMetric conformal(ScalarField f, ConstantMetric g = ConstantMetric::euclidean()) {
        return {std::move(f), std::move(g)};
    }
};

/// Ratio T / H between the Bismut torsion form T = L d omega and H = d^c_L omega under the
/// library's sign conventions. Holds exactly for every Hermitian pair because L omega = omega.
inline constexpr int kTorsionOverH = -1;

/// g(LX, LY) == g(X, Y), exactly.
bool check_hermitian(const ConstantMetric& g, const Mat4& L);
bool check_hermitian(const HermitianMetric& g, const Mat4& L);

/// omega_L(X, Y) = g(LX, Y). Throws std::invalid_argument if g is not L-Hermitian.
RationalForm hermitian_form(const HermitianMetric& g, const Mat4& L);

struct TorsionReport {
    RationalForm omega{2};
    RationalForm torsion_T{3};
    RationalForm torsion_H{3};
    RationalForm dH{4};

    /// T = 0: the Bismut connection is the Levi-Civita connection.
    bool kahler() const { return torsion_T.is_zero(); }
    bool strong() const { return dH.is_zero(); }
};

/// Builds T and H and asserts T = kTorsionOverH * H (std::logic_error otherwise).
TorsionReport torsion_from_form(const Mat4& L, RationalForm omega);

/// Throws std::invalid_argument for non-Hermitian pairs.
TorsionReport bismut_torsion(const HermitianMetric& g, const Mat4& L);

/// dd^c_L omega_L; zero iff g is Gauduchon for L (complex dimension 2).
RationalForm gauduchon_defect(const HermitianMetric& g, const Mat4& L);

struct HKTReport {
    RationalForm Omega{2};      ///< omega_J + i omega_K
    RationalForm del_Omega{3};  ///< (3,0)-part of d Omega with respect to I
    std::array<RationalForm, 3> torsions{RationalForm(3), RationalForm(3), RationalForm(3)};
    /// (H_I == H_J, H_J == H_K, H_I == H_K)
    std::array<bool, 3> torsion_match{};
    bool strong = false;
    bool omega_is_20 = false;

    const RationalForm& H() const { return torsions[0]; }
    bool hkt() const { return torsion_match[0] && torsion_match[1] && torsion_match[2]; }
    bool hyperkahler() const { return hkt() && H().is_zero(); }
};

/// Throws std::invalid_argument unless g is Hermitian for I, J and K.
HKTReport hkt_report(const HermitianMetric& g, const HypercomplexFrame& frame);

/// (g0 + g0(I.,I.) + g0(J.,J.) + g0(K.,K.)) / 4.
ConstantMetric average_metric(const ConstantMetric& g0, const HypercomplexFrame& frame);

/// T+ = -T- and dT+ = dT- = 0. Throws std::invalid_argument for non-Hermitian inputs.
bool bihermitian_check(const HermitianMetric& g, const Mat4& L_plus, const Mat4& L_minus);

}  // namespace hkt
