#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "hkt/hermitian.hpp"

namespace hkt {

/// Multiplier q > 1 of the cyclic group acting on H minus the origin.
class HopfSpec {
public:
    /// Throws std::invalid_argument unless q > 1.
    explicit HopfSpec(Rational q);
    const Rational& q() const { return q_; }

private:
    Rational q_;
};

/// Raised by build_hopf when a structural identity does not hold; names the identity.
class HopfInvariantError : public std::runtime_error {
public:
    HopfInvariantError(std::string identity, const std::string& what)
        : std::runtime_error(what), identity_(std::move(identity)) {}
    const std::string& identity() const { return identity_; }

private:
    std::string identity_;
};

/// Which 2-forms are attached to the structures.
enum class MetricModel {
    hopf,  ///< omega_L = dd^c_L phi / phi
    flat,  ///< Hermitian forms of the Euclidean metric
};

using SymmetricField = std::array<std::array<ScalarField, 4>, 4>;

struct StructureData {
    std::string name;  ///< "I+", "J+", ..., "K-"
    Mat4 L;
    RationalForm omega{2};
    /// g_L(X, Y) = omega_L(X, L Y)
    SymmetricField metric;
    TorsionReport torsion;
};

struct HopfGeometry {
    Rational q;
    MetricModel model = MetricModel::hopf;
    ScalarField phi;
    HypercomplexFrame plus, minus;
    /// I+, J+, K+, I-, J-, K-
    std::array<StructureData, 6> structures;
    RationalForm H_plus{3}, H_minus{3};

    const StructureData& plus_structure(int idx) const { return structures[idx]; }
    const StructureData& minus_structure(int idx) const { return structures[3 + idx]; }
};

/// Builds the standard geometry (left frame as +, right frame as -) and asserts its invariants:
/// the six metrics coincide and every omega_L is invariant under x -> q x.
HopfGeometry build_hopf(const HopfSpec& spec);

/// Same construction with arbitrary frames and no invariant assertions; used for controls.
HopfGeometry build_geometry(const HopfSpec& spec, const HypercomplexFrame& plus,
                            const HypercomplexFrame& minus, MetricModel model);

/// omega_L for a structure L under the given model.
RationalForm structure_form(const Mat4& L, MetricModel model);

/// g(X, Y) = omega(X, L Y) as a symmetric matrix of fields.
SymmetricField metric_from_form(const RationalForm& omega, const Mat4& L);

/// Equal torsions within the side, dH = 0, H != 0; for the minus side also H- = -H+.
CheckList verify_strong_hkt(const HopfGeometry& geo, Side side);

/// H+ + H- = 0, both closed, frames independent, every cross pair bi-Hermitian.
CheckList verify_44(const HopfGeometry& geo);

/// Invariance of all omega_L and of H+- under x -> q x, with d phi as a non-invariant control.
CheckList verify_descent(const HopfGeometry& geo);

/// All six g_L coincide componentwise.
CheckList verify_common_metric(const HopfGeometry& geo);

/// dd^c_L omega_L = 0 for all six structures.
CheckList verify_gauduchon(const HopfGeometry& geo);

/// Structures aI + bJ + cK for the given rational unit axes give the geometry's metric and H.
CheckList verify_axis_family(const HopfGeometry& geo, const std::vector<AxisTriple>& axes);

/// Rational points on the unit sphere used for spot checks.
std::vector<AxisTriple> sample_axes();

}  // namespace hkt
