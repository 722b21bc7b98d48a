#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "hkt/forms.hpp"
#include "hkt/lattice_field.hpp"

namespace hkt {

/// deg = (i / 2 pi) * integral of F ^ omega over a torus of the given volume, for a line-bundle
/// curvature F (rank-1 u(1) lattice 2-form) and constant omega components in basis_masks(2)
/// order. Throws std::invalid_argument for non-scalar F or a non-positive volume.
double degree(const LatticeField& F, const Eigen::VectorXd& omega, double volume = 1.0);

/// Exact degree on the unit torus from the curvature written as F = 2 pi * F_hat, with constant
/// coefficients: deg = i * integral F_hat ^ omega. Throws std::domain_error if a coefficient is
/// not constant or the result is not real.
Rational chern_degree(const RationalForm& F_hat, const RationalForm& omega);

/// deg / rank; throws std::invalid_argument for rank <= 0.
Rational slope(const Rational& deg, int rank);
double slope(double deg, int rank);

enum class Verdict { stable, semistable, unstable };

std::string to_string(Verdict v);

/// Verdict relative to the supplied subobject slopes only: unstable if some mu(S) > mu(E),
/// semistable if the maximum equals mu(E), stable otherwise (including an empty list).
template <class T>
Verdict stability_compare(const std::vector<T>& sub_slopes, const T& total) {
    Verdict v = Verdict::stable;
    for (const auto& s : sub_slopes) {
        if (s > total) return Verdict::unstable;
        if (s == total) v = Verdict::semistable;
    }
    return v;
}

}  // namespace hkt
