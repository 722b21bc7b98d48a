#include "hkt/bundle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace hkt {

double degree(const LatticeField& F, const Eigen::VectorXd& omega, double volume) {
    if (F.degree() != 2) throw std::invalid_argument("degree: curvature must be a 2-form");
    if (F.rank() != 1) throw std::invalid_argument("degree: curvature must be scalar (rank 1)");
    if (omega.size() != 6) throw std::invalid_argument("degree: omega needs 6 components");
    if (!(volume > 0.0)) throw std::invalid_argument("degree: volume must be positive");
    const auto& masks = basis_masks(2);
    cplx sum = 0;
    for (int j = 0; j < 6; ++j) {
        const auto comp = static_cast<BasisMask>(0xF ^ masks[j]);
        const int jc = static_cast<int>(std::find(masks.begin(), masks.end(), comp) - masks.begin());
        const double w = omega(jc) * wedge_sign(masks[j], comp);
        if (w == 0.0) continue;
        cplx mean = 0;
        for (int s = 0; s < F.sites(); ++s) mean += F.entry(j, 0, 0, s);
        sum += w * mean / static_cast<double>(F.sites());
    }
    return (cplx(0, 1) * sum * volume / (2 * std::numbers::pi)).real();
}

Rational chern_degree(const RationalForm& F_hat, const RationalForm& omega) {
    if (F_hat.degree() != 2 || omega.degree() != 2) throw std::invalid_argument("chern_degree: 2-forms expected");
    const ScalarField top = wedge(F_hat, omega).coeff(0xF);
    if (top.is_zero()) return 0;
    if (!top.is_constant()) throw std::domain_error("chern_degree: coefficients must be constant on the torus");
    const GaussianRational v = GaussianRational::i() * top.numerator().constant_term();
    if (sgn(v.im) != 0) throw std::domain_error("chern_degree: degree is not real; F_hat must be imaginary");
    return v.re;
}

Rational slope(const Rational& deg, int rank) {
    if (rank <= 0) throw std::invalid_argument("slope: rank must be positive");
    return deg / rank;
}

double slope(double deg, int rank) {
    if (rank <= 0) throw std::invalid_argument("slope: rank must be positive");
    return deg / rank;
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::stable: return "stable";
        case Verdict::semistable: return "semistable";
        default: return "unstable";
    }
}

}  // namespace hkt
