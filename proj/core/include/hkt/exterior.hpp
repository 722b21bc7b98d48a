#pragma once

#include <vector>

#include "hkt/forms.hpp"
#include "hkt/quaternion.hpp"

namespace hkt {

/// Global sign of the twisted differential: d^c_L := kTwistSign * (-1)^m L d L on m-forms.
/// Fixed so that dd^c_L(|x|^2) is a positive (1,1)-form; see twist_convention_holds().
inline constexpr int kTwistSign = -1;

/// Exact square matrix over Q(i), row-major.
using CMatrix = std::vector<std::vector<GaussianRational>>;

/// Matrix of the induced action alpha -> alpha(M., ..., M.) on m-form coefficients, indexed
/// [new basis][old basis] in basis_masks(m) order.
CMatrix form_action_matrix(const Mat4& m, int degree);

/// Matrix of the derivation alpha -> sum_j alpha(., M X_j, .) on m-form coefficients.
CMatrix derivation_matrix(const Mat4& m, int degree);

RationalForm apply_matrix(const CMatrix& mat, const RationalForm& a);

/// (L alpha)(X1..Xm) = alpha(L X1, ..., L Xm). Covectors transform by the transpose of L.
/// Throws std::invalid_argument unless L^2 = -Id.
RationalForm structure_action(const Mat4& L, const RationalForm& a);

/// d^c_L alpha. Throws like structure_action, and for 4-forms.
RationalForm twisted_d(const Mat4& L, const RationalForm& a);

/// Projection of the complexified form onto type (p,q) for L, where (1,0)-covectors are the
/// +i eigenspace of the transpose action. Throws std::invalid_argument if p + q != deg a.
RationalForm pq_project(const Mat4& L, const RationalForm& a, int p, int q);

/// del and delbar for a form of pure type (p,q).
RationalForm del(const Mat4& L, const RationalForm& a, int p, int q);
RationalForm delbar(const Mat4& L, const RationalForm& a, int p, int q);

/// Self-test: dd^c_L(|x|^2) = 4 g(L.,.) for the six standard structures of the left and right
/// frames, which is a positive (1,1)-form.
bool twist_convention_holds();

/// Symmetric positive-definite constant metric on the chart.
class ConstantMetric {
public:
    /// Throws std::invalid_argument if g is not symmetric positive definite.
    explicit ConstantMetric(Mat4 g);
    static ConstantMetric euclidean() { return ConstantMetric(Mat4::identity()); }

    const Mat4& matrix() const { return g_; }
    const Mat4& inverse() const { return inv_; }
    Rational determinant() const { return det_; }
    friend bool operator==(const ConstantMetric& a, const ConstantMetric& b) { return a.g_ == b.g_; }

private:
    Mat4 g_, inv_;
    Rational det_;
};

/// Pointwise bilinear pairing of m-forms induced by g.
ScalarField form_inner(const ConstantMetric& g, const RationalForm& a, const RationalForm& b);

/// Hodge star for the orientation dx0^dx1^dx2^dx3. Requires sqrt(det g) rational
/// (std::domain_error otherwise).
RationalForm hodge_star(const ConstantMetric& g, const RationalForm& a);

/// Lambda alpha with alpha ^ omega = (Lambda alpha) vol and vol = omega^omega / 2.
/// Throws std::domain_error if omega^omega is not an invertible multiple of dx0123.
ScalarField lambda_contract(const RationalForm& omega, const RationalForm& a);

/// Pullback under x -> q x. Throws std::invalid_argument for q = 0.
RationalForm scale_pullback(const RationalForm& a, const Rational& q);

}  // namespace hkt
