#include "hkt/exterior.hpp"

#include <array>
#include <stdexcept>

namespace hkt {

namespace {

/// det of an m x m exact matrix, m <= 4, by cofactor expansion.
Rational det(const std::vector<std::vector<Rational>>& a) {
    const std::size_t n = a.size();
    if (n == 0) return 1;
    if (n == 1) return a[0][0];
    Rational s = 0;
    for (std::size_t c = 0; c < n; ++c) {
        if (sgn(a[0][c]) == 0) continue;
        std::vector<std::vector<Rational>> minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<Rational> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != c) row.push_back(a[r][k]);
            minor.push_back(std::move(row));
        }
        Rational term = a[0][c] * det(minor);
        if (c % 2) s -= term; else s += term;
    }
    return s;
}

/// dx^I(v_1, ..., v_m) for column vectors v.
Rational evaluate_basis(BasisMask I, const std::vector<std::array<Rational, 4>>& vs) {
    const auto rows = mask_indices(I);
    std::vector<std::vector<Rational>> a(rows.size(), std::vector<Rational>(vs.size()));
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < vs.size(); ++c) a[r][c] = vs[c][rows[r]];
    return det(a);
}

std::array<Rational, 4> unit(int j) {
    std::array<Rational, 4> e{0, 0, 0, 0};
    e[j] = 1;
    return e;
}

std::array<Rational, 4> column(const Mat4& m, int j) { return {m(0, j), m(1, j), m(2, j), m(3, j)}; }

CMatrix identity_matrix(std::size_t n) {
    CMatrix id(n, std::vector<GaussianRational>(n));
    for (std::size_t i = 0; i < n; ++i) id[i][i] = 1;
    return id;
}

CMatrix multiply(const CMatrix& a, const CMatrix& b) {
    const std::size_t n = a.size();
    CMatrix c(n, std::vector<GaussianRational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            if (a[i][k].is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
        }
    return c;
}

void require_complex_structure(const Mat4& L) {
    if (!L.is_almost_complex())
        throw std::invalid_argument("matrix does not square to -Id: " + to_string(L));
}

/// Sum over (p', q') present in complex dimension 2.
bool valid_type(int p, int q) { return p >= 0 && q >= 0 && p <= 2 && q <= 2; }

}  // namespace

CMatrix form_action_matrix(const Mat4& m, int degree) {
    const auto& masks = basis_masks(degree);
    CMatrix out(masks.size(), std::vector<GaussianRational>(masks.size()));
    for (std::size_t jn = 0; jn < masks.size(); ++jn) {
        std::vector<std::array<Rational, 4>> images;
        for (int j : mask_indices(masks[jn])) images.push_back(column(m, j));
        for (std::size_t io = 0; io < masks.size(); ++io) out[jn][io] = evaluate_basis(masks[io], images);
    }
    return out;
}

CMatrix derivation_matrix(const Mat4& m, int degree) {
    const auto& masks = basis_masks(degree);
    CMatrix out(masks.size(), std::vector<GaussianRational>(masks.size()));
    for (std::size_t jn = 0; jn < masks.size(); ++jn) {
        const auto idx = mask_indices(masks[jn]);
        for (std::size_t p = 0; p < idx.size(); ++p) {
            std::vector<std::array<Rational, 4>> vs;
            for (std::size_t k = 0; k < idx.size(); ++k) vs.push_back(k == p ? column(m, idx[k]) : unit(idx[k]));
            for (std::size_t io = 0; io < masks.size(); ++io) out[jn][io] += evaluate_basis(masks[io], vs);
        }
    }
    return out;
}

RationalForm apply_matrix(const CMatrix& mat, const RationalForm& a) {
    const auto& masks = basis_masks(a.degree());
    RationalForm out(a.degree());
    for (std::size_t jn = 0; jn < masks.size(); ++jn) {
        ScalarField s;
        for (std::size_t io = 0; io < masks.size(); ++io) {
            if (mat[jn][io].is_zero()) continue;
            const ScalarField& c = a.coeff(masks[io]);
            if (!c.is_zero()) s += mat[jn][io] * c;
        }
        out.set(masks[jn], std::move(s));
    }
    return out;
}

RationalForm structure_action(const Mat4& L, const RationalForm& a) {
    require_complex_structure(L);
    return apply_matrix(form_action_matrix(L, a.degree()), a);
}

RationalForm twisted_d(const Mat4& L, const RationalForm& a) {
    RationalForm out = structure_action(L, exterior_d(structure_action(L, a)));
    const int sign = kTwistSign * (a.degree() % 2 ? -1 : 1);
    return ScalarField(sign) * std::move(out);
}

RationalForm pq_project(const Mat4& L, const RationalForm& a, int p, int q) {
    require_complex_structure(L);
    if (p < 0 || q < 0 || p + q != a.degree())
        throw std::invalid_argument("type (" + std::to_string(p) + "," + std::to_string(q) +
                                    ") does not match form degree " + std::to_string(a.degree()));
    if (!valid_type(p, q)) return RationalForm(a.degree());
    // The derivation induced by L acts on (p,q)-forms by i(p - q); project by Lagrange interpolation.
    const CMatrix D = derivation_matrix(L, a.degree());
    const std::size_t n = D.size();
    const GaussianRational target(0, p - q);
    CMatrix proj = identity_matrix(n);
    for (int pp = 0; pp <= a.degree(); ++pp) {
        const int qq = a.degree() - pp;
        if (pp == p || !valid_type(pp, qq)) continue;
        const GaussianRational other(0, pp - qq);
        const GaussianRational scale = GaussianRational(1) / (target - other);
        CMatrix factor = D;
        for (std::size_t i = 0; i < n; ++i) {
            factor[i][i] -= other;
            for (std::size_t j = 0; j < n; ++j) factor[i][j] *= scale;
        }
        proj = multiply(factor, proj);
    }
    return apply_matrix(proj, a);
}

RationalForm del(const Mat4& L, const RationalForm& a, int p, int q) {
    return pq_project(L, exterior_d(a), p + 1, q);
}

RationalForm delbar(const Mat4& L, const RationalForm& a, int p, int q) {
    return pq_project(L, exterior_d(a), p, q + 1);
}

bool twist_convention_holds() {
    const RationalForm phi = RationalForm::function(ScalarField::phi());
    for (const auto& frame : {HypercomplexFrame::left(), HypercomplexFrame::right()})
        for (int idx = 0; idx < 3; ++idx) {
            const Mat4& L = frame[idx];
            RationalForm expected(2);
            for (BasisMask m : basis_masks(2)) {
                const auto ij = mask_indices(m);
                // g(L e_a, e_b) with g Euclidean is L(b, a).
                expected.set(m, ScalarField(GaussianRational(4 * L(ij[1], ij[0]))));
            }
            if (exterior_d(twisted_d(L, phi)) != expected) return false;
        }
    return true;
}

ConstantMetric::ConstantMetric(Mat4 g) : g_(std::move(g)) {
    if (g_ != g_.transpose()) throw std::invalid_argument("metric is not symmetric");
    // Sylvester: all leading principal minors positive.
    for (int k = 1; k <= 4; ++k) {
        std::vector<std::vector<Rational>> a(k, std::vector<Rational>(k));
        for (int r = 0; r < k; ++r)
            for (int c = 0; c < k; ++c) a[r][c] = g_(r, c);
        if (sgn(det(a)) <= 0) throw std::invalid_argument("metric is not positive definite");
    }
    std::vector<std::vector<Rational>> full(4, std::vector<Rational>(4));
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) full[r][c] = g_(r, c);
    det_ = det(full);
    // Inverse by the adjugate.
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) {
            std::vector<std::vector<Rational>> minor;
            for (int rr = 0; rr < 4; ++rr) {
                if (rr == c) continue;
                std::vector<Rational> row;
                for (int cc = 0; cc < 4; ++cc)
                    if (cc != r) row.push_back(g_(rr, cc));
                minor.push_back(std::move(row));
            }
            Rational cof = det(minor);
            if ((r + c) % 2) cof = -cof;
            inv_(r, c) = cof / det_;
        }
}

namespace {

Rational induced_inner(const ConstantMetric& g, BasisMask I, BasisMask J) {
    const auto ri = mask_indices(I), rj = mask_indices(J);
    std::vector<std::vector<Rational>> a(ri.size(), std::vector<Rational>(rj.size()));
    for (std::size_t r = 0; r < ri.size(); ++r)
        for (std::size_t c = 0; c < rj.size(); ++c) a[r][c] = g.inverse()(ri[r], rj[c]);
    return det(a);
}

}  // namespace

ScalarField form_inner(const ConstantMetric& g, const RationalForm& a, const RationalForm& b) {
    if (a.degree() != b.degree()) throw std::domain_error("inner product of forms of different degree");
    ScalarField s;
    for (const auto& [ma, fa] : a.components())
        for (const auto& [mb, fb] : b.components()) {
            Rational w = induced_inner(g, ma, mb);
            if (sgn(w) != 0) s += GaussianRational(w) * (fa * fb);
        }
    return s;
}

RationalForm hodge_star(const ConstantMetric& g, const RationalForm& a) {
    Rational root;
    if (!exact_sqrt(g.determinant(), root))
        throw std::domain_error("sqrt(det g) is irrational; exact Hodge star unavailable");
    const int m = a.degree();
    RationalForm out(4 - m);
    for (BasisMask K : basis_masks(m)) {
        const BasisMask comp = static_cast<BasisMask>(0xF & ~K);
        ScalarField s;
        for (const auto& [mi, fi] : a.components()) {
            Rational w = induced_inner(g, K, mi);
            if (sgn(w) != 0) s += GaussianRational(w) * fi;
        }
        out.set(comp, GaussianRational(root * wedge_sign(K, comp)) * s);
    }
    return out;
}

ScalarField lambda_contract(const RationalForm& omega, const RationalForm& a) {
    if (omega.degree() != 2 || a.degree() != 2) throw std::domain_error("Lambda contracts 2-forms by a 2-form");
    const ScalarField top = wedge(omega, omega).coeff(0xF);
    if (top.is_zero()) throw std::domain_error("degenerate omega: omega ^ omega = 0");
    return (GaussianRational(2) * wedge(a, omega).coeff(0xF)).divide_exact(top);
}

RationalForm scale_pullback(const RationalForm& a, const Rational& q) {
    if (sgn(q) == 0) throw std::invalid_argument("scale factor must be nonzero");
    Rational qm = 1;
    for (int i = 0; i < a.degree(); ++i) qm *= q;
    RationalForm out(a.degree());
    for (const auto& [m, f] : a.components()) out.set(m, GaussianRational(qm) * f.scaled(q));
    return out;
}

}  // namespace hkt
