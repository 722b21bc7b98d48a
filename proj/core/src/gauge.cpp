#include "hkt/gauge.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hkt/exterior.hpp"
#include "hkt/hermitian.hpp"

namespace hkt {

namespace {

int mask_position(BasisMask m, int degree) {
    const auto& masks = basis_masks(degree);
    const auto it = std::find(masks.begin(), masks.end(), m);
    if (it == masks.end()) throw std::logic_error("mask not of the requested degree");
    return static_cast<int>(it - masks.begin());
}

double to_double(const ScalarField& f) {
    if (f.is_zero()) return 0.0;
    if (!f.is_constant()) throw std::logic_error("expected a constant coefficient");
    const GaussianRational c = f.numerator().constant_term();
    if (sgn(c.im) != 0) throw std::logic_error("expected a real coefficient");
    return c.re.get_d();
}

template <class Op>
FormMatrix tabulate(Op op, int in_degree, int out_degree) {
    const auto& in = basis_masks(in_degree);
    const auto& out = basis_masks(out_degree);
    FormMatrix M = FormMatrix::Zero(static_cast<int>(out.size()), static_cast<int>(in.size()));
    for (std::size_t c = 0; c < in.size(); ++c) {
        RationalForm e(in_degree);
        e.set(in[c], 1);
        const RationalForm img = op(e);
        for (std::size_t r = 0; r < out.size(); ++r) M(static_cast<int>(r), static_cast<int>(c)) = to_double(img.coeff(out[r]));
    }
    return M;
}

const cplx* channel(const LatticeField& f, int comp) {
    return f.raw().data() + static_cast<std::size_t>(comp) * f.rank() * f.rank() * f.sites();
}

cplx* channel(LatticeField& f, int comp) {
    return f.raw().data() + static_cast<std::size_t>(comp) * f.rank() * f.rank() * f.sites();
}

/// out[oc] += coeff * [a[ac], b[bc]] at every site.
void add_commutator(LatticeField& out, int oc, const LatticeField& a, int ac, const LatticeField& b, int bc,
                    double coeff) {
    const int n = out.rank();
    const std::size_t V = out.sites();
    const cplx* pa = channel(a, ac);
    const cplx* pb = channel(b, bc);
    cplx* po = channel(out, oc);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            cplx* dst = po + (r * n + c) * V;
            for (int k = 0; k < n; ++k) {
                const cplx* a_rk = pa + (r * n + k) * V;
                const cplx* b_kc = pb + (k * n + c) * V;
                const cplx* b_rk = pb + (r * n + k) * V;
                const cplx* a_kc = pa + (k * n + c) * V;
                for (std::size_t s = 0; s < V; ++s) dst[s] += coeff * (a_rk[s] * b_kc[s] - b_rk[s] * a_kc[s]);
            }
        }
}

/// out[oc] += coeff * f[fc]
void add_channel(LatticeField& out, int oc, const LatticeField& f, int fc, double coeff) {
    const std::size_t len = static_cast<std::size_t>(out.rank()) * out.rank() * out.sites();
    const cplx* src = channel(f, fc);
    cplx* dst = channel(out, oc);
    for (std::size_t i = 0; i < len; ++i) dst[i] += coeff * src[i];
}

void require_connection(const Connection& A, const LatticeField& f) {
    if (A.A.degree() != 1) throw std::invalid_argument("connection must be a 1-form");
    if (A.A.grid() != f.grid() || A.A.rank() != f.rank())
        throw std::invalid_argument("connection and field live on different lattices");
}

void require_finite(const LatticeField& f) {
    for (const auto& v : f.raw())
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            throw std::runtime_error("non-finite value in lattice field");
}

}  // namespace

TorusSpec::TorusSpec(int grid, int rank, HypercomplexFrame f) : N(grid), n(rank), frame(std::move(f)) {
    if (N < 3) throw std::invalid_argument("torus grid must have N >= 3");
    if (n < 2) throw std::invalid_argument("bundle rank must be n >= 2");
}

int TorusSpec::orientation() const {
    const RationalForm w = hermitian_form(HermitianMetric::euclidean(), frame.I);
    return to_double(wedge(w, w).coeff(0xF)) > 0 ? 1 : -1;
}

Connection zero_connection(const TorusSpec& spec) { return {spec.zero_form(1)}; }

Connection cartan_connection(const TorusSpec& spec, const std::array<double, 4>& theta) {
    Eigen::MatrixXcd H = Eigen::MatrixXcd::Zero(spec.n, spec.n);
    H(0, 0) = cplx(0, std::sqrt(0.5));
    H(1, 1) = cplx(0, -std::sqrt(0.5));
    Connection A = zero_connection(spec);
    for (int mu = 0; mu < 4; ++mu) A.A.fill(mu, theta[mu] * H);
    return A;
}

FormMatrix structure_matrix_on_forms(const Mat4& L, int degree) {
    return tabulate([&](const RationalForm& e) { return structure_action(L, e); }, degree, degree);
}

FormMatrix hodge_matrix(int degree, int orientation) {
    const ConstantMetric g = ConstantMetric::euclidean();
    return orientation * tabulate([&](const RationalForm& e) { return hodge_star(g, e); }, degree, 4 - degree);
}

Eigen::RowVectorXd lambda_row(const Mat4& L) {
    const RationalForm w = hermitian_form(HermitianMetric::euclidean(), L);
    const auto& masks = basis_masks(2);
    Eigen::RowVectorXd row(static_cast<int>(masks.size()));
    for (std::size_t j = 0; j < masks.size(); ++j) {
        RationalForm e(2);
        e.set(masks[j], 1);
        row(static_cast<int>(j)) = to_double(lambda_contract(w, e));
    }
    return row;
}

Eigen::VectorXd hermitian_coefficients(const Mat4& L) {
    const RationalForm w = hermitian_form(HermitianMetric::euclidean(), L);
    const auto& masks = basis_masks(2);
    Eigen::VectorXd v(static_cast<int>(masks.size()));
    for (std::size_t j = 0; j < masks.size(); ++j) v(static_cast<int>(j)) = to_double(w.coeff(masks[j]));
    return v;
}

LatticeField apply_forms(const FormMatrix& M, const LatticeField& a, int out_degree) {
    LatticeField out(a.grid(), a.rank(), out_degree, a.algebra());
    if (M.rows() != out.components() || M.cols() != a.components())
        throw std::invalid_argument("apply_forms: operator does not match the form degrees");
    for (int r = 0; r < M.rows(); ++r)
        for (int c = 0; c < M.cols(); ++c)
            if (M(r, c) != 0.0) add_channel(out, r, a, c, M(r, c));
    return out;
}

LatticeField d_A(const Connection& A, const LatticeField& alpha) {
    require_connection(A, alpha);
    const int p = alpha.degree();
    if (p > 3) throw std::invalid_argument("d_A of a 4-form");
    const auto grad = spectral_gradient(alpha);
    LatticeField out(alpha.grid(), alpha.rank(), p + 1, alpha.algebra());
    const auto& out_masks = basis_masks(p + 1);
    for (std::size_t jo = 0; jo < out_masks.size(); ++jo) {
        const BasisMask J = out_masks[jo];
        for (int mu = 0; mu < 4; ++mu) {
            const auto bit = static_cast<BasisMask>(1u << mu);
            if (!(J & bit)) continue;
            const auto I = static_cast<BasisMask>(J ^ bit);
            const int ci = mask_position(I, p);
            const double sign = wedge_sign(bit, I);
            add_channel(out, static_cast<int>(jo), grad[mu], ci, sign);
            add_commutator(out, static_cast<int>(jo), A.A, mu, alpha, ci, sign);
        }
    }
    out.band_limit();
    return out;
}

LatticeField d_A_star(const Connection& A, const LatticeField& beta) {
    require_connection(A, beta);
    const int p = beta.degree();
    if (p < 1) throw std::invalid_argument("d_A^* of a 0-form");
    const auto grad = spectral_gradient(beta);
    LatticeField out(beta.grid(), beta.rank(), p - 1, beta.algebra());
    const auto& out_masks = basis_masks(p - 1);
    for (std::size_t io = 0; io < out_masks.size(); ++io) {
        const BasisMask I = out_masks[io];
        for (int mu = 0; mu < 4; ++mu) {
            const auto bit = static_cast<BasisMask>(1u << mu);
            if (I & bit) continue;
            const int cj = mask_position(static_cast<BasisMask>(I | bit), p);
            const double sign = -wedge_sign(bit, I);
            add_channel(out, static_cast<int>(io), grad[mu], cj, sign);
            add_commutator(out, static_cast<int>(io), A.A, mu, beta, cj, sign);
        }
    }
    out.band_limit();
    return out;
}

LatticeField twisted_d_A(const Connection& A, const Mat4& L, const LatticeField& alpha) {
    const int p = alpha.degree();
    const LatticeField La = apply_forms(structure_matrix_on_forms(L, p), alpha, p);
    LatticeField out = apply_forms(structure_matrix_on_forms(L, p + 1), d_A(A, La), p + 1);
    out *= kTwistSign * (p % 2 ? -1.0 : 1.0);
    return out;
}

LatticeField hodge_star(const LatticeField& beta, int orientation) {
    return apply_forms(hodge_matrix(beta.degree(), orientation), beta, 4 - beta.degree());
}

LatticeField lambda_contract(const Mat4& L, const LatticeField& beta) {
    if (beta.degree() != 2) throw std::invalid_argument("Lambda contracts 2-forms");
    return apply_forms(lambda_row(L), beta, 0);
}

LatticeField curvature(const Connection& A) {
    if (A.A.degree() != 1) throw std::invalid_argument("connection must be a 1-form");
    const auto grad = spectral_gradient(A.A);
    LatticeField F(A.A.grid(), A.A.rank(), 2, A.A.algebra());
    const auto& masks = basis_masks(2);
    for (std::size_t j = 0; j < masks.size(); ++j) {
        const auto idx = mask_indices(masks[j]);
        const int mu = idx[0], nu = idx[1];
        add_channel(F, static_cast<int>(j), grad[mu], nu, 1.0);
        add_channel(F, static_cast<int>(j), grad[nu], mu, -1.0);
        add_commutator(F, static_cast<int>(j), A.A, mu, A.A, nu, 1.0);
    }
    F.band_limit();
    return F;
}

ASDResidual asd_residual(const LatticeField& F, int orientation) {
    if (F.degree() != 2) throw std::invalid_argument("asd_residual expects a 2-form");
    LatticeField plus = F + hodge_star(F, orientation);
    plus *= 0.5;
    const double norm = plus.l2_norm();
    return {std::move(plus), norm};
}

HEReport he_residual(const LatticeField& F, const Mat4& L, double tol) {
    if (F.degree() != 2) throw std::invalid_argument("he_residual expects a 2-form");
    const LatticeField lam = lambda_contract(L, F);
    const int n = F.rank();
    const int V = F.sites();
    HEReport rep;
    double sum = 0;
    for (int s = 0; s < V; ++s) sum += (cplx(0, 1) * lam.at(0, s).trace()).real();
    rep.gamma = sum / V / n;
    double res = 0;
    const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(n, n);
    for (int s = 0; s < V; ++s) res += (cplx(0, 1) * lam.at(0, s) - rep.gamma * id).squaredNorm();
    rep.residual_norm = std::sqrt(res / V);
    LatticeField non11 = F - apply_forms(structure_matrix_on_forms(L, 2), F, 2);
    non11 *= 0.5;
    rep.non11_norm = non11.l2_norm();
    rep.type_11 = rep.non11_norm <= tol * std::max(1.0, F.l2_norm());
    return rep;
}

FlowResult ym_flow(const Connection& A0, int orientation, const FlowOptions& opts) {
    if (!(opts.step > 0.0) || !std::isfinite(opts.step)) throw std::invalid_argument("ym_flow: step must be > 0");
    if (opts.max_iters < 0) throw std::invalid_argument("ym_flow: max_iters must be >= 0");
    require_finite(A0.A);
    auto energy_of = [&](const Connection& A, LatticeField* Fplus) {
        ASDResidual r = asd_residual(curvature(A), orientation);
        if (!std::isfinite(r.norm)) throw std::runtime_error("ym_flow: non-finite curvature");
        if (Fplus) *Fplus = std::move(r.F_plus);
        return r.norm * r.norm;
    };
    FlowResult out;
    out.A = A0;
    LatticeField Fplus;
    double E = energy_of(out.A, &Fplus);
    out.energy.push_back(E);
    double h = opts.step;
    while (E > opts.target && out.iterations < opts.max_iters) {
        LatticeField grad = d_A_star(out.A, Fplus);
        grad *= 2.0;
        require_finite(grad);
        bool accepted = false;
        for (int tries = 0; tries < 60 && !accepted; ++tries) {
            Connection trial{out.A.A - h * grad};
            LatticeField trial_plus;
            const double Et = energy_of(trial, &trial_plus);
            if (Et <= E) {
                out.A = std::move(trial);
                Fplus = std::move(trial_plus);
                E = Et;
                accepted = true;
            } else {
                h *= 0.5;
                ++out.halvings;
            }
        }
        if (!accepted) break;
        ++out.iterations;
        out.energy.push_back(E);
        h = std::min(opts.step, 1.5 * h);
    }
    out.reached_target = E <= opts.target;
    return out;
}

double l2_inner(const LatticeField& a1, const LatticeField& a2) {
    if (!a1.same_shape(a2)) throw std::invalid_argument("l2_inner: fields of different shape");
    double sum = 0;
    const auto& x = a1.raw();
    const auto& y = a2.raw();
    for (std::size_t i = 0; i < x.size(); ++i) sum += (x[i] * std::conj(y[i])).real();
    return sum / a1.sites();
}

}  // namespace hkt
