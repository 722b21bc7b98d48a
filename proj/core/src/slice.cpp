#include "hkt/slice.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>

#include "hkt/exterior.hpp"
#include "hkt/hermitian.hpp"

namespace hkt {

namespace {

using Mode = std::array<int, 4>;

/// k = 0 first, then one wavevector from each pair +-k (first nonzero entry positive).
std::vector<Mode> representative_modes(int N) {
    const int K = band_radius(N);
    std::vector<Mode> out{{0, 0, 0, 0}};
    for (int a = -K; a <= K; ++a)
        for (int b = -K; b <= K; ++b)
            for (int c = -K; c <= K; ++c)
                for (int d = -K; d <= K; ++d) {
                    const Mode k{a, b, c, d};
                    int lead = 0;
                    for (int v : k)
                        if (v != 0) {
                            lead = v;
                            break;
                        }
                    if (lead > 0) out.push_back(k);
                }
    return out;
}

Eigen::MatrixXd ad_matrix(const std::vector<Eigen::MatrixXcd>& T, const Eigen::MatrixXcd& A) {
    const int d = static_cast<int>(T.size());
    Eigen::MatrixXd m(d, d);
    for (int a = 0; a < d; ++a) {
        const Eigen::MatrixXcd c = A * T[a] - T[a] * A;
        for (int b = 0; b < d; ++b) m(b, a) = -(T[b] * c).trace().real();
    }
    return m;
}

Eigen::MatrixXcd kron_identity(const Eigen::MatrixXd& M, int d) {
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(M.rows() * d, M.cols() * d);
    for (int r = 0; r < M.rows(); ++r)
        for (int c = 0; c < M.cols(); ++c)
            if (M(r, c) != 0.0) out.block(r * d, c * d, d, d) = M(r, c) * Eigen::MatrixXcd::Identity(d, d);
    return out;
}

/// The constant operators entering the stacked slice symbol.
struct SliceOperators {
    FormMatrix L1, L2, Pplus;
    Eigen::RowVectorXd lambda;

    SliceOperators(const TorusSpec& spec, const Mat4& L)
        : L1(structure_matrix_on_forms(L, 1)), L2(structure_matrix_on_forms(L, 2)),
          Pplus(0.5 * (FormMatrix::Identity(6, 6) + hodge_matrix(2, spec.orientation()))), lambda(lambda_row(L)) {}
};

/// Symbol of a -> (P+ d_A a, Lambda d^c_L a) on amplitudes v e^{2 pi i k.x}, for constant A.
Eigen::MatrixXcd stacked_symbol(const Mode& k, const std::array<Eigen::MatrixXd, 4>& ad, int d,
                                const SliceOperators& ops) {
    Eigen::MatrixXcd D = Eigen::MatrixXcd::Zero(6 * d, 4 * d);
    const auto& masks = basis_masks(2);
    for (int jo = 0; jo < 6; ++jo)
        for (int mu = 0; mu < 4; ++mu) {
            const auto bit = static_cast<BasisMask>(1u << mu);
            if (!(masks[jo] & bit)) continue;
            const auto I = static_cast<BasisMask>(masks[jo] ^ bit);
            const int ci = mask_indices(I)[0];
            const double s = wedge_sign(bit, I);
            D.block(jo * d, ci * d, d, d) +=
                s * (cplx(0, 2 * std::numbers::pi * k[mu]) * Eigen::MatrixXcd::Identity(d, d) + ad[mu].cast<cplx>());
        }
    Eigen::MatrixXcd S(7 * d, 4 * d);
    S.topRows(6 * d) = kron_identity(ops.Pplus, d) * D;
    const double twist = kTwistSign * -1.0;
    S.bottomRows(d) = twist * kron_identity(ops.lambda, d) * kron_identity(ops.L2, d) * D * kron_identity(ops.L1, d);
    return S;
}

/// Real field sqrt(2) Re(sum v_{mu a} e^{2 pi i k.x} T_a dx_mu), or sum v T_a dx_mu for k = 0.
LatticeField mode_field(const TorusSpec& spec, const std::vector<Eigen::MatrixXcd>& T, const Mode& k,
                        const Eigen::VectorXcd& v) {
    const int d = static_cast<int>(T.size());
    const bool zero = k == Mode{0, 0, 0, 0};
    LatticeField f = spec.zero_form(1);
    for (int s = 0; s < f.sites(); ++s) {
        const auto j = f.site_coords(s);
        double theta = 0;
        for (int mu = 0; mu < 4; ++mu) theta += 2 * std::numbers::pi * k[mu] * j[mu] / spec.N;
        const cplx phase = zero ? cplx(1, 0) : std::sqrt(2.0) * std::polar(1.0, theta);
        for (int mu = 0; mu < 4; ++mu) {
            Eigen::MatrixXcd X = Eigen::MatrixXcd::Zero(spec.n, spec.n);
            for (int a = 0; a < d; ++a) X += (v(mu * d + a) * phase).real() * T[a];
            f.set(mu, s, X);
        }
    }
    return f;
}

/// Flattened real coordinates <T_a, X> / sqrt(V) of the stacked operator output.
Eigen::VectorXd flatten(const std::vector<Eigen::MatrixXcd>& T, const std::vector<const LatticeField*>& parts) {
    std::size_t rows = 0;
    for (const auto* p : parts) rows += static_cast<std::size_t>(p->components()) * p->sites() * T.size();
    Eigen::VectorXd out(static_cast<Eigen::Index>(rows));
    Eigen::Index r = 0;
    for (const auto* p : parts) {
        const double scale = 1.0 / std::sqrt(static_cast<double>(p->sites()));
        for (int comp = 0; comp < p->components(); ++comp)
            for (int s = 0; s < p->sites(); ++s) {
                const Eigen::MatrixXcd X = p->at(comp, s);
                for (const auto& Ta : T) out(r++) = -(Ta * X).trace().real() * scale;
            }
    }
    return out;
}

struct StackedImage {
    LatticeField plus, lambda;
};

StackedImage apply_stacked(const Connection& A, const Mat4& L, const LatticeField& a, const SliceOperators& ops) {
    StackedImage img;
    img.plus = apply_forms(ops.Pplus, d_A(A, a), 2);
    img.lambda = apply_forms(ops.lambda, twisted_d_A(A, L, a), 0);
    return img;
}

void classify(TangentBasis& tb, const std::vector<double>& all, double cut) {
    double max_kernel = 0.0, min_rest = std::numeric_limits<double>::infinity();
    for (double s : all) {
        if (s <= cut) {
            tb.kernel_singular_values.push_back(s);
            max_kernel = std::max(max_kernel, s);
        } else {
            min_rest = std::min(min_rest, s);
        }
    }
    tb.smallest_nonkernel = min_rest;
    tb.gap = max_kernel > 0 ? min_rest / max_kernel : std::numeric_limits<double>::infinity();
    tb.well_conditioned = tb.gap >= kGapThreshold;
}

Eigen::MatrixXd inner_matrix(const std::vector<LatticeField>& a, const std::vector<LatticeField>& b) {
    Eigen::MatrixXd m(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) m(i, j) = l2_inner(a[i], b[j]);
    return m;
}

Eigen::VectorXd slice_coefficients(const TangentBasis& tb, const LatticeField& a) {
    Eigen::VectorXd rhs(tb.dimension());
    for (int i = 0; i < tb.dimension(); ++i) rhs(i) = l2_inner(tb.basis[i], a);
    return tb.gram.ldlt().solve(rhs);
}

LatticeField combine(const std::vector<LatticeField>& basis, const Eigen::VectorXd& c, const LatticeField& shape) {
    LatticeField out(shape.grid(), shape.rank(), shape.degree(), shape.algebra());
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (c(static_cast<Eigen::Index>(i)) != 0.0) out += c(static_cast<Eigen::Index>(i)) * basis[i];
    return out;
}

void fill_ops(const TorusSpec& spec, TangentBasis& tb) {
    for (int idx = 0; idx < 3; ++idx) {
        std::vector<LatticeField> images;
        images.reserve(tb.basis.size());
        for (const auto& b : tb.basis) images.push_back(induced_structure(spec.frame[idx], b));
        tb.ops[idx] = tb.gram.ldlt().solve(inner_matrix(tb.basis, images));
        double worst = 0.0;
        for (std::size_t j = 0; j < images.size(); ++j) {
            const LatticeField proj = combine(tb.basis, tb.ops[idx].col(static_cast<Eigen::Index>(j)), images[j]);
            worst = std::max(worst, (images[j] - proj).l2_norm());
        }
        tb.invariance_defect[idx] = worst;
    }
}

double constant_value(const ScalarField& f) {
    if (f.is_zero()) return 0.0;
    if (!f.is_constant()) throw std::domain_error("d^c_L omega_L is not constant; not a torus form");
    return f.numerator().constant_term().re.get_d();
}

}  // namespace

TangentBasis horizontal_slice(const TorusSpec& spec, const Connection& A, const Mat4& L, double tol) {
    if (A.A.degree() != 1 || A.A.grid() != spec.N || A.A.rank() != spec.n)
        throw std::invalid_argument("horizontal_slice: connection does not match the torus");
    if (!L.is_almost_complex()) throw std::invalid_argument("horizontal_slice: L^2 != -Id");
    const double asd = asd_residual(curvature(A), spec.orientation()).norm;
    if (asd > std::max(tol, 1e-12))
        throw std::invalid_argument("horizontal_slice: connection is not anti-self-dual, |F+| = " +
                                    std::to_string(asd));

    TangentBasis tb;
    tb.base = A;
    tb.structure = L;
    const auto T = algebra_basis(spec.n, Algebra::su);
    const int d = static_cast<int>(T.size());
    const SliceOperators ops(spec, L);
    const auto modes = representative_modes(spec.N);
    std::vector<double> sigma;

    if (A.A.is_spatially_constant()) {
        tb.per_mode = true;
        std::array<Eigen::MatrixXd, 4> ad;
        for (int mu = 0; mu < 4; ++mu) ad[mu] = ad_matrix(T, A.A.at(mu, 0));
        struct Candidate {
            Mode k;
            Eigen::VectorXcd v;
            double s;
        };
        std::vector<Candidate> candidates;
        double sigma_max = 0.0;
        for (const auto& k : modes) {
            const Eigen::MatrixXcd S = stacked_symbol(k, ad, d, ops);
            const bool zero = k == Mode{0, 0, 0, 0};
            if (zero) {
                Eigen::JacobiSVD<Eigen::MatrixXd> svd(S.real(), Eigen::ComputeFullV);
                for (int c = 0; c < 4 * d; ++c) {
                    const double s = svd.singularValues()(c);
                    sigma.push_back(s);
                    candidates.push_back({k, svd.matrixV().col(c).cast<cplx>(), s});
                }
                sigma_max = std::max(sigma_max, svd.singularValues()(0));
            } else {
                Eigen::JacobiSVD<Eigen::MatrixXcd> svd(S, Eigen::ComputeFullV);
                for (int c = 0; c < 4 * d; ++c) {
                    const double s = svd.singularValues()(c);
                    // Each complex kernel vector at +-k carries two real directions.
                    sigma.push_back(s);
                    sigma.push_back(s);
                    candidates.push_back({k, svd.matrixV().col(c), s});
                }
                sigma_max = std::max(sigma_max, svd.singularValues()(0));
            }
        }
        const double cut = tol * std::max(1.0, sigma_max);
        classify(tb, sigma, cut);
        for (const auto& cand : candidates) {
            if (cand.s > cut) continue;
            tb.basis.push_back(mode_field(spec, T, cand.k, cand.v));
            if (cand.k != Mode{0, 0, 0, 0}) tb.basis.push_back(mode_field(spec, T, cand.k, cplx(0, 1) * cand.v));
        }
    } else {
        std::vector<LatticeField> coords;
        for (const auto& k : modes) {
            const bool zero = k == Mode{0, 0, 0, 0};
            for (int j = 0; j < 4 * d; ++j) {
                Eigen::VectorXcd e = Eigen::VectorXcd::Zero(4 * d);
                e(j) = 1;
                coords.push_back(mode_field(spec, T, k, e));
                if (!zero) coords.push_back(mode_field(spec, T, k, cplx(0, 1) * e));
            }
        }
        Eigen::MatrixXd M;
        for (std::size_t c = 0; c < coords.size(); ++c) {
            const StackedImage img = apply_stacked(A, L, coords[c], ops);
            const Eigen::VectorXd col = flatten(T, {&img.plus, &img.lambda});
            if (c == 0) M.resize(col.size(), static_cast<Eigen::Index>(coords.size()));
            M.col(static_cast<Eigen::Index>(c)) = col;
        }
        Eigen::BDCSVD<Eigen::MatrixXd> svd(M, Eigen::ComputeFullV);
        const Eigen::VectorXd& sv = svd.singularValues();
        sigma.assign(sv.data(), sv.data() + sv.size());
        const double cut = tol * std::max(1.0, sv.size() ? sv(0) : 0.0);
        classify(tb, sigma, cut);
        for (Eigen::Index c = 0; c < sv.size(); ++c)
            if (sv(c) <= cut) tb.basis.push_back(combine(coords, svd.matrixV().col(c), coords[0]));
    }

    for (const auto& b : tb.basis)
        tb.equation_residual = std::max(tb.equation_residual, slice_equation_residual(spec, A, L, b));
    tb.gram = inner_matrix(tb.basis, tb.basis);
    fill_ops(spec, tb);
    return tb;
}

double slice_equation_residual(const TorusSpec& spec, const Connection& A, const Mat4& L, const LatticeField& a) {
    const StackedImage img = apply_stacked(A, L, a, SliceOperators(spec, L));
    const double p = img.plus.l2_norm(), l = img.lambda.l2_norm();
    return std::sqrt(p * p + l * l);
}

LatticeField induced_structure(const Mat4& L, const LatticeField& a) {
    if (a.degree() != 1) throw std::invalid_argument("induced_structure acts on 1-forms");
    const FormMatrix M = structure_matrix_on_forms(L, 1);
    const LatticeField direct = apply_forms(-M, a, 1);
    const cplx I(0, 1);
    const double tol = 1e-12 * (1.0 + a.max_abs());
    for (int s = 0; s < a.sites(); ++s) {
        std::array<Eigen::MatrixXcd, 4> v;
        for (int mu = 0; mu < 4; ++mu) v[mu] = a.at(mu, s);
        for (int j = 0; j < 4; ++j) {
            Eigen::MatrixXcd La = Eigen::MatrixXcd::Zero(a.rank(), a.rank());
            for (int i = 0; i < 4; ++i) La += M(j, i) * v[i];
            const Eigen::MatrixXcd a10 = 0.5 * (v[j] - I * La);
            const Eigen::MatrixXcd a01 = 0.5 * (v[j] + I * La);
            const Eigen::MatrixXcd split = I * (a01 - a10);
            if ((split - direct.at(j, s)).cwiseAbs().maxCoeff() > tol)
                throw std::logic_error("induced_structure: (p,q) splitting disagrees with -L a");
        }
    }
    return direct;
}

double coulomb_identity_residual(const TorusSpec& spec, const Connection& A, const Mat4& L, const LatticeField& a) {
    if (a.degree() != 1) throw std::invalid_argument("coulomb identity is stated for 1-forms");
    const RationalForm theta = twisted_d(L, hermitian_form(HermitianMetric::euclidean(), L));
    FormMatrix wedge_row = FormMatrix::Zero(1, 4);
    for (int mu = 0; mu < 4; ++mu) {
        const auto bit = static_cast<BasisMask>(1u << mu);
        const auto J = static_cast<BasisMask>(0xF ^ bit);
        wedge_row(0, mu) = constant_value(theta.coeff(J)) * wedge_sign(J, bit);
    }
    const LatticeField third = hodge_star(apply_forms(wedge_row, a, 4), spec.orientation());
    const LatticeField lhs = d_A_star(A, a);
    const LatticeField rhs = lambda_contract(L, twisted_d_A(A, L, a)) + third;
    return (lhs - rhs).l2_norm();
}

LatticeField project_to_slice(const TangentBasis& tb, const LatticeField& a) {
    if (tb.basis.empty()) return LatticeField(a.grid(), a.rank(), a.degree(), a.algebra());
    return combine(tb.basis, slice_coefficients(tb, a), a);
}

double subspace_distance(const TangentBasis& a, const TangentBasis& b) {
    if (a.dimension() != b.dimension()) return 1.0;
    auto one_way = [](const TangentBasis& from, const TangentBasis& onto) {
        double worst = 0.0;
        for (const auto& x : from.basis) {
            const double nx = x.l2_norm();
            if (nx > 0.0) worst = std::max(worst, (x - project_to_slice(onto, x)).l2_norm() / nx);
        }
        return worst;
    };
    return std::max(one_way(a, b), one_way(b, a));
}

ModuliReport verify_moduli_structure(const TorusSpec& spec, const TangentBasis& tb, double tol, ModuliControl control) {
    ModuliReport rep;
    rep.dimension = tb.dimension();
    CheckList& out = rep.checks;
    const int D = tb.dimension();
    const Eigen::MatrixXd Id = Eigen::MatrixXd::Identity(D, D);
    auto ops = tb.ops;
    if (control == ModuliControl::negate_K) ops[2] = -ops[2];
    const char* names[3] = {"I~", "J~", "K~"};
    const std::string structures_ref = "induced structures on the instanton moduli space";

    out.add("slice: basis solves d_A^+ a = 0, Lambda d^c_L a = 0", tb.equation_residual <= tol,
            Defect::numeric(tb.equation_residual), "tangent space of instantons: horizontal slice");
    out.add("slice: kernel gap above threshold", tb.well_conditioned, Defect::numeric(tb.gap), "plumbing",
            "gap " + std::to_string(tb.gap));
    const double asym = (tb.gram - tb.gram.transpose()).norm();
    const bool spd = D == 0 || Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(tb.gram).eigenvalues().minCoeff() > 0;
    out.add("slice: gram symmetric positive definite", asym <= tol && spd, Defect::numeric(asym),
            "L2 metric is positive definite");

    const TangentBasis tbJ = horizontal_slice(spec, tb.base, spec.frame.J, tol);
    const TangentBasis tbK = horizontal_slice(spec, tb.base, spec.frame.K, tol);
    rep.distance_J = subspace_distance(tb, tbJ);
    rep.distance_K = subspace_distance(tb, tbK);
    const std::string same = "tangent space is the same for all complex structures L";
    out.add("slice: L-independent (I vs J)", rep.distance_J < tol, Defect::numeric(rep.distance_J), same,
            "dims " + std::to_string(D) + " / " + std::to_string(tbJ.dimension()));
    out.add("slice: L-independent (I vs K)", rep.distance_K < tol, Defect::numeric(rep.distance_K), same,
            "dims " + std::to_string(D) + " / " + std::to_string(tbK.dimension()));

    for (int idx = 0; idx < 3; ++idx)
        out.add(std::string("slice invariant under ") + names[idx], tb.invariance_defect[idx] < tol,
                Defect::numeric(tb.invariance_defect[idx]), structures_ref);
    for (int idx = 0; idx < 3; ++idx) {
        const double r = (ops[idx] * ops[idx] + Id).norm();
        out.add(std::string(names[idx]) + "^2 = -Id", r < tol, Defect::numeric(r), structures_ref);
    }
    const double anti = (ops[0] * ops[1] + ops[1] * ops[0]).norm();
    out.add("I~J~ = -J~I~", anti < tol, Defect::numeric(anti), "I~ and J~ anticommute");
    const double prod = (ops[0] * ops[1] - ops[2]).norm();
    out.add("I~J~ = K~", prod < tol, Defect::numeric(prod), "composition of the induced structures");
    for (int idx = 0; idx < 3; ++idx) {
        const double r = (ops[idx].transpose() * tb.gram * ops[idx] - tb.gram).norm();
        out.add(std::string("g_L2 invariant under ") + names[idx], r < tol, Defect::numeric(r),
                "L2 metric is Hermitian for every L~");
    }
    return rep;
}

double moduli_hermitian_form(const TangentBasis& tb, const LatticeField& a1, const LatticeField& a2, double slice_tol) {
    for (const auto* a : {&a1, &a2}) {
        if (a->degree() != 1) throw std::invalid_argument("moduli_hermitian_form: inputs must be 1-forms");
        const double norm = a->l2_norm();
        const double off = (*a - project_to_slice(tb, *a)).l2_norm();
        if (off > slice_tol * std::max(norm, 1e-300))
            throw std::invalid_argument("moduli_hermitian_form: input is not in the slice");
    }
    const Eigen::VectorXd w = hermitian_coefficients(tb.structure);
    const auto& masks = basis_masks(2);
    const int n = a1.rank();
    const std::size_t V = a1.sites();
    double total = 0.0;
    for (int j = 0; j < 6; ++j) {
        const auto I = masks[j];
        const auto comp = static_cast<BasisMask>(0xF ^ I);
        const double coeff = w(j) * wedge_sign(I, comp);
        if (coeff == 0.0) continue;
        const auto mn = mask_indices(comp);
        const int mu = mn[0], nu = mn[1];
        // tr(a1 ^ a2)_{mu nu} = tr(a1_mu a2_nu) - tr(a1_nu a2_mu)
        for (std::size_t s = 0; s < V; ++s)
            for (int r = 0; r < n; ++r)
                for (int c = 0; c < n; ++c)
                    total += coeff * (a1.entry(mu, r, c, s) * a2.entry(nu, c, r, s) -
                                      a1.entry(nu, r, c, s) * a2.entry(mu, c, r, s))
                                         .real();
    }
    return total / static_cast<double>(V);
}

LatticeField random_field(const TorusSpec& spec, int degree, std::uint64_t seed, double amplitude) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal;
    LatticeField f = spec.zero_form(degree);
    Eigen::MatrixXcd m(spec.n, spec.n);
    for (int comp = 0; comp < f.components(); ++comp)
        for (int s = 0; s < f.sites(); ++s) {
            for (int r = 0; r < spec.n; ++r)
                for (int c = 0; c < spec.n; ++c) m(r, c) = cplx(normal(rng), normal(rng)) * amplitude;
            f.set(comp, s, m);
        }
    f.band_limit();
    return f;
}

}  // namespace hkt
