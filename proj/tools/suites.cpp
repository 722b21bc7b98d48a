#include "suites.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "hkt/bundle.hpp"
#include "hkt/exterior.hpp"
#include "hkt/field_io.hpp"
#include "hkt/hermitian.hpp"
#include "hkt/hopf.hpp"
#include "hkt/slice.hpp"

namespace hkt::cli {

namespace {

Defect exact_defect(const RationalForm& r) {
    return r.is_zero() ? Defect::exact_zero() : Defect::exact_nonzero(defect_size(r));
}

std::string sci(double v) {
    std::ostringstream os;
    os.precision(3);
    os << std::scientific << v;
    return os.str();
}

/// Small random exact data for the calculus properties.
class FormSampler {
public:
    explicit FormSampler(std::uint64_t seed) : rng_(seed) {}

    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

    Rational rational() {
        Rational r(uniform(-4, 4), uniform(1, 3));
        r.canonicalize();
        return r;
    }

    GaussianRational coefficient() { return {rational(), uniform(0, 2) == 0 ? rational() : Rational(0)}; }

    ScalarField field() {
        Polynomial p;
        const int terms = uniform(1, 3);
        for (int t = 0; t < terms; ++t) {
            Monomial m{0, 0, 0, 0};
            const int deg = uniform(0, 2);
            for (int d = 0; d < deg; ++d) ++m[uniform(0, 3)];
            p.add_term(m, coefficient());
        }
        return ScalarField(p, uniform(0, 3) == 0 ? 1 : 0);
    }

    RationalForm form(int degree) {
        RationalForm a(degree);
        for (BasisMask m : basis_masks(degree))
            if (uniform(0, 2) != 0) a.set(m, field());
        return a;
    }

    /// One of the six standard structures of the two frames.
    Mat4 structure() {
        const HypercomplexFrame f = uniform(0, 1) ? HypercomplexFrame::left() : HypercomplexFrame::right();
        return f[uniform(0, 2)];
    }

    /// g = A^T A with an invertible integer matrix A, so sqrt(det g) = |det A| is rational.
    ConstantMetric square_metric() {
        for (;;) {
            Mat4 A;
            for (int r = 0; r < 4; ++r)
                for (int c = 0; c < 4; ++c) A(r, c) = uniform(-2, 2) + (r == c ? 3 : 0);
            std::vector<std::vector<Rational>> rows(4, std::vector<Rational>(4));
            for (int r = 0; r < 4; ++r)
                for (int c = 0; c < 4; ++c) rows[r][c] = A(r, c);
            if (exact_rank(rows) == 4) return ConstantMetric(A.transpose() * A);
        }
    }

    std::mt19937_64& rng() { return rng_; }

private:
    std::mt19937_64 rng_;
};

void add_sampled(CheckList& out, const std::string& name, const std::string& ref, int count, int failures,
                 std::uint64_t seed) {
    out.add(name, failures == 0, failures == 0 ? Defect::exact_zero() : Defect::exact_nonzero(failures), ref,
            std::to_string(count) + " samples, seed " + std::to_string(seed));
}

LatticeField u1_field(int N, std::uint64_t seed, int degree) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal;
    LatticeField f(N, 1, degree, Algebra::u);
    Eigen::MatrixXcd m(1, 1);
    for (int comp = 0; comp < f.components(); ++comp)
        for (int s = 0; s < f.sites(); ++s) {
            m(0, 0) = cplx(0, normal(rng));
            f.set(comp, s, m);
        }
    f.band_limit();
    return f;
}

/// Curvature 2 pi F_hat of constant imaginary F_hat on a rank-1 lattice.
LatticeField lattice_curvature(const RationalForm& F_hat, int N) {
    LatticeField F(N, 1, 2, Algebra::u);
    const auto& masks = basis_masks(2);
    for (int j = 0; j < 6; ++j) {
        const ScalarField& c = F_hat.coeff(masks[j]);
        if (c.is_zero()) continue;
        if (!c.is_constant()) throw std::invalid_argument("curvature coefficients must be constant");
        const GaussianRational v = c.numerator().constant_term();
        if (sgn(v.re) != 0) throw std::invalid_argument("line-bundle curvature must be imaginary");
        Eigen::MatrixXcd m(1, 1);
        m(0, 0) = cplx(0, 2 * std::numbers::pi * v.im.get_d());
        F.fill(j, m);
    }
    return F;
}

Eigen::VectorXd real_coefficients(const RationalForm& omega) {
    Eigen::VectorXd w(6);
    const auto& masks = basis_masks(2);
    for (int j = 0; j < 6; ++j) {
        const ScalarField& c = omega.coeff(masks[j]);
        if (c.is_zero()) {
            w(j) = 0;
            continue;
        }
        if (!c.is_constant()) throw std::invalid_argument("omega must have constant coefficients");
        const GaussianRational v = c.numerator().constant_term();
        if (sgn(v.im) != 0) throw std::invalid_argument("omega must be real");
        w(j) = v.re.get_d();
    }
    return w;
}

}  // namespace

CheckList hopf_checks(const Rational& q) {
    const HopfSpec spec(q);
    CheckList out;
    for (const auto& frame : {HypercomplexFrame::left(), HypercomplexFrame::right()}) {
        const FrameReport r = verify_frame(frame);
        std::string detail;
        for (const auto& f : r.failed) detail += (detail.empty() ? "" : ", ") + f;
        out.add("frame " + to_string(frame.side) + ": quaternion relations", r.ok(),
                r.ok() ? Defect::exact_zero() : Defect::exact_nonzero(r.failed.size()), "hypercomplex structure",
                detail);
    }
    out.add("twist convention: dd^c_L phi = 4 omega_L", twist_convention_holds(), Defect::exact_zero(), "plumbing");
    HopfGeometry geo;
    try {
        geo = build_hopf(spec);
    } catch (const HopfInvariantError& e) {
        out.add("hopf: " + e.identity(), false, Defect::exact_nonzero(1), "Hopf surface geometry", e.what());
        return out;
    }
    out.append(verify_strong_hkt(geo, Side::left));
    out.append(verify_strong_hkt(geo, Side::right));
    out.append(verify_44(geo));
    out.append(verify_common_metric(geo));
    out.append(verify_descent(geo));
    out.append(verify_gauduchon(geo));
    out.append(verify_axis_family(geo, sample_axes()));
    return out;
}

CheckList flat_checks() {
    CheckList out;
    const HermitianMetric g = HermitianMetric::euclidean();
    const char* names[3] = {"I", "J", "K"};
    for (const auto& frame : {HypercomplexFrame::left(), HypercomplexFrame::right()}) {
        const std::string sign = frame.side == Side::left ? "+" : "-";
        for (int idx = 0; idx < 3; ++idx) {
            const TorsionReport t = bismut_torsion(g, frame[idx]);
            out.add("flat: T = 0 for " + std::string(names[idx]) + sign, t.torsion_T.is_zero(),
                    exact_defect(t.torsion_T), "hyperkahler if and only if H = 0");
        }
        const HKTReport h = hkt_report(g, frame);
        out.add("flat: hyperkahler for frame " + to_string(frame.side), h.hyperkahler(),
                exact_defect(h.H()), "hyperkahler if and only if H = 0");
    }
    const HopfGeometry flat = build_geometry(HopfSpec(2), HypercomplexFrame::left(), HypercomplexFrame::right(),
                                             MetricModel::flat);
    CheckList four = verify_44(flat);
    const bool degenerate = std::find(four.flags.begin(), four.flags.end(), "hyperkahler-degenerate") != four.flags.end();
    out.add("flat: H+ = H- = 0 (degenerate (4,4))", degenerate && flat.H_plus.is_zero() && flat.H_minus.is_zero(),
            exact_defect(flat.H_plus), "hyperkahler if and only if H = 0");
    out.flags.insert(out.flags.end(), four.flags.begin(), four.flags.end());

    const TorusSpec torus(4, 2);
    const LatticeField F = curvature(cartan_connection(torus, {0.31, 0.17, 0.23, 0.41}));
    const double fmax = F.max_abs();
    out.add("flat lattice: F = 0 for constant commuting A", fmax == 0.0,
            fmax == 0.0 ? Defect::exact_zero() : Defect::numeric(fmax), "flat connections have zero curvature");
    const double asd = asd_residual(F, torus.orientation()).norm;
    out.add("flat lattice: |F+| = 0", asd <= 1e-12, Defect::numeric(asd), "flat connections are ASD");
    return out;
}

CheckList moduli_checks(const ModuliOptions& opts) {
    const TorusSpec spec(opts.N, opts.n);
    const std::string tag = "moduli(N=" + std::to_string(opts.N) + ",n=" + std::to_string(opts.n) + "): ";
    CheckList out;
    const Connection A = zero_connection(spec);
    const TangentBasis tb = horizontal_slice(spec, A, spec.frame.I, opts.tol);
    const int expected = 4 * (opts.n * opts.n - 1);
    out.add(tag + "kernel dimension = 4(n^2-1)", tb.dimension() == expected,
            Defect::exact_nonzero(std::abs(tb.dimension() - expected)), "tangent space of instantons at A = 0",
            "dim " + std::to_string(tb.dimension()) + ", expected " + std::to_string(expected));
    ModuliReport rep = verify_moduli_structure(spec, tb, opts.tol);
    for (auto& c : rep.checks.checks) c.name = tag + c.name;
    out.append(rep.checks);

    // omega~(a1, a2) against g_L2(I~ a1, a2) on random slice elements.
    std::mt19937_64 rng(opts.seed);
    std::normal_distribution<double> normal;
    auto random_slice_element = [&] {
        Eigen::VectorXd c(tb.dimension());
        for (int i = 0; i < tb.dimension(); ++i) c(i) = normal(rng);
        LatticeField a = spec.zero_form(1);
        for (int i = 0; i < tb.dimension(); ++i) a += c(i) * tb.basis[i];
        return a;
    };
    int sign = 0;
    bool consistent = true;
    double worst = 0.0;
    for (int k = 0; k < opts.form_pairs && tb.dimension() > 0; ++k) {
        const LatticeField a1 = random_slice_element(), a2 = random_slice_element();
        const double w = moduli_hermitian_form(tb, a1, a2);
        const double g = l2_inner(induced_structure(spec.frame.I, a1), a2);
        const double scale = a1.l2_norm() * a2.l2_norm();
        const int s = w * g > 0 ? 1 : -1;
        if (std::abs(g) > 1e-6 * scale) {
            if (sign == 0) sign = s;
            consistent = consistent && s == sign;
        }
        worst = std::max(worst, std::abs(w - (sign == 0 ? s : sign) * g) / scale);
    }
    out.add(tag + "omega~(a1,a2) = sign * g_L2(I~a1,a2)", consistent && worst < 1e-8, Defect::numeric(worst),
            "moduli Hermitian form against the L2 metric",
            std::to_string(opts.form_pairs) + " pairs, sign " + std::to_string(sign) + ", seed " +
                std::to_string(opts.seed));

    double coulomb = 0.0, gauge = 0.0, asd11 = 0.0;
    for (int k = 0; k < opts.random_forms; ++k) {
        const LatticeField a = random_field(spec, 1, opts.seed + 1000 + k);
        for (int idx = 0; idx < 3; ++idx)
            coulomb = std::max(coulomb, coulomb_identity_residual(spec, A, spec.frame[idx], a));
        const LatticeField dxi = d_A(A, random_field(spec, 0, opts.seed + 2000 + k));
        for (const auto& b : tb.basis) gauge = std::max(gauge, std::abs(l2_inner(b, dxi)) / std::max(dxi.l2_norm(), 1e-300));
        LatticeField beta = random_field(spec, 2, opts.seed + 3000 + k);
        LatticeField asd = beta - hodge_star(beta, spec.orientation());
        asd *= 0.5;
        for (int idx = 0; idx < 3; ++idx)
            asd11 = std::max(asd11, he_residual(asd, spec.frame[idx]).non11_norm / std::max(asd.l2_norm(), 1e-300));
    }
    out.add(tag + "d*_A a = Lambda d^c_L a + *(d^c_L omega_L ^ a)", coulomb < 1e-10, Defect::numeric(coulomb),
            "Coulomb gauge equals the Lambda d^c slice condition",
            std::to_string(opts.random_forms) + " random 1-forms, L = I, J, K");
    out.add(tag + "slice orthogonal to d_A xi", gauge < opts.tol, Defect::numeric(gauge),
            "usual local model on the flat torus");
    out.add(tag + "ASD 2-forms are (1,1) for I, J, K", asd11 < 1e-10, Defect::numeric(asd11),
            "ASD is (1,1) for every induced structure");

    if (opts.flow_eps) {
        const Connection base = cartan_connection(spec, {0.31, 0.17, 0.23, 0.41});
        Connection A0{base.A + *opts.flow_eps * random_field(spec, 1, opts.seed + 4000)};
        const double E0 = std::pow(asd_residual(curvature(A0), spec.orientation()).norm, 2);
        FlowOptions fo;
        fo.step = 0.004;
        fo.max_iters = 10000;
        fo.target = E0 * 1e-7;
        const FlowResult res = ym_flow(A0, spec.orientation(), fo);
        double rise = 0.0;
        for (std::size_t k = 1; k < res.energy.size(); ++k) rise = std::max(rise, res.energy[k] - res.energy[k - 1]);
        const double factor = res.energy.back() > 0 ? res.energy.front() / res.energy.back() : INFINITY;
        out.add(tag + "flow: |F+|^2 non-increasing", rise <= 0.0, Defect::numeric(rise), "plumbing",
                std::to_string(res.iterations) + " iterations, " + std::to_string(res.halvings) + " halvings");
        out.add(tag + "flow: |F+|^2 reduced by >= 1e6", factor >= 1e6 && res.iterations <= 10000,
                Defect::numeric(res.energy.back()), "descent toward the ASD equation",
                "reduction " + sci(factor) + " from " + sci(res.energy.front()));
        double flowed = 0.0;
        for (int k = 0; k < opts.random_forms; ++k)
            flowed = std::max(flowed, coulomb_identity_residual(spec, res.A, spec.frame.I,
                                                                random_field(spec, 1, opts.seed + 5000 + k)));
        out.add(tag + "flow: Coulomb identity at the flowed connection", flowed < 1e-6, Defect::numeric(flowed),
                "Coulomb gauge equals the Lambda d^c slice condition");
        if (!opts.snapshot.empty()) save_field(opts.snapshot, res.A.A);
    }
    return out;
}

DegreeResult degree_checks(const RationalForm& F_hat, const RationalForm& omega, int rank,
                           const std::vector<Rational>& sub_slopes) {
    if (F_hat.degree() != 2 || omega.degree() != 2) throw std::invalid_argument("degree needs two 2-forms");
    DegreeResult r;
    r.degree = chern_degree(F_hat, omega);
    r.slope = slope(r.degree, rank);
    const Verdict v = stability_compare(sub_slopes, r.slope);
    r.verdict = to_string(v);
    const double lattice = degree(lattice_curvature(F_hat, 3), real_coefficients(omega));
    const double err = std::abs(lattice - r.degree.get_d());
    r.checks.add("degree: lattice value matches exact value", err < 1e-12, Defect::numeric(err),
                 "deg = (i/2pi) integral F ^ omega", "deg " + r.degree.get_str() + ", lattice " + sci(lattice));
    const RationalForm gd = exterior_d(twisted_d(HypercomplexFrame::left().I, omega));
    r.checks.add("degree: omega is Gauduchon", gd.is_zero(), exact_defect(gd), "degree uses a Gauduchon form");
    r.checks.add("slope: deg / rank", true, Defect::exact_zero(), "mu = deg / rk",
                 "slope " + r.slope.get_str() + ", rank " + std::to_string(rank));
    std::string subs;
    for (const auto& s : sub_slopes) subs += (subs.empty() ? "" : ",") + s.get_str();
    r.checks.add("stability: verdict for supplied subobjects", true, Defect::exact_zero(),
                 "mu(S) <= mu(E), strict for stable", r.verdict + (subs.empty() ? "" : " against [" + subs + "]"));
    return r;
}

CheckList degree_examples() {
    CheckList out;
    const RationalForm omega = RationalForm::basis({0, 1}) + RationalForm::basis({2, 3});
    const Eigen::VectorXd w = real_coefficients(omega);
    const LatticeField flat(3, 1, 2, Algebra::u);
    const double d0 = degree(flat, w);
    out.add("degree: flat line bundle has degree 0", d0 == 0.0, d0 == 0.0 ? Defect::exact_zero() : Defect::numeric(d0),
            "flat line bundles have degree zero");

    const RationalForm unit = ScalarField(GaussianRational(0, -1)) * RationalForm::basis({0, 1});
    const double d1 = degree(lattice_curvature(unit, 4), w);
    out.add("degree: unit Chern class has |deg| = 1", std::abs(std::abs(d1) - 1.0) < 1e-12,
            Defect::numeric(std::abs(std::abs(d1) - 1.0)), "deg = (i/2pi) integral F ^ omega", "deg " + sci(d1));
    const Rational e1 = chern_degree(unit, omega);
    out.add("degree: exact unit Chern class gives 1", e1 == 1, Defect::exact_nonzero(Rational(abs(e1 - 1)).get_d()),
            "deg = (i/2pi) integral F ^ omega");

    const RationalForm other = ScalarField(GaussianRational(0, 3)) * RationalForm::basis({2, 3}) +
                               ScalarField(GaussianRational(0, Rational(1, 2))) * RationalForm::basis({0, 2});
    const Rational sum = chern_degree(unit + other, omega);
    const Rational parts = chern_degree(unit, omega) + chern_degree(other, omega);
    out.add("degree: additive in F", sum == parts, Defect::exact_nonzero(Rational(abs(sum - parts)).get_d()),
            "linearity of the integral");

    const double dex = degree(d_A(Connection{LatticeField(4, 1, 1, Algebra::u)}, u1_field(4, 77, 1)), w);
    out.add("degree: exact curvature dbeta has degree 0", std::abs(dex) < 1e-12, Defect::numeric(std::abs(dex)),
            "degree vanishes on exact F ^ omega");

    const bool slopes = slope(Rational(0), 3) == 0 && slope(Rational(3), 2) == Rational(3, 2) &&
                        slope(Rational(-3), 1 + 3) == Rational(-3, 4) &&
                        slope(Rational(21, 2), 5) == Rational(7, 2) * slope(Rational(3), 5);
    out.add("slope: arithmetic", slopes, Defect::exact_zero(), "mu = deg / rk");
    const bool verdicts =
        stability_compare<Rational>({-1, 0}, 0) == Verdict::semistable &&
        stability_compare<Rational>({-1}, 0) == Verdict::stable && stability_compare<Rational>({1}, 0) == Verdict::unstable &&
        stability_compare<Rational>({}, 0) == Verdict::stable;
    out.add("stability: verdicts for supplied slopes", verdicts, Defect::exact_zero(),
            "mu(S) <= mu(E), strict for stable");
    return out;
}

CheckList calculus_checks(std::uint64_t seed, int count) {
    CheckList out;
    FormSampler rnd(seed);

    int fails = 0;
    for (int k = 0; k < count; ++k) {
        const RationalForm a = rnd.form(k % 3);
        if (!exterior_d(exterior_d(a)).is_zero()) ++fails;
    }
    add_sampled(out, "calculus: d^2 = 0", "exterior derivative squares to zero", count, fails, seed);

    fails = 0;
    for (int k = 0; k < count; ++k) {
        const int p = rnd.uniform(0, 2);
        const int q = rnd.uniform(0, 3 - p);
        const RationalForm a = rnd.form(p), b = rnd.form(q);
        const RationalForm lhs = exterior_d(wedge(a, b));
        const RationalForm rhs = wedge(exterior_d(a), b) + ScalarField(p % 2 ? -1 : 1) * wedge(a, exterior_d(b));
        if (lhs != rhs) ++fails;
    }
    add_sampled(out, "calculus: graded Leibniz", "d(a ^ b) = da ^ b + (-1)^p a ^ db", count, fails, seed);

    int complete = 0, idem = 0;
    for (int k = 0; k < count; ++k) {
        const Mat4 L = rnd.structure();
        const int m = 1 + k % 3;
        const RationalForm a = rnd.form(m);
        RationalForm sum(m);
        for (int p = 0; p <= m; ++p) {
            const RationalForm part = pq_project(L, a, p, m - p);
            sum += part;
            if (pq_project(L, part, p, m - p) != part) ++idem;
        }
        if (sum != a) ++complete;
    }
    add_sampled(out, "calculus: (p,q) projections sum to the identity", "type decomposition", count, complete, seed);
    add_sampled(out, "calculus: (p,q) projections are idempotent", "type decomposition", count, idem, seed);

    fails = 0;
    for (int k = 0; k < count; ++k) {
        const Mat4 L = rnd.structure();
        const RationalForm a = pq_project(L, rnd.form(1), 1, 0);
        const RationalForm b = pq_project(L, rnd.form(1), 1, 0);
        const RationalForm c = pq_project(L, rnd.form(1), 1, 0);
        if (!wedge(wedge(a, b), c).is_zero()) ++fails;
    }
    add_sampled(out, "calculus: (3,0)-forms vanish on a complex surface", "complex dimension 2", count, fails, seed);

    fails = 0;
    for (int k = 0; k < count; ++k) {
        const Mat4 L = rnd.structure();
        RationalForm omega(2);
        if (k % 2 == 0) {
            const HypercomplexFrame frame = rnd.uniform(0, 1) ? HypercomplexFrame::left() : HypercomplexFrame::right();
            const ConstantMetric g = average_metric(rnd.square_metric(), frame);
            omega = hermitian_form(HermitianMetric::constant(g), frame[rnd.uniform(0, 2)]);
        } else {
            omega = structure_form(L, MetricModel::hopf);
        }
        if (lambda_contract(omega, omega) != ScalarField(2)) ++fails;
    }
    add_sampled(out, "calculus: Lambda omega = 2", "trace of the Hermitian form", count, fails, seed);

    fails = 0;
    for (int k = 0; k < count; ++k) {
        const ConstantMetric g = rnd.square_metric();
        const RationalForm a = rnd.form(2);
        if (hodge_star(g, hodge_star(g, a)) != a) ++fails;
    }
    add_sampled(out, "calculus: ** = Id on 2-forms", "Hodge star in dimension 4", count, fails, seed);
    return out;
}

VerificationReport full_report(std::uint64_t seed) {
    VerificationReport rep;
    rep.subject = "full";
    rep.seed = seed;
    rep.parameters = {{"q", "2"}, {"moduli", "N=4 n=2,3 tol=1e-10 flow=1e-2"}, {"samples", "100"}};
    run_timed(rep, [] { return hopf_checks(2); });
    run_timed(rep, [] { return flat_checks(); });
    ModuliOptions two;
    two.seed = seed;
    two.flow_eps = 1e-2;
    run_timed(rep, [&] { return moduli_checks(two); });
    ModuliOptions three;
    three.n = 3;
    three.seed = seed;
    run_timed(rep, [&] { return moduli_checks(three); });
    run_timed(rep, [] { return degree_examples(); });
    run_timed(rep, [&] { return calculus_checks(seed, 100); });
    return rep;
}

}  // namespace hkt::cli
