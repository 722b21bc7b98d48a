#include "hkt/hopf.hpp"

namespace hkt {

namespace {

constexpr const char* kNames[6] = {"I+", "J+", "K+", "I-", "J-", "K-"};

Defect exact_defect(const RationalForm& residual) {
    return residual.is_zero() ? Defect::exact_zero() : Defect::exact_nonzero(defect_size(residual));
}

double field_defect(const SymmetricField& a, const SymmetricField& b) {
    double worst = 0;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) worst = std::max(worst, (a[r][c] - b[r][c]).numerator().max_abs_coefficient());
    return worst;
}

}  // namespace

HopfSpec::HopfSpec(Rational q) : q_(std::move(q)) {
    if (q_ <= 1) throw std::invalid_argument("Hopf multiplier must satisfy q > 1, got " + q_.get_str());
}

RationalForm structure_form(const Mat4& L, MetricModel model) {
    if (model == MetricModel::flat) return hermitian_form(HermitianMetric::euclidean(), L);
    const RationalForm phi = RationalForm::function(ScalarField::phi());
    return ScalarField::inverse_phi() * exterior_d(twisted_d(L, phi));
}

SymmetricField metric_from_form(const RationalForm& omega, const Mat4& L) {
    auto entry = [&](int a, int c) -> ScalarField {
        if (a == c) return {};
        const auto m = static_cast<BasisMask>((1u << a) | (1u << c));
        return a < c ? omega.coeff(m) : -omega.coeff(m);
    };
    SymmetricField g;
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            ScalarField s;
            for (int c = 0; c < 4; ++c)
                if (sgn(L(c, b)) != 0) s += GaussianRational(L(c, b)) * entry(a, c);
            g[a][b] = std::move(s);
        }
    return g;
}

HopfGeometry build_geometry(const HopfSpec& spec, const HypercomplexFrame& plus,
                            const HypercomplexFrame& minus, MetricModel model) {
    HopfGeometry geo;
    geo.q = spec.q();
    geo.model = model;
    geo.phi = ScalarField::phi();
    geo.plus = plus;
    geo.minus = minus;
    for (int s = 0; s < 6; ++s) {
        const Mat4& L = (s < 3 ? plus : minus)[s % 3];
        StructureData& d = geo.structures[s];
        d.name = kNames[s];
        d.L = L;
        d.omega = structure_form(L, model);
        d.metric = metric_from_form(d.omega, L);
        d.torsion = torsion_from_form(L, d.omega);
    }
    geo.H_plus = geo.structures[0].torsion.torsion_H;
    geo.H_minus = geo.structures[3].torsion.torsion_H;
    return geo;
}

HopfGeometry build_hopf(const HopfSpec& spec) {
    HopfGeometry geo = build_geometry(spec, HypercomplexFrame::left(), HypercomplexFrame::right(), MetricModel::hopf);
    for (const auto& d : geo.structures) {
        if (d.metric != geo.structures[0].metric)
            throw HopfInvariantError("common metric", "g_" + d.name + " differs from g_I+");
        if (scale_pullback(d.omega, geo.q) != d.omega)
            throw HopfInvariantError("descent", "omega_" + d.name + " is not invariant under x -> q x");
    }
    return geo;
}

CheckList verify_strong_hkt(const HopfGeometry& geo, Side side) {
    CheckList out;
    const int base = side == Side::left ? 0 : 3;
    const std::string tag = side == Side::left ? "+" : "-";
    const auto& H = geo.structures[base].torsion.torsion_H;
    const auto& HJ = geo.structures[base + 1].torsion.torsion_H;
    const auto& HK = geo.structures[base + 2].torsion.torsion_H;
    const std::string ref = "HKT: d^c_I w_I = d^c_J w_J = d^c_K w_K = H";
    const RationalForm dIJ = H - HJ, dJK = HJ - HK;
    out.add("hkt" + tag + ": d^c_I w_I - d^c_J w_J = 0", dIJ.is_zero(), exact_defect(dIJ), ref);
    out.add("hkt" + tag + ": d^c_J w_J - d^c_K w_K = 0", dJK.is_zero(), exact_defect(dJK), ref);
    const RationalForm dH = exterior_d(H);
    out.add("hkt" + tag + ": dH = 0", dH.is_zero(), exact_defect(dH), "strong HKT: H is d-closed");
    out.add("hkt" + tag + ": H != 0", !H.is_zero(),
            H.is_zero() ? Defect::exact_zero() : Defect::exact_nonzero(defect_size(H)),
            "hyperhermitian non-Kahler metric has H != 0",
            H.is_zero() ? "H vanishes: hyperkahler regime" : "");
    if (side == Side::right) {
        const RationalForm sum = H + geo.H_plus;
        out.add("hkt-: H- = -H+", sum.is_zero(), exact_defect(sum), "opposite torsion for the second frame");
    }
    return out;
}

CheckList verify_44(const HopfGeometry& geo) {
    CheckList out;
    const RationalForm sum = geo.H_plus + geo.H_minus;
    out.add("(4,4): H+ + H- = 0", sum.is_zero(), exact_defect(sum), "(4,4): T+ = -T-");
    const RationalForm dp = exterior_d(geo.H_plus), dm = exterior_d(geo.H_minus);
    out.add("(4,4): dH+ = 0", dp.is_zero(), exact_defect(dp), "(4,4): torsion forms closed");
    out.add("(4,4): dH- = 0", dm.is_zero(), exact_defect(dm), "(4,4): torsion forms closed");
    const int rank = independence_rank(geo.plus, geo.minus);
    out.add("(4,4): independence rank = 6", rank == 6, Defect::exact_nonzero(6 - rank),
            "the two hypercomplex families are independent", "rank " + std::to_string(rank));
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
            const auto& p = geo.structures[a];
            const auto& m = geo.structures[3 + b];
            const RationalForm r = p.torsion.torsion_T + m.torsion.torsion_T;
            const bool ok = r.is_zero() && p.torsion.strong() && m.torsion.strong();
            out.add("bi-Hermitian (" + p.name + ", " + m.name + ")", ok, exact_defect(r),
                    "bi-Hermitian: T+ = -T-, dT+- = 0");
        }
    if (geo.H_plus.is_zero() && geo.H_minus.is_zero()) out.flags.emplace_back("hyperkahler-degenerate");
    return out;
}

CheckList verify_descent(const HopfGeometry& geo) {
    CheckList out;
    const std::string ref = "<q>-invariant forms descend to the quotient";
    for (const auto& d : geo.structures) {
        const RationalForm r = scale_pullback(d.omega, geo.q) - d.omega;
        out.add("descent: omega_" + d.name, r.is_zero(), exact_defect(r), ref);
    }
    for (const auto* h : {&geo.H_plus, &geo.H_minus}) {
        const RationalForm r = scale_pullback(*h, geo.q) - *h;
        out.add(std::string("descent: H") + (h == &geo.H_plus ? "+" : "-"), r.is_zero(), exact_defect(r), ref);
    }
    const RationalForm dphi = exterior_d(RationalForm::function(geo.phi));
    const RationalForm r = scale_pullback(dphi, geo.q) - dphi;
    out.add("descent control: d phi not invariant", !r.is_zero(), exact_defect(r), "plumbing",
            "d phi scales by q^2");
    return out;
}

CheckList verify_common_metric(const HopfGeometry& geo) {
    CheckList out;
    const auto& ref_metric = geo.structures[0].metric;
    for (const auto& d : geo.structures) {
        bool symmetric = true;
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < a; ++b) symmetric = symmetric && d.metric[a][b] == d.metric[b][a];
        const bool same = d.metric == ref_metric;
        out.add("common metric: g_" + d.name + " = g_I+", same && symmetric,
                same ? Defect::exact_zero() : Defect::exact_nonzero(field_defect(d.metric, ref_metric)),
                "the forms induce one metric g(.,.) = w_L(., L.)", symmetric ? "" : "not symmetric");
    }
    return out;
}

CheckList verify_gauduchon(const HopfGeometry& geo) {
    CheckList out;
    for (const auto& d : geo.structures) {
        const RationalForm r = exterior_d(d.torsion.torsion_H);
        out.add("gauduchon: dd^c w_" + d.name + " = 0", r.is_zero(), exact_defect(r),
                "Gauduchon for every complex structure");
    }
    return out;
}

CheckList verify_axis_family(const HopfGeometry& geo, const std::vector<AxisTriple>& axes) {
    CheckList out;
    for (const auto& ax : axes)
        for (int s = 0; s < 2; ++s) {
            const HypercomplexFrame& frame = s == 0 ? geo.plus : geo.minus;
            const Mat4 L = frame.structure(ax);
            const RationalForm omega = structure_form(L, geo.model);
            const bool same_metric = metric_from_form(omega, L) == geo.structures[0].metric;
            const RationalForm r = twisted_d(L, omega) - (s == 0 ? geo.H_plus : geo.H_minus);
            const std::string label = "(" + ax.a().get_str() + "," + ax.b().get_str() + "," + ax.c().get_str() + ")";
            out.add(std::string("axis family ") + (s == 0 ? "+" : "-") + " " + label, same_metric && r.is_zero(),
                    exact_defect(r), "every L = aI + bJ + cK shares g and H");
        }
    return out;
}

std::vector<AxisTriple> sample_axes() {
    return {
        {Rational(3, 5), Rational(4, 5), 0},
        {0, Rational(3, 5), Rational(-4, 5)},
        {Rational(2, 3), Rational(2, 3), Rational(1, 3)},
        {Rational(2, 7), Rational(-3, 7), Rational(6, 7)},
        {Rational(-1, 3), Rational(2, 3), Rational(2, 3)},
        {Rational(12, 13), 0, Rational(5, 13)},
    };
}

}  // namespace hkt
