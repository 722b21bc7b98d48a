#include "hkt/hermitian.hpp"

#include <stdexcept>

namespace hkt {

std::string to_string(Status s) {
    switch (s) {
        case Status::pass: return "pass";
        case Status::fail: return "fail";
        default: return "skipped";
    }
}

bool CheckList::passed() const {
    for (const auto& c : checks)
        if (c.status == Status::fail) return false;
    return true;
}

const Check* CheckList::find(const std::string& name) const {
    for (const auto& c : checks)
        if (c.name == name) return &c;
    return nullptr;
}

Check& CheckList::add(std::string name, bool ok, Defect defect, std::string ref, std::string detail) {
    checks.push_back({std::move(name), ok ? Status::pass : Status::fail, defect, std::move(ref),
                      std::move(detail), 0.0});
    return checks.back();
}

void CheckList::append(const CheckList& other) {
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
    flags.insert(flags.end(), other.flags.begin(), other.flags.end());
}

bool check_hermitian(const ConstantMetric& g, const Mat4& L) {
    return L.transpose() * g.matrix() * L == g.matrix();
}

bool check_hermitian(const HermitianMetric& g, const Mat4& L) { return check_hermitian(g.base, L); }

RationalForm hermitian_form(const HermitianMetric& g, const Mat4& L) {
    if (!check_hermitian(g, L)) throw std::invalid_argument("metric is not Hermitian for " + to_string(L));
    // omega(e_a, e_b) = (L e_a)^T G e_b = (L^T G)_{ab}
    const Mat4 w = L.transpose() * g.base.matrix();
    RationalForm omega(2);
    for (BasisMask m : basis_masks(2)) {
        const auto ab = mask_indices(m);
        omega.set(m, GaussianRational(w(ab[0], ab[1])) * g.factor);
    }
    return omega;
}

TorsionReport torsion_from_form(const Mat4& L, RationalForm omega) {
    TorsionReport rep;
    rep.torsion_T = structure_action(L, exterior_d(omega));
    rep.torsion_H = twisted_d(L, omega);
    rep.dH = exterior_d(rep.torsion_H);
    rep.omega = std::move(omega);
    if (rep.torsion_T != ScalarField(kTorsionOverH) * rep.torsion_H)
        throw std::logic_error("torsion form T is not kTorsionOverH * H; sign convention broken");
    return rep;
}

TorsionReport bismut_torsion(const HermitianMetric& g, const Mat4& L) {
    return torsion_from_form(L, hermitian_form(g, L));
}

RationalForm gauduchon_defect(const HermitianMetric& g, const Mat4& L) {
    return exterior_d(twisted_d(L, hermitian_form(g, L)));
}

HKTReport hkt_report(const HermitianMetric& g, const HypercomplexFrame& frame) {
    for (int idx = 0; idx < 3; ++idx)
        if (!check_hermitian(g, frame[idx]))
            throw std::invalid_argument("metric is not hyperhermitian for the frame");
    HKTReport rep;
    std::array<RationalForm, 3> omegas{hermitian_form(g, frame.I), hermitian_form(g, frame.J),
                                       hermitian_form(g, frame.K)};
    rep.Omega = omegas[1] + ScalarField(GaussianRational::i()) * omegas[2];
    rep.omega_is_20 = pq_project(frame.I, rep.Omega, 2, 0) == rep.Omega;
    rep.del_Omega = del(frame.I, rep.Omega, 2, 0);
    for (int idx = 0; idx < 3; ++idx) rep.torsions[idx] = twisted_d(frame[idx], omegas[idx]);
    rep.torsion_match = {rep.torsions[0] == rep.torsions[1], rep.torsions[1] == rep.torsions[2],
                         rep.torsions[0] == rep.torsions[2]};
    rep.strong = exterior_d(rep.torsions[0]).is_zero();
    return rep;
}

ConstantMetric average_metric(const ConstantMetric& g0, const HypercomplexFrame& frame) {
    const Mat4& G = g0.matrix();
    Mat4 sum = G;
    for (int idx = 0; idx < 3; ++idx) sum = sum + frame[idx].transpose() * G * frame[idx];
    return ConstantMetric(Rational(1, 4) * sum);
}

bool bihermitian_check(const HermitianMetric& g, const Mat4& L_plus, const Mat4& L_minus) {
    const TorsionReport plus = bismut_torsion(g, L_plus);
    const TorsionReport minus = bismut_torsion(g, L_minus);
    return plus.torsion_T == -minus.torsion_T && exterior_d(plus.torsion_T).is_zero() &&
           exterior_d(minus.torsion_T).is_zero();
}

}  // namespace hkt
