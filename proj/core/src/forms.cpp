#include "hkt/forms.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <stdexcept>

namespace hkt {

int mask_degree(BasisMask m) { return std::popcount(static_cast<unsigned>(m)); }

std::vector<int> mask_indices(BasisMask m) {
    std::vector<int> idx;
    for (int i = 0; i < 4; ++i)
        if (m & (1u << i)) idx.push_back(i);
    return idx;
}

const std::vector<BasisMask>& basis_masks(int degree) {
    static const std::array<std::vector<BasisMask>, 5> table = [] {
        std::array<std::vector<BasisMask>, 5> t;
        std::vector<std::pair<std::vector<int>, BasisMask>> all;
        for (unsigned m = 0; m < 16; ++m) all.emplace_back(mask_indices(static_cast<BasisMask>(m)), m);
        std::sort(all.begin(), all.end());
        for (const auto& [idx, m] : all) t[idx.size()].push_back(m);
        return t;
    }();
    if (degree < 0 || degree > 4) throw std::out_of_range("form degree must be in 0..4");
    return table[degree];
}

std::string mask_name(BasisMask m) {
    if (m == 0) return "1";
    std::string s;
    for (int i : mask_indices(m)) s += (s.empty() ? "dx" : "^dx") + std::to_string(i);
    return s;
}

int wedge_sign(BasisMask a, BasisMask b) {
    if (a & b) return 0;
    int inversions = 0;
    for (int i : mask_indices(a))
        for (int j : mask_indices(b))
            if (i > j) ++inversions;
    return inversions % 2 ? -1 : 1;
}

RationalForm::RationalForm(int degree) : degree_(degree) {
    if (degree < 0 || degree > 4) throw std::domain_error("form degree must be in 0..4");
}

RationalForm RationalForm::function(ScalarField f) {
    RationalForm a(0);
    a.set(0, std::move(f));
    return a;
}

RationalForm RationalForm::dx(int i) { return basis({i}); }

RationalForm RationalForm::basis(std::initializer_list<int> indices, ScalarField c) {
    std::vector<int> idx(indices);
    int sign = 1;
    for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t j = i + 1; j < idx.size(); ++j) {
            if (idx[i] == idx[j]) throw std::invalid_argument("repeated index in basis form");
            if (idx[i] > idx[j]) sign = -sign;
        }
    BasisMask m = 0;
    for (int i : idx) {
        if (i < 0 || i > 3) throw std::out_of_range("coordinate index must be in 0..3");
        m |= static_cast<BasisMask>(1u << i);
    }
    RationalForm a(static_cast<int>(idx.size()));
    c *= GaussianRational(sign);
    a.set(m, std::move(c));
    return a;
}

const ScalarField& RationalForm::coeff(BasisMask m) const {
    static const ScalarField zero;
    auto it = comps_.find(m);
    return it == comps_.end() ? zero : it->second;
}

void RationalForm::set(BasisMask m, ScalarField f) {
    if (mask_degree(m) != degree_) throw std::domain_error("basis mask does not match form degree");
    if (f.is_zero())
        comps_.erase(m);
    else
        comps_[m] = std::move(f);
}

void RationalForm::add(BasisMask m, const ScalarField& f) {
    if (f.is_zero()) return;
    set(m, coeff(m) + f);
}

RationalForm& RationalForm::operator+=(const RationalForm& o) {
    if (o.degree_ != degree_) throw std::domain_error("adding forms of different degree");
    for (const auto& [m, f] : o.comps_) add(m, f);
    return *this;
}

RationalForm& RationalForm::operator-=(const RationalForm& o) {
    if (o.degree_ != degree_) throw std::domain_error("subtracting forms of different degree");
    for (const auto& [m, f] : o.comps_) add(m, -f);
    return *this;
}

RationalForm& RationalForm::operator*=(const ScalarField& f) {
    Components out;
    for (auto& [m, c] : comps_) {
        ScalarField p = c * f;
        if (!p.is_zero()) out.emplace(m, std::move(p));
    }
    comps_ = std::move(out);
    return *this;
}

RationalForm RationalForm::conj() const {
    RationalForm out(degree_);
    for (const auto& [m, f] : comps_) out.set(m, f.conj());
    return out;
}

std::string to_string(const RationalForm& a) {
    if (a.is_zero()) return "0";
    std::string s;
    for (const auto& [m, f] : a.components()) {
        if (!s.empty()) s += " + ";
        s += "[" + to_string(f) + "]";
        if (m != 0) s += " " + mask_name(m);
    }
    return s;
}

double defect_size(const RationalForm& a) {
    double best = 0;
    for (const auto& [m, f] : a.components()) best = std::max(best, f.numerator().max_abs_coefficient());
    return best;
}

RationalForm wedge(const RationalForm& a, const RationalForm& b) {
    const int deg = a.degree() + b.degree();
    if (deg > 4) throw std::domain_error("wedge product exceeds top degree 4");
    RationalForm out(deg);
    for (const auto& [ma, fa] : a.components())
        for (const auto& [mb, fb] : b.components()) {
            const int s = wedge_sign(ma, mb);
            if (s == 0) continue;
            out.add(ma | mb, GaussianRational(s) * (fa * fb));
        }
    return out;
}

RationalForm exterior_d(const RationalForm& a) {
    if (a.degree() >= 4) throw std::domain_error("exterior derivative of a top-degree form");
    RationalForm out(a.degree() + 1);
    for (const auto& [m, f] : a.components())
        for (int i = 0; i < 4; ++i) {
            const auto bit = static_cast<BasisMask>(1u << i);
            if (m & bit) continue;
            out.add(m | bit, GaussianRational(wedge_sign(bit, m)) * f.partial(i));
        }
    return out;
}

}  // namespace hkt
