#include "hkt/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace hkt {

int total_degree(const Monomial& m) { return m[0] + m[1] + m[2] + m[3]; }

Polynomial::Polynomial(GaussianRational c) {
    if (!c.is_zero()) terms_.emplace(Monomial{0, 0, 0, 0}, std::move(c));
}

Polynomial Polynomial::variable(int i) {
    Monomial m{0, 0, 0, 0};
    m[i] = 1;
    return monomial(m);
}

Polynomial Polynomial::phi() {
    Polynomial p;
    for (int i = 0; i < 4; ++i) {
        Monomial m{0, 0, 0, 0};
        m[i] = 2;
        p.add_term(m, 1);
    }
    return p;
}

Polynomial Polynomial::monomial(const Monomial& m, GaussianRational c) {
    Polynomial p;
    p.add_term(m, c);
    return p;
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
}

GaussianRational Polynomial::constant_term() const {
    auto it = terms_.find(Monomial{0, 0, 0, 0});
    return it == terms_.end() ? GaussianRational{} : it->second;
}

int Polynomial::degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, total_degree(m));
    return d;
}

void Polynomial::add_term(const Monomial& m, const GaussianRational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Polynomial& Polynomial::operator*=(const GaussianRational& s) {
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial out;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) {
            Monomial m;
            for (int i = 0; i < 4; ++i) m[i] = static_cast<std::uint8_t>(ma[i] + mb[i]);
            out.add_term(m, ca * cb);
        }
    return out;
}

Polynomial Polynomial::derivative(int i) const {
    Polynomial out;
    for (const auto& [m, c] : terms_) {
        if (m[i] == 0) continue;
        Monomial d = m;
        --d[i];
        out.add_term(d, c * GaussianRational(static_cast<long>(m[i])));
    }
    return out;
}

Polynomial Polynomial::scaled(const Rational& q) const {
    Polynomial out;
    for (const auto& [m, c] : terms_) {
        Rational f = 1;
        for (int k = 0; k < total_degree(m); ++k) f *= q;
        out.add_term(m, c * GaussianRational(f));
    }
    return out;
}

Polynomial Polynomial::conj() const {
    Polynomial out;
    for (const auto& [m, c] : terms_) out.add_term(m, c.conj());
    return out;
}

Polynomial Polynomial::divmod_phi(Polynomial& quotient) const {
    // phi is monic of degree 2 in x0, so ordinary division in x0 over Q(i)[x1,x2,x3] is exact.
    quotient = Polynomial{};
    Polynomial rem = *this;
    const Polynomial ph = phi();
    for (;;) {
        auto it = std::find_if(rem.terms_.begin(), rem.terms_.end(),
                               [](const auto& t) { return t.first[0] >= 2; });
        if (it == rem.terms_.end()) break;
        Monomial m = it->first;
        GaussianRational c = it->second;
        m[0] -= 2;
        Polynomial step = monomial(m, c);
        quotient += step;
        rem -= step * ph;
    }
    return rem;
}

std::complex<double> Polynomial::evaluate(const std::array<double, 4>& x) const {
    std::complex<double> s = 0;
    for (const auto& [m, c] : terms_) {
        double v = 1;
        for (int i = 0; i < 4; ++i) v *= std::pow(x[i], m[i]);
        s += c.to_complex() * v;
    }
    return s;
}

double Polynomial::max_abs_coefficient() const {
    double best = 0;
    for (const auto& [m, c] : terms_) best = std::max(best, std::abs(c.to_complex()));
    return best;
}

std::string to_string(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        if (!first) os << " + ";
        first = false;
        os << to_string(c);
        for (int i = 0; i < 4; ++i) {
            if (m[i] == 0) continue;
            os << "*x" << i;
            if (m[i] > 1) os << "^" << int(m[i]);
        }
    }
    return os.str();
}

}  // namespace hkt
