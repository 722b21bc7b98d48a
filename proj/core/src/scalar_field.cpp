#include "hkt/scalar_field.hpp"

#include <cmath>
#include <stdexcept>

namespace hkt {

namespace {

Polynomial phi_to(int k) {
    Polynomial p(1);
    const Polynomial ph = Polynomial::phi();
    for (int i = 0; i < k; ++i) p = p * ph;
    return p;
}

}  // namespace

ScalarField::ScalarField(Polynomial numerator, int k) : num_(std::move(numerator)), k_(k) {
    if (k_ < 0) {
        num_ = num_ * phi_to(-k_);
        k_ = 0;
    }
    canonicalize();
}

void ScalarField::canonicalize() {
    if (num_.is_zero()) {
        k_ = 0;
        return;
    }
    while (k_ > 0) {
        Polynomial q;
        if (!num_.divmod_phi(q).is_zero()) break;
        num_ = std::move(q);
        --k_;
    }
}

ScalarField& ScalarField::operator+=(const ScalarField& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    const int k = std::max(k_, o.k_);
    num_ = num_ * phi_to(k - k_) + o.num_ * phi_to(k - o.k_);
    k_ = k;
    canonicalize();
    return *this;
}

ScalarField& ScalarField::operator-=(const ScalarField& o) { return *this += -o; }

ScalarField& ScalarField::operator*=(const ScalarField& o) {
    num_ = num_ * o.num_;
    k_ += o.k_;
    canonicalize();
    return *this;
}

ScalarField& ScalarField::operator*=(const GaussianRational& s) {
    num_ *= s;
    if (num_.is_zero()) k_ = 0;
    return *this;
}

ScalarField ScalarField::divide_exact(const ScalarField& divisor) const {
    if (divisor.is_zero() || !divisor.num_.is_constant())
        throw std::domain_error("divisor " + to_string(divisor) + " is not of the form c/phi^j");
    ScalarField out(num_ * phi_to(divisor.k_), k_);
    out *= GaussianRational(1) / divisor.num_.constant_term();
    return out;
}

ScalarField ScalarField::partial(int i) const {
    if (k_ == 0) return ScalarField(num_.derivative(i));
    // d(P/phi^k) = (dP phi - 2 k x_i P) / phi^(k+1)
    Polynomial n = num_.derivative(i) * Polynomial::phi() -
                   GaussianRational(2L * k_) * (Polynomial::variable(i) * num_);
    return ScalarField(std::move(n), k_ + 1);
}

ScalarField ScalarField::scaled(const Rational& q) const {
    if (sgn(q) == 0) throw std::invalid_argument("scale factor must be nonzero");
    ScalarField out(num_.scaled(q), k_);
    Rational f = 1;
    for (int i = 0; i < 2 * k_; ++i) f *= q;
    out *= GaussianRational(Rational(1) / f);
    return out;
}

ScalarField ScalarField::conj() const { return ScalarField(num_.conj(), k_); }

std::complex<double> ScalarField::evaluate(const std::array<double, 4>& x) const {
    double ph = x[0] * x[0] + x[1] * x[1] + x[2] * x[2] + x[3] * x[3];
    return num_.evaluate(x) / std::pow(ph, k_);
}

std::string to_string(const ScalarField& f) {
    if (f.phi_power() == 0) return to_string(f.numerator());
    return "(" + to_string(f.numerator()) + ")/phi^" + std::to_string(f.phi_power());
}

}  // namespace hkt
