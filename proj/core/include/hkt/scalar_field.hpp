#pragma once

#include <string>

#include "hkt/polynomial.hpp"

namespace hkt {

/// numerator / phi^k with phi = |x|^2, on R^4 minus the origin.
///
/// Canonical form: the numerator is not divisible by phi unless k == 0, and the zero field has
/// k == 0. Structural equality is therefore equality of functions.
class ScalarField {
public:
    ScalarField() = default;
    ScalarField(Polynomial numerator, int k = 0);  // NOLINT: polynomials convert implicitly
    ScalarField(GaussianRational c) : ScalarField(Polynomial(std::move(c))) {}  // NOLINT
    ScalarField(long c) : ScalarField(GaussianRational(c)) {}  // NOLINT
    ScalarField(int c) : ScalarField(GaussianRational(c)) {}  // NOLINT

    static ScalarField phi() { return ScalarField(Polynomial::phi()); }
    static ScalarField inverse_phi(int power = 1) { return ScalarField(Polynomial(1), power); }
    static ScalarField variable(int i) { return ScalarField(Polynomial::variable(i)); }

    const Polynomial& numerator() const { return num_; }
    int phi_power() const { return k_; }
    bool is_zero() const { return num_.is_zero(); }
    /// True when the value is a constant c (no x dependence).
    bool is_constant() const { return k_ == 0 && num_.is_constant(); }

    ScalarField& operator+=(const ScalarField& o);
    ScalarField& operator-=(const ScalarField& o);
    ScalarField& operator*=(const ScalarField& o);
    ScalarField& operator*=(const GaussianRational& s);
    friend ScalarField operator+(ScalarField a, const ScalarField& b) { return a += b; }
    friend ScalarField operator-(ScalarField a, const ScalarField& b) { return a -= b; }
    friend ScalarField operator-(ScalarField a) { return a *= GaussianRational(-1); }
    friend ScalarField operator*(ScalarField a, const ScalarField& b) { return a *= b; }
    friend ScalarField operator*(const GaussianRational& s, ScalarField a) { return a *= s; }
    friend bool operator==(const ScalarField&, const ScalarField&) = default;

    /// Exact division by a field of the form c / phi^j (c a nonzero constant).
    /// Throws std::domain_error for any other divisor.
    ScalarField divide_exact(const ScalarField& divisor) const;

    ScalarField partial(int i) const;
    /// f(q x).
    ScalarField scaled(const Rational& q) const;
    ScalarField conj() const;

    std::complex<double> evaluate(const std::array<double, 4>& x) const;

private:
    void canonicalize();

    Polynomial num_;
    int k_ = 0;
};

std::string to_string(const ScalarField& f);

}  // namespace hkt
