#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <map>
#include <string>

#include "hkt/rational.hpp"

namespace hkt {

/// Exponents of x0..x3.
using Monomial = std::array<std::uint8_t, 4>;

int total_degree(const Monomial& m);

/// Sparse polynomial in x0..x3 with Gaussian-rational coefficients. Zero terms are never stored.
class Polynomial {
public:
    using TermMap = std::map<Monomial, GaussianRational>;

    Polynomial() = default;
    Polynomial(GaussianRational c);  // NOLINT: constants convert implicitly

    static Polynomial variable(int i);
    /// x0^2 + x1^2 + x2^2 + x3^2.
    static Polynomial phi();
    static Polynomial monomial(const Monomial& m, GaussianRational c = 1);

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Constant term (zero polynomial gives 0).
    GaussianRational constant_term() const;
    int degree() const;

    void add_term(const Monomial& m, const GaussianRational& c);

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const GaussianRational& s);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator-(Polynomial a) { return a *= GaussianRational(-1); }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(GaussianRational s, Polynomial a) { return a *= s; }
    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    Polynomial derivative(int i) const;
    /// p(q x) for a scalar q.
    Polynomial scaled(const Rational& q) const;
    Polynomial conj() const;

    /// p = quotient * phi + remainder with remainder of degree <= 1 in x0.
    Polynomial divmod_phi(Polynomial& quotient) const;

    std::complex<double> evaluate(const std::array<double, 4>& x) const;
    double max_abs_coefficient() const;

private:
    TermMap terms_;
};

std::string to_string(const Polynomial& p);

}  // namespace hkt
