#pragma once

#include <complex>
#include <compare>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace hkt {

using Rational = mpq_class;

/// Parse "p", "p/q" or a terminating decimal such as "1.5". Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& r);

/// Exact square root when both numerator and denominator are perfect squares.
bool exact_sqrt(const Rational& r, Rational& out);

/// Element of Q(i). Coefficient ring for every exact form in the library.
struct GaussianRational {
    Rational re{0};
    Rational im{0};

    GaussianRational() = default;
    GaussianRational(Rational r) : re(std::move(r)) {}
    GaussianRational(long v) : re(v) {}
    GaussianRational(int v) : re(v) {}
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    static GaussianRational i() { return {Rational(0), Rational(1)}; }

    bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
    bool is_real() const { return sgn(im) == 0; }
    GaussianRational conj() const { return {re, -im}; }
    Rational norm_sq() const { return re * re + im * im; }
    std::complex<double> to_complex() const { return {re.get_d(), im.get_d()}; }

    GaussianRational& operator+=(const GaussianRational& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o) {
        Rational r = re * o.re - im * o.im;
        Rational i = re * o.im + im * o.re;
        re = std::move(r);
        im = std::move(i);
        return *this;
    }
    GaussianRational& operator/=(const GaussianRational& o);

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
    friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }
    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }
};

std::string to_string(const GaussianRational& z);

}  // namespace hkt
