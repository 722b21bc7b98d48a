#include "hkt/rational.hpp"

#include <stdexcept>

namespace hkt {

Rational parse_rational(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw std::invalid_argument("empty rational");
    try {
        if (auto dot = s.find('.'); dot != std::string::npos) {
            if (s.find('/') != std::string::npos) throw std::invalid_argument("mixed decimal/fraction");
            std::string digits = s.substr(0, dot) + s.substr(dot + 1);
            std::string den = "1" + std::string(s.size() - dot - 1, '0');
            Rational r(digits + "/" + den, 10);
            r.canonicalize();
            return r;
        }
        Rational r(s, 10);
        if (r.get_den() == 0) throw std::invalid_argument("zero denominator");
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("not a rational number: '" + s + "'");
    }
}

std::string to_string(const Rational& r) { return r.get_str(); }

bool exact_sqrt(const Rational& r, Rational& out) {
    if (sgn(r) < 0) return false;
    const mpz_class& num = r.get_num();
    const mpz_class& den = r.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) return false;
    mpz_class sn, sd;
    mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
    out = Rational(sn, sd);
    out.canonicalize();
    return true;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
    Rational n = o.norm_sq();
    if (sgn(n) == 0) throw std::domain_error("division by zero Gaussian rational");
    *this *= o.conj();
    re /= n;
    im /= n;
    return *this;
}

std::string to_string(const GaussianRational& z) {
    if (z.is_real()) return z.re.get_str();
    if (sgn(z.re) == 0) return z.im.get_str() + "i";
    std::string sign = sgn(z.im) < 0 ? "-" : "+";
    Rational a = abs(z.im);
    return "(" + z.re.get_str() + sign + a.get_str() + "i)";
}

}  // namespace hkt
