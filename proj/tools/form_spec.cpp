#include "form_spec.hpp"

#include <cctype>
#include <stdexcept>
#include <string>
#include <vector>

namespace hkt::cli {

namespace {

std::string strip(std::string_view s) {
    std::string out;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) out += c;
    return out;
}

[[noreturn]] void fail(const std::string& what, std::string_view text) {
    throw std::invalid_argument("form spec: " + what + " in \"" + std::string(text) + "\"");
}

/// "a", "bi", "i", "a+bi", "a-i" (no surrounding sign handling beyond the leading one).
GaussianRational parse_gaussian(const std::string& s, std::string_view whole) {
    if (s.empty()) fail("empty coefficient", whole);
    if (s.back() != 'i') return GaussianRational(parse_rational(s));
    // Split the real part off at the last top-level sign that is not the leading one.
    std::size_t cut = std::string::npos;
    for (std::size_t k = s.size() - 1; k > 0; --k)
        if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
            cut = k;
            break;
        }
    const std::string re = cut == std::string::npos ? "" : s.substr(0, cut);
    std::string im = cut == std::string::npos ? s.substr(0, s.size() - 1) : s.substr(cut, s.size() - 1 - cut);
    if (!im.empty() && im.back() == '*') im.pop_back();
    if (im.empty() || im == "+") im = "1";
    if (im == "-") im = "-1";
    return {re.empty() ? Rational(0) : parse_rational(re), parse_rational(im)};
}

BasisMask parse_basis(const std::string& s, std::string_view whole) {
    BasisMask m = 0;
    std::size_t pos = 0;
    bool any = false;
    while (pos < s.size()) {
        if (s.compare(pos, 2, "dx") != 0) fail("expected dx", whole);
        pos += 2;
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos]))) fail("missing index after dx", whole);
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            const int idx = s[pos] - '0';
            if (idx > 3) fail("index out of range 0..3", whole);
            if (m & (1u << idx)) fail("repeated index", whole);
            m = static_cast<BasisMask>(m | (1u << idx));
            any = true;
            ++pos;
        }
        if (pos < s.size()) {
            if (s[pos] != '^') fail("unexpected character", whole);
            ++pos;
        }
    }
    if (!any) fail("empty basis element", whole);
    return m;
}

/// Sign of the permutation sorting the indices in the order written.
int order_sign(const std::string& s) {
    std::vector<int> idx;
    for (char c : s)
        if (std::isdigit(static_cast<unsigned char>(c))) idx.push_back(c - '0');
    int inv = 0;
    for (std::size_t a = 0; a < idx.size(); ++a)
        for (std::size_t b = a + 1; b < idx.size(); ++b)
            if (idx[a] > idx[b]) ++inv;
    return inv % 2 ? -1 : 1;
}

std::vector<std::string> split_terms(const std::string& s, std::string_view whole) {
    std::vector<std::string> terms;
    std::string cur;
    int depth = 0;
    for (std::size_t k = 0; k < s.size(); ++k) {
        const char c = s[k];
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (depth < 0) fail("unbalanced parentheses", whole);
        const bool after_op = k == 0 || s[k - 1] == '*' || s[k - 1] == '/' || s[k - 1] == 'e' || s[k - 1] == 'E';
        if (depth == 0 && (c == '+' || c == '-') && !after_op && !cur.empty()) {
            terms.push_back(cur);
            cur.clear();
        }
        cur += c;
    }
    if (depth != 0) fail("unbalanced parentheses", whole);
    if (!cur.empty()) terms.push_back(cur);
    return terms;
}

}  // namespace

RationalForm parse_form_spec(std::string_view text, int expected_degree) {
    const std::string s = strip(text);
    if (s.empty()) fail("empty", text);
    if (s == "0") {
        if (expected_degree < 0) fail("degree of 0 is ambiguous", text);
        return RationalForm(expected_degree);
    }
    int degree = expected_degree;
    RationalForm out(degree < 0 ? 0 : degree);
    bool first = true;
    for (std::string term : split_terms(s, text)) {
        GaussianRational coeff(1);
        if (term[0] == '+' || term[0] == '-') {
            if (term[0] == '-') coeff = GaussianRational(-1);
            term.erase(0, 1);
        }
        std::vector<std::string> factors;
        std::string cur;
        int depth = 0;
        for (char c : term) {
            if (c == '(') ++depth;
            if (c == ')') --depth;
            if (c == '*' && depth == 0) {
                factors.push_back(cur);
                cur.clear();
            } else {
                cur += c;
            }
        }
        factors.push_back(cur);
        BasisMask mask = 0;
        bool has_basis = false;
        for (const auto& f : factors) {
            if (f.empty()) fail("empty factor", text);
            if (f.rfind("dx", 0) == 0) {
                if (has_basis) fail("two basis elements in one term", text);
                mask = parse_basis(f, text);
                coeff = coeff * GaussianRational(order_sign(f));
                has_basis = true;
            } else if (f.front() == '(') {
                if (f.back() != ')') fail("unbalanced parentheses", text);
                coeff = coeff * parse_gaussian(f.substr(1, f.size() - 2), text);
            } else {
                try {
                    coeff = coeff * parse_gaussian(f, text);
                } catch (const std::invalid_argument&) {
                    fail("bad coefficient '" + f + "'", text);
                }
            }
        }
        const int deg = has_basis ? mask_degree(mask) : 0;
        if (first && degree < 0) {
            degree = deg;
            out = RationalForm(degree);
        }
        if (deg != degree) fail("terms of different degree", text);
        first = false;
        out.add(mask, coeff);
    }
    return out;
}

}  // namespace hkt::cli
