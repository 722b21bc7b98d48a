#include "hkt/quaternion.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace hkt {

Quaternion quat_mul(const Quaternion& p, const Quaternion& q) {
    return {
        p.w * q.w - p.x * q.x - p.y * q.y - p.z * q.z,
        p.w * q.x + p.x * q.w + p.y * q.z - p.z * q.y,
        p.w * q.y - p.x * q.z + p.y * q.w + p.z * q.x,
        p.w * q.z + p.x * q.y - p.y * q.x + p.z * q.w,
    };
}

Mat4 Mat4::identity() {
    Mat4 m;
    for (int i = 0; i < 4; ++i) m(i, i) = 1;
    return m;
}

Mat4 Mat4::transpose() const {
    Mat4 t;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) t(c, r) = (*this)(r, c);
    return t;
}

bool Mat4::is_zero() const {
    for (const auto& v : a)
        if (sgn(v) != 0) return false;
    return true;
}

bool Mat4::is_almost_complex() const { return (*this) * (*this) == -identity(); }

Mat4 operator*(const Mat4& p, const Mat4& q) {
    Mat4 m;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) {
            Rational s = 0;
            for (int k = 0; k < 4; ++k) s += p(r, k) * q(k, c);
            m(r, c) = s;
        }
    return m;
}

Mat4 operator+(const Mat4& p, const Mat4& q) {
    Mat4 m;
    for (int i = 0; i < 16; ++i) m.a[i] = p.a[i] + q.a[i];
    return m;
}

Mat4 operator-(const Mat4& p, const Mat4& q) {
    Mat4 m;
    for (int i = 0; i < 16; ++i) m.a[i] = p.a[i] - q.a[i];
    return m;
}

Mat4 operator-(const Mat4& p) {
    Mat4 m;
    for (int i = 0; i < 16; ++i) m.a[i] = -p.a[i];
    return m;
}

Mat4 operator*(const Rational& s, const Mat4& p) {
    Mat4 m;
    for (int i = 0; i < 16; ++i) m.a[i] = s * p.a[i];
    return m;
}

std::string to_string(const Mat4& m) {
    std::ostringstream os;
    os << "[";
    for (int r = 0; r < 4; ++r) {
        os << (r ? "; " : "");
        for (int c = 0; c < 4; ++c) os << (c ? " " : "") << m(r, c).get_str();
    }
    os << "]";
    return os.str();
}

std::string to_string(Side s) { return s == Side::left ? "left" : "right"; }

AxisTriple::AxisTriple(Rational a, Rational b, Rational c)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
    if (a_ * a_ + b_ * b_ + c_ * c_ != 1)
        throw std::invalid_argument("axis (" + a_.get_str() + ", " + b_.get_str() + ", " + c_.get_str() +
                                    ") is not a unit vector");
}

namespace {

std::array<Rational, 4> coords(const Quaternion& q) { return {q.w, q.x, q.y, q.z}; }

Quaternion basis(int idx) {
    switch (idx) {
        case 0: return Quaternion::one();
        case 1: return Quaternion::i();
        case 2: return Quaternion::j();
        default: return Quaternion::k();
    }
}

}  // namespace

Mat4 multiplication_matrix(Side side, const Quaternion& u) {
    Mat4 m;
    for (int c = 0; c < 4; ++c) {
        Quaternion image = side == Side::left ? u * basis(c) : basis(c) * u;
        auto col = coords(image);
        for (int r = 0; r < 4; ++r) m(r, c) = col[r];
    }
    return m;
}

Mat4 structure_matrix(Side side, const AxisTriple& axis) {
    return multiplication_matrix(side, axis.as_quaternion());
}

HypercomplexFrame HypercomplexFrame::left() {
    return {Side::left, multiplication_matrix(Side::left, Quaternion::i()),
            multiplication_matrix(Side::left, Quaternion::j()),
            multiplication_matrix(Side::left, Quaternion::k())};
}

HypercomplexFrame HypercomplexFrame::right() {
    return {Side::right, multiplication_matrix(Side::right, Quaternion::i()),
            multiplication_matrix(Side::right, Quaternion::j()),
            -multiplication_matrix(Side::right, Quaternion::k())};
}

Mat4 HypercomplexFrame::structure(const AxisTriple& axis) const {
    return axis.a() * I + axis.b() * J + axis.c() * K;
}

const Mat4& HypercomplexFrame::operator[](int idx) const {
    switch (idx) {
        case 0: return I;
        case 1: return J;
        case 2: return K;
        default: throw std::out_of_range("frame index must be 0, 1 or 2");
    }
}

FrameReport verify_frame(const HypercomplexFrame& f) {
    FrameReport rep;
    const Mat4 minus_id = -Mat4::identity();
    if (f.I * f.I != minus_id) rep.failed.emplace_back(kIdentityI2);
    if (f.J * f.J != minus_id) rep.failed.emplace_back(kIdentityJ2);
    if (f.K * f.K != minus_id) rep.failed.emplace_back(kIdentityK2);
    const Mat4 ij = f.I * f.J;
    if (ij != -(f.J * f.I)) rep.failed.emplace_back(kIdentityAnti);
    if (ij != f.K) rep.failed.emplace_back(kIdentityIJK);
    return rep;
}

int exact_rank(std::vector<std::vector<Rational>> rows) {
    if (rows.empty()) return 0;
    const std::size_t cols = rows.front().size();
    int rank = 0;
    for (std::size_t c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && sgn(rows[pivot][c]) == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[pivot], rows[rank]);
        for (std::size_t r = rank + 1; r < rows.size(); ++r) {
            if (sgn(rows[r][c]) == 0) continue;
            Rational f = rows[r][c] / rows[rank][c];
            for (std::size_t k = c; k < cols; ++k) rows[r][k] -= f * rows[rank][k];
        }
        ++rank;
    }
    return rank;
}

int independence_rank(const HypercomplexFrame& left, const HypercomplexFrame& right) {
    std::vector<std::vector<Rational>> rows;
    for (const auto* f : {&left, &right})
        for (int idx = 0; idx < 3; ++idx) rows.emplace_back((*f)[idx].a.begin(), (*f)[idx].a.end());
    return exact_rank(std::move(rows));
}

}  // namespace hkt
