#pragma once

#include <array>
#include <string>
#include <vector>

#include "hkt/rational.hpp"

namespace hkt {

/// q = w + x i + y j + z k with exact coordinates.
struct Quaternion {
    Rational w{0}, x{0}, y{0}, z{0};

    static Quaternion one() { return {1, 0, 0, 0}; }
    static Quaternion i() { return {0, 1, 0, 0}; }
    static Quaternion j() { return {0, 0, 1, 0}; }
    static Quaternion k() { return {0, 0, 0, 1}; }

    Rational norm_sq() const { return w * w + x * x + y * y + z * z; }
    Quaternion conj() const { return {w, -x, -y, -z}; }

    friend Quaternion operator+(const Quaternion& p, const Quaternion& q) {
        return {p.w + q.w, p.x + q.x, p.y + q.y, p.z + q.z};
    }
    friend Quaternion operator-(const Quaternion& q) { return {-q.w, -q.x, -q.y, -q.z}; }
    friend Quaternion operator*(const Rational& s, const Quaternion& q) {
        return {s * q.w, s * q.x, s * q.y, s * q.z};
    }
    friend bool operator==(const Quaternion&, const Quaternion&) = default;
};

/// Hamilton product.
Quaternion quat_mul(const Quaternion& p, const Quaternion& q);
inline Quaternion operator*(const Quaternion& p, const Quaternion& q) { return quat_mul(p, q); }

/// Exact 4x4 matrix, row-major, acting on coordinate columns (x0, x1, x2, x3).
struct Mat4 {
    std::array<Rational, 16> a{};

    static Mat4 identity();
    static Mat4 zero() { return {}; }

    Rational& operator()(int r, int c) { return a[4 * r + c]; }
    const Rational& operator()(int r, int c) const { return a[4 * r + c]; }

    Mat4 transpose() const;
    bool is_zero() const;
    /// M^2 == -Id.
    bool is_almost_complex() const;

    friend Mat4 operator*(const Mat4& p, const Mat4& q);
    friend Mat4 operator+(const Mat4& p, const Mat4& q);
    friend Mat4 operator-(const Mat4& p, const Mat4& q);
    friend Mat4 operator-(const Mat4& p);
    friend Mat4 operator*(const Rational& s, const Mat4& p);
    friend bool operator==(const Mat4&, const Mat4&) = default;
};

std::string to_string(const Mat4& m);

enum class Side { left, right };

std::string to_string(Side s);

/// Unit imaginary direction (a, b, c) with a^2 + b^2 + c^2 = 1, checked at construction.
class AxisTriple {
public:
    AxisTriple(Rational a, Rational b, Rational c);

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    const Rational& c() const { return c_; }
    Quaternion as_quaternion() const { return {0, a_, b_, c_}; }

    static AxisTriple e1() { return {1, 0, 0}; }
    static AxisTriple e2() { return {0, 1, 0}; }
    static AxisTriple e3() { return {0, 0, 1}; }

private:
    Rational a_, b_, c_;
};

/// Matrix of x -> u x (left) or x -> x u (right). No normalization requirement; linear in u.
Mat4 multiplication_matrix(Side side, const Quaternion& u);

/// Matrix of multiplication by the unit imaginary quaternion a i + b j + c k; squares to -Id.
Mat4 structure_matrix(Side side, const AxisTriple& axis);

/// Triple (I, J, K) of structure matrices. The right-action triple is stored as
/// (R_i, R_j, -R_k) so that IJ = -JI = K holds literally.
struct HypercomplexFrame {
    Side side = Side::left;
    Mat4 I, J, K;

    static HypercomplexFrame left();
    static HypercomplexFrame right();

    /// aI + bJ + cK.
    Mat4 structure(const AxisTriple& axis) const;
    const Mat4& operator[](int idx) const;
};

struct FrameReport {
    std::vector<std::string> failed;
    bool ok() const { return failed.empty(); }
};

/// Identity names used in reports.
inline constexpr const char* kIdentityI2 = "I^2 = -Id";
inline constexpr const char* kIdentityJ2 = "J^2 = -Id";
inline constexpr const char* kIdentityK2 = "K^2 = -Id";
inline constexpr const char* kIdentityAnti = "IJ = -JI";
inline constexpr const char* kIdentityIJK = "IJ = K";

/// Exact check of the quaternionic identities. Failures are listed, never thrown.
FrameReport verify_frame(const HypercomplexFrame& f);

/// Rank of span{I+, J+, K+, I-, J-, K-} inside the 16-dimensional matrix space.
int independence_rank(const HypercomplexFrame& left, const HypercomplexFrame& right);

/// Exact rank by fraction-free Gaussian elimination.
int exact_rank(std::vector<std::vector<Rational>> rows);

}  // namespace hkt
