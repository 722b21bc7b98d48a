#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <vector>

#include "hkt/scalar_field.hpp"

namespace hkt {

/// Basis m-form dx_{i1}^...^dx_{im} with i1 < ... < im, encoded as a bitmask over {0,1,2,3}.
using BasisMask = std::uint8_t;

int mask_degree(BasisMask m);
std::vector<int> mask_indices(BasisMask m);
/// All masks of the given degree in increasing lexicographic order of index tuples.
const std::vector<BasisMask>& basis_masks(int degree);
std::string mask_name(BasisMask m);

/// Sign of dx^a ^ dx^b relative to dx^(a|b); zero when the masks overlap.
int wedge_sign(BasisMask a, BasisMask b);

/// Homogeneous m-form on R^4 minus the origin with ScalarField coefficients.
/// Only sorted index tuples are stored, so antisymmetry is structural.
class RationalForm {
public:
    using Components = std::map<BasisMask, ScalarField>;

    explicit RationalForm(int degree = 0);

    static RationalForm function(ScalarField f);
    static RationalForm dx(int i);
    /// c dx_{i1}^...^dx_{im}; indices may be unsorted (sign applied) and must be distinct.
    static RationalForm basis(std::initializer_list<int> indices, ScalarField c = 1);
    static RationalForm volume() { return basis({0, 1, 2, 3}); }

    int degree() const { return degree_; }
    const Components& components() const { return comps_; }
    const ScalarField& coeff(BasisMask m) const;
    void set(BasisMask m, ScalarField f);
    void add(BasisMask m, const ScalarField& f);

    bool is_zero() const { return comps_.empty(); }

    RationalForm& operator+=(const RationalForm& o);
    RationalForm& operator-=(const RationalForm& o);
    RationalForm& operator*=(const ScalarField& f);
    friend RationalForm operator+(RationalForm a, const RationalForm& b) { return a += b; }
    friend RationalForm operator-(RationalForm a, const RationalForm& b) { return a -= b; }
    friend RationalForm operator-(RationalForm a) { return a *= ScalarField(-1); }
    friend RationalForm operator*(const ScalarField& f, RationalForm a) { return a *= f; }
    friend bool operator==(const RationalForm&, const RationalForm&) = default;

    RationalForm conj() const;

private:
    int degree_;
    Components comps_;
};

std::string to_string(const RationalForm& a);

/// Largest |coefficient| over all numerators; 0 exactly when the form is zero.
double defect_size(const RationalForm& a);

/// Exterior product. Throws std::domain_error when deg a + deg b > 4.
RationalForm wedge(const RationalForm& a, const RationalForm& b);

/// Exterior derivative. Throws std::domain_error for 4-forms.
RationalForm exterior_d(const RationalForm& a);

}  // namespace hkt
