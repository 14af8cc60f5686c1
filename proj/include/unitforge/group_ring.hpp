#pragma once

#include <map>
#include <string>
#include <vector>

#include "unitforge/group.hpp"
#include "unitforge/numeric.hpp"

namespace unitforge {

/// An element of the integral group ring ZG, stored as a sparse map from
/// element index to coefficient. Zero coefficients are never stored.
/// Elements are immutable values; the referenced group must outlive them.
class GroupRingElement {
public:
    explicit GroupRingElement(const FiniteGroup& g) : group_(&g) {}

    static GroupRingElement zero(const FiniteGroup& g) { return GroupRingElement(g); }
    static GroupRingElement one(const FiniteGroup& g) { return element(g, 0); }
    static GroupRingElement element(const FiniteGroup& g, int index);
    static GroupRingElement from_coeffs(const FiniteGroup& g, std::map<int, Int> coeffs);

    const FiniteGroup& group() const { return *group_; }
    const std::map<int, Int>& coeffs() const { return coeffs_; }
    Int coeff(int index) const;
    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const;
    /// True when the element is a single group element with coefficient +1 or -1.
    bool is_trivial_unit() const;
    int support_size() const { return static_cast<int>(coeffs_.size()); }

    GroupRingElement operator+(const GroupRingElement& o) const;
    GroupRingElement operator-(const GroupRingElement& o) const;
    GroupRingElement operator-() const;
    GroupRingElement operator*(const GroupRingElement& o) const;
    GroupRingElement operator*(const Int& scalar) const;
    bool operator==(const GroupRingElement& o) const;
    bool operator!=(const GroupRingElement& o) const { return !(*this == o); }

    Int augmentation() const;

    std::string to_string() const;

private:
    const FiniteGroup* group_;
    std::map<int, Int> coeffs_;

    void add_term(int index, const Int& c);
};

GroupRingElement add(const GroupRingElement& x, const GroupRingElement& y);
GroupRingElement negate(const GroupRingElement& x);
GroupRingElement multiply(const GroupRingElement& x, const GroupRingElement& y);
Int augment(const GroupRingElement& x);

/// Sum of the elements of a subgroup (given as an index set) with coefficient 1.
GroupRingElement tilde(const FiniteGroup& g, const std::vector<int>& subgroup);
/// Sum over the cyclic subgroup generated by x.
GroupRingElement tilde(const FiniteGroup& g, int x);

/// Left-multiplication matrix of u on the standard basis of ZG.
IntMatrix regular_representation(const GroupRingElement& u);

/// u is a unit of ZG iff the determinant of its regular representation is +-1.
bool is_unit(const GroupRingElement& u);
/// Two-sided inverse, verified by multiplication. Throws std::domain_error on
/// non-units, std::logic_error if the verification ever fails.
GroupRingElement inverse(const GroupRingElement& u);
/// Exact k-th power; negative k requires u to be a unit.
GroupRingElement power(const GroupRingElement& u, long k);

/// x conjugated by the unit y, i.e. y^-1 x y.
GroupRingElement conjugate(const GroupRingElement& x, const GroupRingElement& y);
GroupRingElement conjugate(const GroupRingElement& x, const GroupRingElement& y,
                           const GroupRingElement& y_inverse);
/// Conjugation by a group element (a permutation of the support).
GroupRingElement conjugate_by_element(const GroupRingElement& x, int y);
/// [x, y] = x^-1 y^-1 x y; both arguments must be units.
GroupRingElement commutator(const GroupRingElement& x, const GroupRingElement& y);

/// Parse "1 + a - a^2 + 2*a*b" against the group's named generators.
GroupRingElement parse_element(const FiniteGroup& g, const std::string& text);

}  // namespace unitforge
