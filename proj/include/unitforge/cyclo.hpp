#pragma once

#include <optional>
#include <string>
#include <vector>

#include "unitforge/numeric.hpp"

namespace unitforge {

class RealCycloRing;

/// An element of Z[z], z = zeta_p + zeta_p^-1, in the power basis
/// 1, z, ..., z^(d-1) with d = (p-1)/2, always reduced mod the minimal
/// polynomial. The ring must outlive its elements.
struct RealCycloElement {
    const RealCycloRing* ring = nullptr;
    std::vector<Int> c;

    bool is_zero() const;

    RealCycloElement operator+(const RealCycloElement& o) const;
    RealCycloElement operator-(const RealCycloElement& o) const;
    RealCycloElement operator-() const;
    RealCycloElement operator*(const RealCycloElement& o) const;
    bool operator==(const RealCycloElement& o) const;
    bool operator!=(const RealCycloElement& o) const { return !(*this == o); }

    std::string to_string() const;
};

/// Z[z] presented as Z[x]/(psi) where psi is the minimal polynomial of
/// z = zeta_p + zeta_p^-1, built from the recurrence V0 = 2, V1 = x,
/// V_{k+1} = x V_k - V_{k-1} and 1 + sum_{k=1..(p-1)/2} V_k = 0.
class RealCycloRing {
public:
    explicit RealCycloRing(int p);  // p an odd prime, p <= 31

    int p() const { return p_; }
    int degree() const { return degree_; }
    /// Coefficients of psi, constant term first; monic of degree (p-1)/2.
    const std::vector<Int>& psi() const { return psi_; }

    RealCycloElement zero() const;
    RealCycloElement one() const;
    RealCycloElement z() const;
    RealCycloElement from_int(const Int& v) const;
    RealCycloElement from_coeffs(std::vector<Int> coeffs) const;  // reduces mod psi

    /// Image in R/Q = F_p, i.e. the coefficient polynomial evaluated at 2 mod p.
    int residue(const RealCycloElement& x) const;

    /// Field norm as the determinant of the multiplication matrix; x is a
    /// unit iff this is +-1.
    Int norm(const RealCycloElement& x) const;
    bool is_unit(const RealCycloElement& x) const;
    /// Exact inverse of a unit, verified by multiplication.
    RealCycloElement inverse(const RealCycloElement& x) const;

private:
    int p_;
    int degree_;
    std::vector<Int> psi_;

    std::vector<Int> reduce(std::vector<Int> poly) const;
    IntMatrix multiplication_matrix(const RealCycloElement& x) const;
    friend struct RealCycloElement;
};

}  // namespace unitforge
