#pragma once

#include <string>
#include <vector>

#include "unitforge/numeric.hpp"

namespace unitforge {

/// A finitely generated abelian group in canonical invariant-factor form:
/// Z^free_rank x C_{d1} x ... x C_{dk} with d1 | d2 | ... and every di >= 2.
struct AbelianGroupType {
    long free_rank = 0;
    std::vector<Int> invariant_factors;

    AbelianGroupType() = default;
    AbelianGroupType(long rank, std::vector<Int> factors);

    bool is_trivial() const { return free_rank == 0 && invariant_factors.empty(); }
    bool is_finite() const { return free_rank == 0; }

    /// Exponent of the torsion part (1 for trivial torsion).
    Int torsion_exponent() const;
    Int torsion_order() const;
    std::vector<Int> torsion_primes() const;

    /// e.g. "Z x C4 x C2^5", "C2 x C2", "1".
    std::string to_string() const;

    bool operator==(const AbelianGroupType& o) const = default;
};

}  // namespace unitforge
