#pragma once

#include <vector>

#include "unitforge/abelian.hpp"
#include "unitforge/numeric.hpp"
#include "unitforge/presentation.hpp"

namespace unitforge {

/// U * M * V = diag(d1, ..., dr, 0, ...) with d1 | d2 | ..., U and V
/// unimodular. The certificates are verified before the result is returned.
struct SnfResult {
    std::vector<Int> diagonal;  // length min(rows, cols), zeros trailing
    IntMatrix u;                // rows x rows
    IntMatrix v;                // cols x cols

    long rank() const;
    /// Nontrivial invariant factors (entries > 1) in divisibility order.
    std::vector<Int> invariant_factors() const;
};

SnfResult smith_normal_form(const IntMatrix& m);

/// Exponent-sum matrix of a presentation: one row per relator, one column
/// per generator.
IntMatrix relator_matrix(const Presentation& p);

/// Abelianization of the presented group via the Smith normal form of its
/// relator matrix.
AbelianGroupType abelianization(const Presentation& p);

}  // namespace unitforge
