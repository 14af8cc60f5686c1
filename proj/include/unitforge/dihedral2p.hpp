#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "unitforge/cyclo.hpp"

namespace unitforge {

/// 2x2 matrix over Z[z]. The unit group U(ZD_2p) is isomorphic to the group
/// U of such matrices with det = +-1 mod Q and both column sums congruent to
/// a common +-1 mod Q, where Q is the maximal ideal over p.
struct Mat2R {
    RealCycloElement a, b, c, d;

    const RealCycloRing& ring() const { return *a.ring; }

    Mat2R operator*(const Mat2R& o) const;
    bool operator==(const Mat2R& o) const;
    bool operator!=(const Mat2R& o) const { return !(*this == o); }

    RealCycloElement det() const;
    /// Inverse of a matrix whose determinant is a unit of the ring.
    Mat2R inverse() const;
    /// y^-1 * this * y.
    Mat2R conjugated_by(const Mat2R& y) const;

    std::string to_string() const;

    static Mat2R identity(const RealCycloRing& r);
    static Mat2R swap_matrix(const RealCycloRing& r);  // (0 1; 1 0)
    /// E(q) = (1 q; 0 1); also used as the centralizing C(t).
    static Mat2R elementary_upper(const RealCycloElement& q);
    static Mat2R elementary_lower(const RealCycloElement& q);  // (1 0; q 1)
    static Mat2R diagonal(const RealCycloElement& lambda, const RealCycloElement& mu);
    /// Y = (-1 -2; 0 1), the involution that inverts E(q) by conjugation.
    static Mat2R involution_y(const RealCycloRing& r);
};

/// Membership in U: det a unit with residue +-1 and a+c = b+d = common +-1
/// mod Q.
bool is_in_U(const Mat2R& m);
bool is_in_U1(const Mat2R& m);  // U intersected with SL2

struct UDecomposition {
    RealCycloElement diag;  // residue-1 unit delta'
    bool swapped = false;
    Mat2R sl_part;          // element of U1
};

/// A = diag(delta', 1) * swap^eps * A1 with A1 in U1; reassembly is verified.
UDecomposition decompose_U(const Mat2R& m);

/// For S in SL2: the residue lift t with columns of Y^{C(t)S} summing to -1
/// mod Q (e = 0); std::nullopt when c = d mod Q, where no correction is
/// needed. In that branch the column-sum congruence is verified for t = 0.
std::optional<RealCycloElement> solve_t(const Mat2R& s);

struct InvolutionWitness {
    Mat2R y_prime;
    int e_observed = 0;  // common column-sum class: 0 for -1, 1 for +1
    bool used_t = false;
};

/// With X = E(q)^S, returns Y' in U with X^{Y'} = X^{-1}; both properties are
/// checked exactly before returning.
InvolutionWitness involution_witness(const RealCycloElement& q, const Mat2R& s);

struct ResidueGroupReport {
    int p = 0;
    int order = 0;
    bool closed = false;
    bool cyclic = false;
    bool t_has_order_p = false;
    bool swap_inverts = false;

    bool all_ok() const { return closed && cyclic && t_has_order_p && swap_inverts; }
};

/// The image of U1 in GL2(F_p): the 2p matrices (+-1+a, a; -a, +-1-a),
/// verified to form a cyclic group of order 2p inverted by the swap matrix.
ResidueGroupReport residue_u1_group(int p);

// Seeded random data for the constructive sweeps.
using Rng = std::mt19937_64;
RealCycloElement random_small_element(const RealCycloRing& r, Rng& rng);
RealCycloElement random_q_element(const RealCycloRing& r, Rng& rng);   // in Q
RealCycloElement random_residue1_unit(const RealCycloRing& r, Rng& rng);
Mat2R random_sl2(const RealCycloRing& r, Rng& rng);
Mat2R random_u_member(const RealCycloRing& r, Rng& rng);

struct DihedralTrialReport {
    int p = 0;
    std::uint64_t seed = 0;
    int trials = 0;
    long involution_passes = 0;
    long involution_e0 = 0;   // trials resolved with column sums -1
    long involution_e1 = 0;   // trials in the c = d branch (observed e = 1)
    long decompose_passes = 0;
    long closure_passes = 0;
    ResidueGroupReport residue;
    bool all_ok() const;
};

/// The full seeded verification for one prime: involution witnesses,
/// decomposition round trips, closure of U under products, and the residue
/// group structure.
DihedralTrialReport run_dihedral_trials(int p, int trials, std::uint64_t seed);

}  // namespace unitforge
