#pragma once

#include <string>
#include <vector>

#include "unitforge/abelian.hpp"
#include "unitforge/group.hpp"

namespace unitforge {

/// Class-counting invariants of a group: the rank of the center of V(ZG) is
/// n_real - n_rational, and the group is cut exactly when that rank is 0.
struct RankReport {
    std::string group;
    int n_conjugacy = 0;
    int n_real = 0;
    int n_rational = 0;
    int rank_center = 0;
    bool is_cut = false;
    int exp_g = 1;
    int exp_g_ab = 1;
};

RankReport rank_center(const FiniteGroup& g);

/// L = {1 <= l <= n | g ~ g^l}, a subgroup of the units mod n (checked).
std::vector<long> l_set(const FiniteGroup& g, int x);

/// Number of real classes inside the rational class of x, from the L-set:
/// phi(n)/|L| when -1 is in L and phi(n)/(2|L|) otherwise.
long real_in_rational_count(const FiniteGroup& g, int x);

/// Direct enumeration of the same count, used as the independent cross-check.
long real_in_rational_count_direct(const FiniteGroup& g, int x);

struct ExponentComparison {
    bool e1 = false;  // torsion exponent of A equals exp(G/G')
    bool e2 = false;  // torsion exponent of A divides exp(G)
    bool p = false;   // torsion primes of A divide |G|
};

/// Compare a computed abelianization of V(ZG) against the group data.
ExponentComparison exponent_compare(const FiniteGroup& g, const AbelianGroupType& a);

}  // namespace unitforge
