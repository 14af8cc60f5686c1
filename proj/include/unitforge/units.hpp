#pragma once

#include <optional>
#include <string>
#include <vector>

#include "unitforge/group_ring.hpp"

namespace unitforge {

/// b(g,h) = 1 + (1-h) g h~ where h~ sums the cyclic group of h.
struct BicyclicSpec {
    int g = 0;
    int h = 0;
};

/// u_{k,m}(g) = (1 + g + ... + g^{k-1})^m + ((1 - k^m)/n) g~ for g of order n.
/// k is normalized to 1 <= k < n on construction (k = 1 when n = 1).
struct BassSpec {
    int g = 0;
    long n = 1;
    long k = 1;
    long m = 1;
};

GroupRingElement bicyclic(const FiniteGroup& G, const BicyclicSpec& spec);
/// True iff g normalizes <h>, i.e. b(g,h) = 1.
bool bicyclic_is_trivial(const FiniteGroup& G, const BicyclicSpec& spec);

/// Validates gcd(k,n) = 1 and k^m = 1 mod n, normalizes k mod n, and defaults
/// m to Euler-phi(n) when absent. Throws std::invalid_argument otherwise.
BassSpec make_bass_spec(const FiniteGroup& G, int g, long k,
                        std::optional<long> m = std::nullopt);

/// The Bass unit of a validated spec; augmentation and unit-ness are checked.
GroupRingElement bass(const FiniteGroup& G, const BassSpec& spec);

/// The defining expression evaluated verbatim at an unnormalized k >= 1
/// (needed to make the "depends only on k mod n" rule a real statement).
GroupRingElement bass_formula(const FiniteGroup& G, int g, long k, long m);

/// Outcome of one exact ring-identity check. Both sides are rendered only on
/// failure so that sweeps stay cheap.
struct CheckReport {
    bool ok = true;
    std::string params;
    std::string lhs;
    std::string rhs;
    std::string difference;
};

struct SweepReport {
    long checked = 0;
    std::vector<CheckReport> failures;

    bool all_ok() const { return failures.empty(); }
    void absorb(const CheckReport& r);
    void merge(const SweepReport& r);
};

struct BassRuleParams {
    int g = 0;
    long k = 0;
    long l = 0;
    long m = 0;
    long m_second = 0;  // rule 2
    long i = 0;         // rule 6
};

/// Exact verification of one of the eight recorded Bass-unit rules.
/// Inadmissible parameters throw std::invalid_argument.
CheckReport verify_bass_rule(const FiniteGroup& G, int rule, const BassRuleParams& p);

/// prod_{k=1..n} [b(g,h)^-1, h^k] = b(g,h)^n, h of order n.
CheckReport verify_prop31(const FiniteGroup& G, int g, int h);

/// prod_{i=1..s-1} [u_{l,m}(g)^-1, h^i] = u_{l,m}(g)^s where g^h = g^l and s
/// is the order of l mod n.
CheckReport verify_lemma33(const FiniteGroup& G, int g, long l, long m, int h);

/// The two ring identities behind the conjugation rule for Bass units:
/// u_{k,m}(g)^h = u_{k,m}(g^l) and u_{k,m}(g^l) u_{l,m}(g) = u_{kl,m}(g).
CheckReport verify_lemma34(const FiniteGroup& G, int g, long k, long l, long m, int h);

// Exhaustive admissible-parameter sweeps, deterministic order.
SweepReport sweep_prop31(const FiniteGroup& G);
SweepReport sweep_bass_rule(const FiniteGroup& G, int rule);
SweepReport sweep_lemma33(const FiniteGroup& G);
SweepReport sweep_lemma34(const FiniteGroup& G);

/// All (g, h, l) with g^h = g^l in G, as used by the lemma sweeps.
std::vector<std::tuple<int, int, long>> conjugation_power_triples(const FiniteGroup& G);

}  // namespace unitforge
