#include "unitforge/rank.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace unitforge {

RankReport rank_center(const FiniteGroup& g) {
    RankReport r;
    r.group = g.name();
    r.n_conjugacy = g.conjugacy_classes().size();
    r.n_real = g.real_classes().size();
    r.n_rational = g.rational_classes().size();
    r.rank_center = r.n_real - r.n_rational;
    r.is_cut = r.rank_center == 0;
    r.exp_g = exponent(g);
    r.exp_g_ab = static_cast<int>(abelian_quotient(g).torsion_exponent().get_si());
    if (r.rank_center < 0) throw std::logic_error("rank_center: negative rank");
    return r;
}

std::vector<long> l_set(const FiniteGroup& g, int x) {
    const long n = g.element_order(x);
    const int block = g.conjugacy_classes().block_of[x];
    std::vector<long> ls;
    for (long l = 1; l <= n; ++l)
        if (g.conjugacy_classes().block_of[g.power(x, l)] == block) ls.push_back(l);
    // Subgroup of the units mod n: closed under multiplication and contains 1.
    std::set<long> set(ls.begin(), ls.end());
    if (!set.count(1)) throw std::logic_error("l_set: 1 is missing");
    for (long a : ls)
        for (long b : ls) {
            long p = (a * b) % n;
            if (p == 0) p = n;
            if (!set.count(p)) throw std::logic_error("l_set: not closed under multiplication");
        }
    return ls;
}

long real_in_rational_count(const FiniteGroup& g, int x) {
    const long n = g.element_order(x);
    std::vector<long> ls = l_set(g, x);
    const long phi = euler_phi(n);
    // -1 = 1 mod n for n <= 2, so it always lies in L there.
    bool has_minus_one = n <= 2 || std::find(ls.begin(), ls.end(), n - 1) != ls.end();
    const long size = static_cast<long>(ls.size());
    long count = has_minus_one ? phi / size : phi / (2 * size);
    if ((has_minus_one && phi % size != 0) || (!has_minus_one && phi % (2 * size) != 0))
        throw std::logic_error("real_in_rational_count: formula does not divide evenly");
    return count;
}

long real_in_rational_count_direct(const FiniteGroup& g, int x) {
    const int rational_block = g.rational_classes().block_of[x];
    std::set<int> real_blocks;
    for (int y = 0; y < g.order(); ++y)
        if (g.rational_classes().block_of[y] == rational_block)
            real_blocks.insert(g.real_classes().block_of[y]);
    return static_cast<long>(real_blocks.size());
}

ExponentComparison exponent_compare(const FiniteGroup& g, const AbelianGroupType& a) {
    ExponentComparison c;
    const Int exp_torsion = a.torsion_exponent();
    const Int exp_gab = abelian_quotient(g).torsion_exponent();
    c.e1 = exp_torsion == exp_gab;
    c.e2 = exp_torsion == 0 ? false : Int(exponent(g)) % exp_torsion == 0;
    c.p = true;
    for (const Int& p : a.torsion_primes())
        if (Int(g.order()) % p != 0) c.p = false;
    return c;
}

}  // namespace unitforge
