#include "unitforge/ring_checks.hpp"

#include <sstream>
#include <stdexcept>

namespace unitforge {

SweepReport verify_ring_presentation(const UnitPresentationEntry& entry) {
    if (entry.id != "V(ZS3)" && entry.id != "V(ZD8)")
        throw std::invalid_argument(
            "verify_ring_presentation: only V(ZS3) and V(ZD8) carry explicit "
            "ring-element generators");

    FiniteGroup g = builtin_group(entry.group_name);
    const int a = g.generator("a");
    const int b = g.generator("b");

    // u_i = b(a, a^i b) for i = 0..2.
    std::vector<GroupRingElement> u;
    std::vector<GroupRingElement> u_inv;
    for (int i = 0; i < 3; ++i) {
        u.push_back(bicyclic(g, {a, g.mul(g.power(a, i), b)}));
        u_inv.push_back(inverse(u.back()));
    }

    auto evaluate = [&](const Word& w) {
        GroupRingElement r = GroupRingElement::one(g);
        for (const auto& [gen, exp] : w.syllables) {
            const GroupRingElement& base = exp > 0 ? u[gen] : u_inv[gen];
            for (long i = 0; i < (exp > 0 ? exp : -exp); ++i) r = r * base;
        }
        return r;
    };

    SweepReport rep;
    const std::vector<int> base_elems = {a, b};
    for (size_t x = 0; x < entry.data.fiber_generators.size(); ++x) {
        for (size_t gi = 0; gi < entry.data.base.generators.size(); ++gi) {
            const Word& w = *entry.data.action[x][gi];
            GroupRingElement lhs = conjugate_by_element(u[x], base_elems[gi]);
            GroupRingElement rhs = evaluate(w);
            CheckReport c;
            c.ok = lhs == rhs;
            std::ostringstream os;
            os << entry.id << ": " << entry.data.fiber_generators[x] << "^"
               << entry.data.base.generators[gi];
            c.params = os.str();
            if (!c.ok) {
                c.lhs = lhs.to_string();
                c.rhs = rhs.to_string();
                c.difference = (lhs - rhs).to_string();
            }
            rep.absorb(c);
        }
    }
    return rep;
}

GroupRingElement p_ninth_generator(const FiniteGroup& p_group) {
    const int a = p_group.generator("a");
    const int b = p_group.generator("b");
    auto elem = [&](int x) { return GroupRingElement::element(p_group, x); };
    GroupRingElement one = GroupRingElement::one(p_group);

    GroupRingElement inner = one * Int(2) - elem(a) * Int(20) - elem(b) * Int(9) +
                             elem(p_group.mul(a, b)) * Int(18);
    GroupRingElement left = one - elem(p_group.power(a, 2));
    GroupRingElement right = one + elem(p_group.power(b, 2));
    return one + inner * left * right;
}

}  // namespace unitforge
