#pragma once

#include "unitforge/catalog.hpp"
#include "unitforge/group_ring.hpp"
#include "unitforge/units.hpp"

namespace unitforge {

/// For the entries whose fiber generators are the explicit bicyclic units
/// u_i = b(a, a^i b) (V(ZS3) and V(ZD8)): builds the u_i in ZG and checks
/// every conjugation relation of the recorded action as an exact ring
/// equality. Throws std::invalid_argument for other entries.
SweepReport verify_ring_presentation(const UnitPresentationEntry& entry);

/// The corrected ninth generator of the free complement in V(ZP):
/// 1 + (2 - 20a - 9b + 18ab)(1 - a^2)(1 + b^2).
GroupRingElement p_ninth_generator(const FiniteGroup& p_group);

}  // namespace unitforge
