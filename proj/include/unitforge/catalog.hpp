#pragma once

#include <map>
#include <string>
#include <vector>

#include "unitforge/abelian.hpp"
#include "unitforge/group.hpp"
#include "unitforge/presentation.hpp"

namespace unitforge {

/// Builds a catalog group by name. Supported names: the families C<n>
/// (n <= 64), D<2n> (dihedral of order 2n), Dic<n> (dicyclic of order 4n),
/// and the labels Q8, Q16, S3, A4, T, H, P, D16+, D16, D16-, Q8xC2, D8xC2, D.
/// Throws on unknown names or orders above 64.
FiniteGroup builtin_group(const std::string& name);

bool is_catalog_name(const std::string& name);

/// Defining presentation of a catalog group (the data builtin_group enumerates).
Presentation catalog_presentation(const std::string& name);

/// Canonical duplicate-free list of catalog groups with order at most
/// max_order, used by the verification sweeps. Distinct labels for the same
/// group (S3/D6, Q8/Dic2, T/Dic3, Q16/Dic4) appear once.
std::vector<std::string> sweep_group_names(int max_order);

/// A recorded presentation of the normalized unit group V(ZG) for a catalog
/// group, assembled from a semidirect description.
struct UnitPresentationEntry {
    std::string id;             // e.g. "V(ZS3)"
    std::string group_name;     // base group catalog name
    AbelianGroupType expected;  // known abelianization of the presented group
    SemidirectData data;
    /// Weights of a homomorphism onto the infinite cyclic group, when one is
    /// recorded for this entry (only V(ZD16+)).
    std::map<std::string, long> kappa_weights;

    Presentation presentation() const { return assemble(data); }
};

const std::vector<UnitPresentationEntry>& unit_presentation_catalog();
const UnitPresentationEntry& unit_presentation(const std::string& id);
bool is_unit_presentation_id(const std::string& id);

}  // namespace unitforge
