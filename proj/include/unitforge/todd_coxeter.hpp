#pragma once

#include <string>
#include <vector>

#include "unitforge/presentation.hpp"

namespace unitforge {

/// Result of enumerating the cosets of the trivial subgroup: the regular
/// action of the presented group on itself. Coset 0 is the identity and the
/// numbering is the canonical breadth-first order over the generators, so a
/// given presentation always produces the same tables.
struct EnumeratedGroup {
    int order = 0;
    /// table[c][i] = image of coset c under right multiplication by generator i.
    std::vector<std::vector<int>> generator_action;
    /// Full multiplication table derived from the action and coset words.
    std::vector<std::vector<int>> multiplication;
    /// Canonical word for each element as (generator, exponent) runs.
    std::vector<Word> element_words;
};

/// HLT-style Todd-Coxeter over the trivial subgroup. Throws if the
/// enumeration would exceed max_cosets (a diverging or misstated
/// presentation).
EnumeratedGroup enumerate_presentation(const Presentation& p, int max_cosets = 100000);

}  // namespace unitforge
