#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace unitforge {

/// A word in abstract generators, stored as (generator index, exponent) runs.
/// Adjacent runs with the same generator are merged and zero exponents dropped.
struct Word {
    std::vector<std::pair<int, long>> syllables;

    bool empty() const { return syllables.empty(); }
    void append(int gen, long exp);
};

Word word_inverse(const Word& w);
Word word_concat(const Word& a, const Word& b);
/// w conjugated by c, i.e. c^-1 w c.
Word word_conjugate(const Word& w, const Word& c);

/// Generators plus defining relators.
struct Presentation {
    std::vector<std::string> generators;
    std::vector<Word> relators;
    std::string origin;  // optional catalog tag

    int generator_index(const std::string& name) const;  // -1 if absent
    /// Parse "b^-1 a b a^-5" (also accepts '*' separators) against the
    /// declared generators.
    Word parse_word(const std::string& text) const;
    std::string word_to_string(const Word& w) const;

    /// Column vector of exponent sums of w, one entry per generator.
    std::vector<long> exponent_sums(const Word& w) const;
};

/// A presentation of F ⋊ G assembled from a presentation of the base group G,
/// free-ish fiber generators, the base action on them, and relations inside
/// the fiber.
struct SemidirectData {
    Presentation base;
    std::vector<std::string> fiber_generators;
    /// action[i][j] = word in the fiber generators for (fiber i)^(base gen j).
    std::vector<std::vector<std::optional<Word>>> action;
    std::vector<Word> fiber_relators;
};

/// One presentation on base ∪ fiber generators: base relators, fiber
/// relators, and g^-1 x g · action(x,g)^-1 for every pair.
Presentation assemble(const SemidirectData& sd);

struct KappaReport {
    bool is_homomorphism = false;
    bool nontrivial_image = false;
    /// Relator indices whose weighted exponent sum is nonzero.
    std::vector<int> failing_relators;
};

/// Checks whether the generator weights extend to a homomorphism onto the
/// infinite cyclic group, i.e. every relator has weighted exponent sum zero.
KappaReport kappa_verify(const Presentation& p, const std::map<std::string, long>& weights);

// JSON interchange.
//   {"generators": ["a","x"], "relators": [[["a",3]], [["x",1],["a",-2]]]}
// The semidirect schema adds "fiber_generators", "action" and
// "fiber_relators"; see presentation_from_json_text.
std::string presentation_to_json_text(const Presentation& p);
Presentation presentation_from_json_text(const std::string& text);

}  // namespace unitforge
