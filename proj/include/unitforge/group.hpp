#pragma once

#include <string>
#include <vector>

#include "unitforge/abelian.hpp"
#include "unitforge/presentation.hpp"

namespace unitforge {

enum class ClassKind { Conjugacy, Real, Rational };

/// A partition of the element indices into classes. Blocks are sorted and
/// listed by their minimal member, so reports are stable.
struct ClassPartition {
    ClassKind kind;
    std::vector<std::vector<int>> blocks;
    std::vector<int> block_of;  // element index -> block index

    int size() const { return static_cast<int>(blocks.size()); }
};

/// A finite group as a Cayley table. Index 0 is the identity. Instances are
/// immutable after construction and safe to share across threads.
class FiniteGroup {
public:
    /// Validates the table (identity row/column, Latin square, associativity)
    /// and rejects orders above 64.
    static FiniteGroup from_table(std::string name, std::vector<std::vector<int>> table);

    /// Enumerates the presented group and names its elements by canonical
    /// generator words. expected_order, when nonnegative, is enforced.
    static FiniteGroup from_presentation(std::string name, const Presentation& pres,
                                         int expected_order = -1);

    int order() const { return order_; }
    const std::string& name() const { return name_; }

    int mul(int g, int h) const { return table_[g][h]; }
    int inv(int g) const { return inverses_[g]; }
    /// y^-1 x y.
    int conjugate(int x, int y) const { return mul(mul(inv(y), x), y); }
    int power(int g, long e) const;
    int element_order(int g) const;

    const std::vector<std::vector<int>>& table() const { return table_; }

    const std::vector<std::string>& generator_names() const { return generator_names_; }
    const std::vector<int>& generator_elements() const { return generator_elements_; }
    /// Element index for a named generator; throws on unknown name.
    int generator(const std::string& name) const;
    const std::string& element_word(int g) const { return element_words_[g]; }

    const ClassPartition& conjugacy_classes() const { return conjugacy_; }
    const ClassPartition& real_classes() const { return real_; }
    const ClassPartition& rational_classes() const { return rational_; }

    std::string to_json_text() const;
    static FiniteGroup from_json_text(const std::string& text);

private:
    FiniteGroup() = default;
    void finish_construction();  // inverses, validation, class data

    int order_ = 0;
    std::vector<std::vector<int>> table_;
    std::vector<int> inverses_;
    std::string name_;
    std::vector<std::string> generator_names_;
    std::vector<int> generator_elements_;
    std::vector<std::string> element_words_;
    ClassPartition conjugacy_, real_, rational_;
};

/// Elements of the smallest subgroup containing the given elements, sorted.
std::vector<int> subgroup_closure(const FiniteGroup& g, const std::vector<int>& gens);
std::vector<int> cyclic_subgroup(const FiniteGroup& g, int x);
/// Sorted list of the distinct cyclic subgroups.
std::vector<std::vector<int>> cyclic_subgroups(const FiniteGroup& g);

std::vector<int> derived_subgroup(const FiniteGroup& g);
std::vector<int> center(const FiniteGroup& g);
int exponent(const FiniteGroup& g);

/// Invariant factors of G/G'.
AbelianGroupType abelian_quotient(const FiniteGroup& g);

}  // namespace unitforge
