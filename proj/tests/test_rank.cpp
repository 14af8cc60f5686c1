#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "unitforge/catalog.hpp"
#include "unitforge/rank.hpp"
#include "unitforge/snf.hpp"

using namespace unitforge;

TEST_CASE("rank of the center: cut groups and dihedral series") {
    for (const std::string& name : {"A4", "D12", "T", "D16+", "H", "P", "D", "S3", "D8",
                                    "Q8", "Q8xC2", "D8xC2"}) {
        RankReport r = rank_center(builtin_group(name));
        CHECK(r.rank_center == 0);
        CHECK(r.is_cut);
    }
    CHECK(rank_center(builtin_group("C5")).rank_center == 1);
    CHECK(rank_center(builtin_group("D10")).rank_center == 1);
    CHECK(rank_center(builtin_group("D14")).rank_center == 2);
    CHECK(rank_center(builtin_group("D22")).rank_center == 4);
    CHECK(rank_center(builtin_group("D26")).rank_center == 5);
}

TEST_CASE("rank report internal consistency") {
    for (const std::string& name : sweep_group_names(16)) {
        RankReport r = rank_center(builtin_group(name));
        CHECK(r.n_rational <= r.n_real);
        CHECK(r.n_real <= r.n_conjugacy);
        CHECK(r.rank_center >= 0);
        CHECK(r.is_cut == (r.rank_center == 0));
    }
}

TEST_CASE("l-set: examples and subgroup property") {
    FiniteGroup d16 = builtin_group("D16+");
    CHECK(l_set(d16, d16.generator("a")) == std::vector<long>({1, 5}));

    // Central elements have L = {1}.
    FiniteGroup q8 = builtin_group("Q8");
    int minus_one = q8.power(q8.generator("a"), 2);
    CHECK(l_set(q8, minus_one) == std::vector<long>({1}));
    FiniteGroup c8 = builtin_group("C8");
    CHECK(l_set(c8, c8.generator("a")) == std::vector<long>({1}));
}

TEST_CASE("l-set closure holds across the catalog") {
    for (const std::string& name : sweep_group_names(16)) {
        FiniteGroup g = builtin_group(name);
        for (int x = 0; x < g.order(); ++x) l_set(g, x);  // throws if not a subgroup
    }
}

TEST_CASE("real-in-rational count: formula equals direct enumeration") {
    for (const std::string& name : sweep_group_names(16)) {
        FiniteGroup g = builtin_group(name);
        for (int x = 0; x < g.order(); ++x)
            CHECK(real_in_rational_count(g, x) == real_in_rational_count_direct(g, x));
    }
}

TEST_CASE("telescoping identity over rational class representatives") {
    for (const std::string& name : sweep_group_names(16)) {
        FiniteGroup g = builtin_group(name);
        const auto& rat = g.rational_classes();
        long sum = 0;
        for (const auto& block : rat.blocks) sum += real_in_rational_count(g, block.front()) - 1;
        RankReport r = rank_center(g);
        CHECK(sum == r.n_real - r.n_rational);
    }
}

TEST_CASE("(E2) holds for every computed catalog abelianization") {
    for (const auto& e : unit_presentation_catalog()) {
        AbelianGroupType got = abelianization(e.presentation());
        ExponentComparison c = exponent_compare(builtin_group(e.group_name), got);
        CHECK(c.e2);
        CHECK(c.p);
    }
}

TEST_CASE("exponent comparisons E1, E2, P") {
    FiniteGroup s3 = builtin_group("S3");
    ExponentComparison c = exponent_compare(s3, AbelianGroupType(0, {2, 2}));
    CHECK(c.e1);
    CHECK(c.e2);
    CHECK(c.p);

    FiniteGroup t = builtin_group("T");
    c = exponent_compare(t, AbelianGroupType(0, {2, 4}));
    CHECK(c.e1);
    CHECK(c.e2);

    FiniteGroup d16 = builtin_group("D16+");
    c = exponent_compare(d16, AbelianGroupType(1, {2, 2, 2, 2, 2, 4}));
    CHECK(c.e1);
    CHECK(c.e2);
    CHECK(c.p);

    // A torsion factor with a prime outside |G| breaks (P) and (E1).
    c = exponent_compare(s3, AbelianGroupType(0, {5}));
    CHECK(!c.e1);
    CHECK(!c.e2);
    CHECK(!c.p);

    // Exponent 4 does not divide exp(S3) = 6.
    c = exponent_compare(s3, AbelianGroupType(0, {4}));
    CHECK(!c.e1);
    CHECK(!c.e2);
    CHECK(c.p);
}
