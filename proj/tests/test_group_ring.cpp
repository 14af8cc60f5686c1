#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "unitforge/catalog.hpp"
#include "unitforge/group_ring.hpp"
#include "unitforge/ring_checks.hpp"
#include "unitforge/units.hpp"

using namespace unitforge;

namespace {

GroupRingElement random_element(const FiniteGroup& g, std::mt19937_64& rng, int max_support,
                                int max_coeff) {
    std::uniform_int_distribution<int> idx(0, g.order() - 1);
    std::uniform_int_distribution<int> coeff(-max_coeff, max_coeff);
    std::uniform_int_distribution<int> nterms(0, max_support);
    std::map<int, Int> coeffs;
    for (int t = nterms(rng); t > 0; --t) coeffs[idx(rng)] = coeff(rng);
    return GroupRingElement::from_coeffs(g, std::move(coeffs));
}

}  // namespace

TEST_CASE("basic arithmetic identities") {
    FiniteGroup s3 = builtin_group("S3");
    int a = s3.generator("a");
    int b = s3.generator("b");
    GroupRingElement one = GroupRingElement::one(s3);
    GroupRingElement ea = GroupRingElement::element(s3, a);
    GroupRingElement eb = GroupRingElement::element(s3, b);

    CHECK(one * ea == ea);
    CHECK((one + eb) * (one - eb) == GroupRingElement::zero(s3));

    // (1-b) a (1+b) = a + ab - a^2 b - a^2.
    GroupRingElement lhs = (one - eb) * ea * (one + eb);
    GroupRingElement rhs =
        ea + GroupRingElement::element(s3, s3.mul(a, b)) -
        GroupRingElement::element(s3, s3.mul(s3.power(a, 2), b)) -
        GroupRingElement::element(s3, s3.power(a, 2));
    CHECK(lhs == rhs);
}

TEST_CASE("mixing groups is an error") {
    FiniteGroup s3 = builtin_group("S3");
    FiniteGroup c2 = builtin_group("C2");
    CHECK_THROWS_AS(GroupRingElement::one(s3) + GroupRingElement::one(c2),
                    std::invalid_argument);
}

TEST_CASE("augmentation is a ring homomorphism") {
    FiniteGroup g = builtin_group("D8");
    std::mt19937_64 rng(1729);
    for (int trial = 0; trial < 50; ++trial) {
        GroupRingElement x = random_element(g, rng, 6, 4);
        GroupRingElement y = random_element(g, rng, 6, 4);
        CHECK(augment(x * y) == augment(x) * augment(y));
        CHECK(augment(x + y) == augment(x) + augment(y));
    }
    CHECK(augment(GroupRingElement::element(g, 5)) == 1);
}

TEST_CASE("ring axioms on random sparse elements") {
    std::mt19937_64 rng(42);
    for (const std::string& name : {"S3", "D8", "A4"}) {
        FiniteGroup g = builtin_group(name);
        for (int trial = 0; trial < 40; ++trial) {
            GroupRingElement x = random_element(g, rng, 5, 3);
            GroupRingElement y = random_element(g, rng, 5, 3);
            GroupRingElement z = random_element(g, rng, 5, 3);
            CHECK((x * y) * z == x * (y * z));
            CHECK(x * (y + z) == x * y + x * z);
            CHECK((y + z) * x == y * x + z * x);
        }
    }
}

TEST_CASE("tilde sums over cyclic subgroups") {
    FiniteGroup s3 = builtin_group("S3");
    CHECK(tilde(s3, 0) == GroupRingElement::one(s3));
    int b = s3.generator("b");
    CHECK(tilde(s3, b) == GroupRingElement::one(s3) + GroupRingElement::element(s3, b));
    int a = s3.generator("a");
    GroupRingElement ta = tilde(s3, a);
    CHECK(ta.support_size() == 3);
    CHECK(augment(ta) == 3);

    // H~ (1 - h) = 0 and h^k H~ = H~ for h in the subgroup.
    for (const std::string& name : {"C12", "D8", "Q16"}) {
        FiniteGroup g = builtin_group(name);
        for (int h = 0; h < g.order(); ++h) {
            GroupRingElement th = tilde(g, h);
            GroupRingElement eh = GroupRingElement::element(g, h);
            CHECK(th * (GroupRingElement::one(g) - eh) == GroupRingElement::zero(g));
            for (int k = 1; k <= 3; ++k)
                CHECK(GroupRingElement::element(g, g.power(h, k)) * th == th);
        }
    }
}

TEST_CASE("units: trivial units, non-units, inverse verification") {
    FiniteGroup c2 = builtin_group("C2");
    GroupRingElement one_plus_a =
        GroupRingElement::one(c2) + GroupRingElement::element(c2, 1);
    CHECK(!is_unit(one_plus_a));
    CHECK_THROWS_AS(inverse(one_plus_a), std::domain_error);

    for (const std::string& name : {"S3", "Q8", "D16+"}) {
        FiniteGroup g = builtin_group(name);
        for (int x = 0; x < g.order(); ++x) {
            GroupRingElement e = GroupRingElement::element(g, x);
            CHECK(is_unit(e));
            CHECK(inverse(e) == GroupRingElement::element(g, g.inv(x)));
        }
    }
}

namespace {

GroupRingElement from_stack(const FiniteGroup& g, const std::vector<int>& coeffs) {
    std::map<int, Int> c;
    for (size_t i = 0; i < coeffs.size(); ++i)
        if (coeffs[i] != 0) c[static_cast<int>(i)] = coeffs[i];
    return GroupRingElement::from_coeffs(g, std::move(c));
}

bool odometer(std::vector<int>& v, int lo, int hi) {
    size_t i = 0;
    while (i < v.size() && ++v[i] > hi) v[i++] = lo;
    return i < v.size();
}

void brute_force_unit_agreement(const std::string& name, int u_bound, int v_bound) {
    FiniteGroup g = builtin_group(name);
    const int n = g.order();
    std::vector<int> us(n, -u_bound);
    do {
        GroupRingElement u = from_stack(g, us);
        bool found = false;
        std::vector<int> vs(n, -v_bound);
        do {
            GroupRingElement v = from_stack(g, vs);
            if ((u * v).is_one() && (v * u).is_one()) {
                found = true;
                break;
            }
        } while (odometer(vs, -v_bound, v_bound));
        // A two-sided inverse in the box forces is_unit; conversely is_unit
        // must exhibit a verified inverse.
        if (found) CHECK(is_unit(u));
        if (is_unit(u)) {
            GroupRingElement v = inverse(u);
            CHECK((u * v).is_one());
            CHECK((v * u).is_one());
        }
    } while (odometer(us, -u_bound, u_bound));
}

}  // namespace

TEST_CASE("is_unit agrees with a brute-force two-sided inverse search") {
    brute_force_unit_agreement("C2", 2, 3);
    brute_force_unit_agreement("C3", 2, 3);
    brute_force_unit_agreement("S3", 1, 1);
}

TEST_CASE("power: zero, positive, negative") {
    FiniteGroup c5 = builtin_group("C5");
    int a = c5.generator("a");
    GroupRingElement u = bass_formula(c5, a, 2, 4);
    CHECK(power(u, 0).is_one());
    CHECK(power(u, 3) == u * u * u);
    CHECK(power(u, -2) * power(u, 2) == GroupRingElement::one(c5));

    // u_{2,4}(g)^{-1} = u_{2^{-1},4}(g^2) with 2^{-1} = 3 mod 5.
    CHECK(power(u, -1) == bass_formula(c5, c5.power(a, 2), 3, 4));

    GroupRingElement nonunit =
        GroupRingElement::one(c5) + GroupRingElement::element(c5, a);
    CHECK_THROWS_AS(power(nonunit, -1), std::domain_error);
}

TEST_CASE("conjugation and commutators") {
    FiniteGroup s3 = builtin_group("S3");
    int a = s3.generator("a");
    int b = s3.generator("b");
    GroupRingElement ea = GroupRingElement::element(s3, a);
    GroupRingElement eb = GroupRingElement::element(s3, b);

    CHECK(commutator(ea, ea).is_one());
    // Group commutator matches the table.
    GroupRingElement c = commutator(ea, eb);
    int expected = s3.mul(s3.inv(a), s3.conjugate(a, b));
    CHECK(c == GroupRingElement::element(s3, expected));

    // b(a,b)^a = b(a, ab): the first conjugation relation of the recorded
    // unit presentation.
    GroupRingElement u0 = bicyclic(s3, {a, b});
    GroupRingElement u1 = bicyclic(s3, {a, s3.mul(a, b)});
    CHECK(conjugate(u0, ea) == u1);
    CHECK(conjugate_by_element(u0, a) == u1);

    GroupRingElement nonunit = GroupRingElement::one(s3) + ea;
    CHECK_THROWS_AS(conjugate(u0, nonunit), std::domain_error);
}

TEST_CASE("v9 in ZP is a unit with a verified two-sided inverse") {
    FiniteGroup p = builtin_group("P");
    GroupRingElement v9 = p_ninth_generator(p);
    CHECK(augment(v9) == 1);
    CHECK(is_unit(v9));
    GroupRingElement inv = inverse(v9);
    CHECK((v9 * inv).is_one());
    CHECK((inv * v9).is_one());
}

TEST_CASE("element parser and printer") {
    FiniteGroup s3 = builtin_group("S3");
    int a = s3.generator("a");
    int b = s3.generator("b");
    GroupRingElement u0 = bicyclic(s3, {a, b});
    CHECK(parse_element(s3, "1 + a - a^2 + a*b - a^2*b") == u0);
    CHECK(parse_element(s3, "2*a^-1") ==
          GroupRingElement::element(s3, s3.inv(a)) * Int(2));
    CHECK(parse_element(s3, "a*b") == GroupRingElement::element(s3, s3.mul(a, b)));
    CHECK(parse_element(s3, "-3") == GroupRingElement::one(s3) * Int(-3));

    CHECK_THROWS_AS(parse_element(s3, "1 + q"), std::invalid_argument);
    CHECK_THROWS_AS(parse_element(s3, ""), std::invalid_argument);
    CHECK_THROWS_AS(parse_element(s3, "a^"), std::invalid_argument);

    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        GroupRingElement x = random_element(s3, rng, 6, 9);
        if (x.is_zero()) continue;
        CHECK(parse_element(s3, x.to_string()) == x);
    }
}

TEST_CASE("regular representation determinant of known units is +-1") {
    FiniteGroup g = builtin_group("D16+");
    int a = g.generator("a");
    int b = g.generator("b");
    GroupRingElement bc = bicyclic(g, {b, a});
    Int d = det_bareiss(regular_representation(bc));
    CHECK((d == 1 || d == -1));
    GroupRingElement bass_unit = bass(g, make_bass_spec(g, a, 3));
    Int d2 = det_bareiss(regular_representation(bass_unit));
    CHECK((d2 == 1 || d2 == -1));
}
