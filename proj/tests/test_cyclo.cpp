#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "unitforge/cyclo.hpp"

using namespace unitforge;

namespace {

RealCycloElement rand_elem(const RealCycloRing& r, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> c(-5, 5);
    std::vector<Int> v(r.degree());
    for (Int& x : v) x = c(rng);
    return r.from_coeffs(std::move(v));
}

}  // namespace

TEST_CASE("minimal polynomials from the recurrence") {
    RealCycloRing r3(3);
    CHECK(r3.degree() == 1);
    CHECK(r3.psi() == std::vector<Int>({1, 1}));  // z + 1, z = -1
    CHECK(r3.z() == r3.from_int(-1));

    RealCycloRing r5(5);
    CHECK(r5.psi() == std::vector<Int>({-1, 1, 1}));  // z^2 + z - 1

    RealCycloRing r7(7);
    CHECK(r7.psi() == std::vector<Int>({-1, -2, 1, 1}));  // z^3 + z^2 - 2z - 1
}

TEST_CASE("psi(2) is divisible by p for every supported prime") {
    for (int p : {3, 5, 7, 11, 13, 17, 19, 23, 29, 31}) {
        RealCycloRing r(p);
        Int val = 0, pow = 1;
        for (const Int& c : r.psi()) {
            val += c * pow;
            pow *= 2;
        }
        CHECK(val % p == 0);
        CHECK(r.psi().back() == 1);  // monic
    }
}

TEST_CASE("invalid primes are rejected") {
    CHECK_THROWS_AS(RealCycloRing(2), std::invalid_argument);
    CHECK_THROWS_AS(RealCycloRing(9), std::invalid_argument);
    CHECK_THROWS_AS(RealCycloRing(37), std::invalid_argument);
}

TEST_CASE("residue map: values and ring homomorphism property") {
    RealCycloRing r(7);
    CHECK(r.residue(r.one()) == 1);
    CHECK(r.residue(r.z()) == 2);
    // psi(z) = 0 in the ring, so its residue is 0 by construction.
    CHECK(r.residue(r.zero()) == 0);

    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 60; ++trial) {
        RealCycloElement x = rand_elem(r, rng);
        RealCycloElement y = rand_elem(r, rng);
        CHECK(r.residue(x + y) == (r.residue(x) + r.residue(y)) % 7);
        CHECK(r.residue(x * y) == (r.residue(x) * r.residue(y)) % 7);
    }
}

TEST_CASE("arithmetic reduces mod psi") {
    RealCycloRing r(5);
    // z^2 = 1 - z.
    CHECK(r.z() * r.z() == r.from_coeffs({1, -1}));
    // (z + 1)(z - 1) = z^2 - 1 = -z.
    CHECK((r.z() + r.one()) * (r.z() - r.one()) == -r.z());
}

TEST_CASE("units and inverses in the real cyclotomic ring") {
    for (int p : {5, 7, 11, 13}) {
        RealCycloRing r(p);
        CHECK(r.is_unit(r.z()));
        CHECK(r.is_unit(r.one()));
        CHECK(!r.is_unit(r.from_int(2)));
        CHECK(!r.is_unit(r.zero()));
        RealCycloElement zi = r.inverse(r.z());
        CHECK((r.z() * zi - r.one()).is_zero());
        CHECK_THROWS_AS(r.inverse(r.from_int(3)), std::domain_error);
    }
}

TEST_CASE("norm is multiplicative") {
    RealCycloRing r(11);
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 25; ++trial) {
        RealCycloElement x = rand_elem(r, rng);
        RealCycloElement y = rand_elem(r, rng);
        CHECK(r.norm(x * y) == r.norm(x) * r.norm(y));
    }
}

TEST_CASE("element rendering") {
    RealCycloRing r(7);
    CHECK(r.zero().to_string() == "0");
    CHECK(r.one().to_string() == "1");
    CHECK((r.z() * r.from_int(-2)).to_string() == "-2*z");
    CHECK(r.from_coeffs({1, 0, 3}).to_string() == "1 + 3*z^2");
}
