#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "unitforge/dihedral2p.hpp"

using namespace unitforge;

TEST_CASE("membership in U") {
    RealCycloRing r(5);
    CHECK(is_in_U(Mat2R::identity(r)));
    CHECK(is_in_U(Mat2R::swap_matrix(r)));
    CHECK(is_in_U(Mat2R::involution_y(r)));
    // diag(z, 1): z = 2 mod Q, column sums 2 and 1 are not a common +-1.
    CHECK(!is_in_U(Mat2R::diagonal(r.z(), r.one())));
    // det is not a unit of the ring.
    CHECK(!is_in_U(Mat2R::diagonal(r.from_int(2), r.one())));
}

TEST_CASE("Y inverts E(q) by conjugation for any q") {
    RealCycloRing r(7);
    Mat2R y = Mat2R::involution_y(r);
    CHECK(y * y == Mat2R::identity(r));
    for (int k = -3; k <= 3; ++k) {
        RealCycloElement q = r.z() * r.from_int(k);
        Mat2R e = Mat2R::elementary_upper(q);
        CHECK(e.conjugated_by(y) == e.inverse());
    }
}

TEST_CASE("solve_t on the identity and on a c = d matrix") {
    RealCycloRing r(5);
    // S = I: c = 0, d = 1 differ, and t = 0 works.
    auto t = solve_t(Mat2R::identity(r));
    REQUIRE(t.has_value());
    CHECK(t->is_zero());

    // S = (1 0; 1 1): c = d = 1 mod Q, no correction needed.
    Mat2R s = Mat2R::elementary_lower(r.one());
    CHECK(!solve_t(s).has_value());

    CHECK_THROWS_AS(solve_t(Mat2R::diagonal(r.z(), r.z())), std::invalid_argument);
}

TEST_CASE("involution witness: identity S gives Y itself") {
    RealCycloRing r(5);
    RealCycloElement q = r.from_int(5);  // p lies in Q
    InvolutionWitness w = involution_witness(q, Mat2R::identity(r));
    CHECK(w.y_prime == Mat2R::involution_y(r));
    CHECK(w.e_observed == 0);

    // q = 0: X is the identity; the witness must still land in U.
    InvolutionWitness w0 = involution_witness(r.zero(), Mat2R::identity(r));
    CHECK(is_in_U(w0.y_prime));

    // q outside Q is rejected.
    CHECK_THROWS_AS(involution_witness(r.one(), Mat2R::identity(r)),
                    std::invalid_argument);
}

TEST_CASE("involution witness in the c = d branch observes e = 1") {
    RealCycloRing r(7);
    Mat2R s = Mat2R::elementary_lower(r.one());  // c = d = 1
    RealCycloElement q = (r.z() - r.from_int(2)) * r.from_int(3);
    InvolutionWitness w = involution_witness(q, s);
    CHECK(!w.used_t);
    CHECK(w.e_observed == 1);
    CHECK(is_in_U(w.y_prime));
}

TEST_CASE("decompose_U round trips, including the swapped branch") {
    RealCycloRing r(5);
    // The swap matrix itself has det -1.
    UDecomposition d = decompose_U(Mat2R::swap_matrix(r));
    CHECK(d.swapped);
    CHECK(is_in_U1(d.sl_part));

    // An SL2-side member decomposes with a trivial diagonal part.
    Mat2R lift{r.one() + r.z(), r.z(), -r.z(), r.one() - r.z()};
    REQUIRE(is_in_U1(lift));
    d = decompose_U(lift);
    CHECK(!d.swapped);
    CHECK((d.diag - r.one()).is_zero());
    CHECK(d.sl_part == lift);

    CHECK_THROWS_AS(decompose_U(Mat2R::diagonal(r.z(), r.one())), std::invalid_argument);
}

TEST_CASE("residue group of U1 mod Q") {
    for (int p : {3, 5, 7, 11, 13}) {
        ResidueGroupReport rep = residue_u1_group(p);
        CHECK(rep.order == 2 * p);
        CHECK(rep.closed);
        CHECK(rep.cyclic);
        CHECK(rep.t_has_order_p);
        CHECK(rep.swap_inverts);
    }
    // Swap conjugation inverts T(a) for every supported prime.
    for (int p : {17, 19, 23, 29, 31}) CHECK(residue_u1_group(p).swap_inverts);
    CHECK_THROWS_AS(residue_u1_group(4), std::invalid_argument);
}

TEST_CASE("random U members stay in U and decompose") {
    for (int p : {3, 5, 7}) {
        RealCycloRing r(p);
        Rng rng(2024);
        for (int trial = 0; trial < 25; ++trial) {
            Mat2R u = random_u_member(r, rng);
            REQUIRE(is_in_U(u));
            CHECK(is_in_U(u.inverse()));
            Mat2R v = random_u_member(r, rng);
            CHECK(is_in_U(u * v));
            decompose_U(u);  // throws on any round-trip mismatch
        }
    }
}

TEST_CASE("random SL2 elements have determinant one") {
    RealCycloRing r(11);
    Rng rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        Mat2R s = random_sl2(r, rng);
        CHECK((s.det() - r.one()).is_zero());
    }
}

TEST_CASE("seeded trial run is deterministic and green") {
    DihedralTrialReport a = run_dihedral_trials(5, 30, 123);
    DihedralTrialReport b = run_dihedral_trials(5, 30, 123);
    CHECK(a.all_ok());
    CHECK(a.involution_e0 == b.involution_e0);
    CHECK(a.involution_e1 == b.involution_e1);
    CHECK(a.involution_e0 + a.involution_e1 == 30);
}
