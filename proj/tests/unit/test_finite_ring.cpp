#include <doctest.h>

#include "orelab/finite_ring.hpp"

using namespace orelab;

TEST_CASE("zmod tables and units") {
    auto z6 = zmod(6);
    CHECK(z6.size() == 6);
    CHECK(z6.mul(2, 3) == 0);
    CHECK(units(z6).to_vector() == std::vector<Elem>{1, 5});
    CHECK(regular_elements(z6, Side::left) == units(z6));
    CHECK(z6.is_commutative());
}

TEST_CASE("axiom violations name the axiom and a witness") {
    // addition not associative: a+b defined as |a-b| style table
    std::vector<Elem> add{0, 1, 1, 0}, mul{0, 0, 0, 1};
    add = {0, 1, 1, 1};
    try {
        FiniteRing::from_tables("bad", 2, add, mul, 1, 0);
        FAIL("expected RingAxiomError");
    } catch (const RingAxiomError& e) {
        CHECK(!e.axiom().empty());
    }
}

TEST_CASE("ideals of Z/6") {
    auto z6 = zmod(6);
    auto ideals = two_sided_ideals(z6);
    REQUIRE(ideals.size() == 4);
    CHECK(ideals[0].members.to_vector() == std::vector<Elem>{0});
    CHECK(ideal_generated_by(z6, {2}, IdealKind::two_sided).members.to_vector() == std::vector<Elem>{0, 2, 4});
    CHECK(is_ideal(z6, ElementSet(6, {0, 3}), IdealKind::two_sided));
    CHECK(!is_ideal(z6, ElementSet(6, {0, 1}), IdealKind::two_sided));
}

TEST_CASE("quotient of Z/6 by (2) is Z/2") {
    auto z6 = zmod(6);
    auto q = quotient_ring(z6, ideal_generated_by(z6, {2}, IdealKind::two_sided));
    CHECK(q.ring.size() == 2);
    CHECK(q.projection.is_homomorphism());
    CHECK(q.projection.kernel().to_vector() == std::vector<Elem>{0, 2, 4});
}

TEST_CASE("matrix and triangular rings") {
    auto m2 = matrix_ring(zmod(2), 2);
    CHECK(m2.size() == 16);
    CHECK(!m2.is_commutative());
    CHECK(units(m2).size() == 6);
    CHECK(two_sided_ideals(m2).size() == 2);
    CHECK(is_semisimple(m2));
    auto t2 = triangular_ring(zmod(2), 2);
    CHECK(t2.size() == 8);
    CHECK(t2.one() == 5);
    CHECK(t2.mul(4, 2) == 2);  // e11 e12 = e12
    CHECK(t2.mul(2, 4) == 0);
    CHECK(!is_semisimple(t2));
    CHECK(jacobson_radical(t2).to_vector() == std::vector<Elem>{0, 2});
    CHECK(!is_semiprime(t2).semiprime);
}

TEST_CASE("central idempotents of Z/6") {
    auto f = central_idempotent_decomposition(zmod(6));
    REQUIRE(f.size() == 2);
    CHECK(f[0].idempotent == 3);
    CHECK(f[1].idempotent == 4);
    CHECK(f[0].factor.size() == 2);
    CHECK(f[1].factor.size() == 3);
}

TEST_CASE("homomorphisms and automorphisms") {
    CHECK(ring_homomorphisms(zmod(6), zmod(3)).size() == 1);
    CHECK(ring_homomorphisms(zmod(3), zmod(6)).empty());
    CHECK(ring_automorphisms(matrix_ring(zmod(2), 2)).size() == 6);
    CHECK(ring_automorphisms(product_ring({zmod(2), zmod(2)})).size() == 2);
}

TEST_CASE("ring spec parser") {
    CHECK(build_ring("zmod(6)").size() == 6);
    CHECK(build_ring("product(zmod(2), zmod(3)) # comment").size() == 6);
    CHECK(build_ring("group_algebra(zmod(2),S3)").size() == 64);
    CHECK(build_ring("quotient(zmod(8),[4])").size() == 4);
    auto t = build_ring("table{elements=[o,i]; add=[[o,i],[i,o]]; mul=[[o,o],[o,i]]; one=i; zero=o}");
    CHECK(t.size() == 2);
    CHECK(t.one() == 1);
    CHECK_THROWS_AS(build_ring("zmod(6"), ParseError);
    CHECK_THROWS_AS(build_ring("frob(3)"), ParseError);
}
