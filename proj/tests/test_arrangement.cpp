#include <catch2/catch_amalgamated.hpp>

#include "arrtop/arrangement.hpp"

using arrtop::AffineSubspace;
using arrtop::Arrangement;
using arrtop::ContainmentViolation;
using arrtop::IntersectionLattice;
using arrtop::NoJoin;
using arrtop::QMatrix;
using arrtop::QVector;
using arrtop::ValidationError;

namespace {
AffineSubspace sub(QMatrix eq, QVector rhs, int n) {
    return *AffineSubspace::canonicalize(std::move(eq), std::move(rhs), n);
}

Arrangement three_concurrent_lines() {
    return Arrangement::validate(
        {sub({{0, 1}}, {0}, 2), sub({{1, 0}}, {0}, 2), sub({{1, -1}}, {0}, 2)}, 2);
}

Arrangement two_crossing_lines() {
    return Arrangement::validate({sub({{0, 1}}, {0}, 2), sub({{1, 0}}, {0}, 2)}, 2);
}

Arrangement two_parallel_lines() {
    return Arrangement::validate({sub({{0, 1}}, {0}, 2), sub({{0, 1}}, {1}, 2)}, 2);
}
}  // namespace

TEST_CASE("validate rejects duplicates and containments") {
    CHECK_THROWS_AS(
        Arrangement::validate({sub({{0, 1}}, {0}, 2), sub({{0, 2}}, {0}, 2)}, 2),
        ContainmentViolation);

    const AffineSubspace plane = sub({{0, 0, 1}}, {0}, 3);
    const AffineSubspace line = sub({{0, 1, 0}, {0, 0, 1}}, {0, 0}, 3);
    try {
        Arrangement::validate({plane, line}, 3);
        FAIL("expected ContainmentViolation");
    } catch (const ContainmentViolation& e) {
        CHECK(std::string(e.what()).find("A2") != std::string::npos);
    }

    CHECK_THROWS_AS(Arrangement::validate({}, 2), ValidationError);
    CHECK_THROWS_AS(Arrangement::validate({sub({{0, 1}}, {0}, 2)}, 3),
                    arrtop::DimensionMismatch);
}

TEST_CASE("three concurrent lines: semilattice shape") {
    const IntersectionLattice l = arrtop::intersection_semilattice(three_concurrent_lines());
    CHECK(l.poset.size() == 4);
    CHECK(l.atoms.size() == 3);
    CHECK(l.poset.covering_pairs().size() == 3);
    CHECK(l.poset.is_semilattice());
    CHECK(l.poset.label(0) == "a1");
    CHECK(l.poset.label(3) == "f1");
    CHECK(l.flats[3].dimension() == 0);
    // Reverse inclusion: every atom lies below the origin flat.
    for (int atom : l.atoms) CHECK(l.poset.leq(atom, 3));
}

TEST_CASE("three concurrent lines: models") {
    const IntersectionLattice l = arrtop::intersection_semilattice(three_concurrent_lines());
    const arrtop::SimplicialComplex zz = arrtop::zz_skeleton(l);
    CHECK(zz.f_vector() == std::vector<long long>{4, 3});

    const arrtop::SimplicialComplex bd = arrtop::vassiliev_skeleton(l);
    CHECK(bd.f_vector() == std::vector<long long>{7, 12, 6});
    CHECK(bd.simplex_count() == 25);
    CHECK(arrtop::count_vassiliev_simplices(l, 1000) == 25);
}

TEST_CASE("two crossing lines: chain count by hand") {
    const IntersectionLattice l = arrtop::intersection_semilattice(two_crossing_lines());
    CHECK(l.poset.size() == 3);
    CHECK(arrtop::count_vassiliev_simplices(l, 1000) == 5);
    CHECK(arrtop::vassiliev_skeleton(l).simplex_count() == 5);
}

TEST_CASE("count saturates at the cap") {
    const IntersectionLattice l = arrtop::intersection_semilattice(three_concurrent_lines());
    CHECK(arrtop::count_vassiliev_simplices(l, 10) > 10);
}

TEST_CASE("parallel lines give an antichain") {
    const IntersectionLattice l = arrtop::intersection_semilattice(two_parallel_lines());
    CHECK(l.poset.size() == 2);
    CHECK(l.poset.covering_pairs().empty());
    CHECK(arrtop::zz_skeleton(l).f_vector() == std::vector<long long>{2});
    CHECK(arrtop::vassiliev_skeleton(l).f_vector() == std::vector<long long>{2});
}

TEST_CASE("subspace_of_vertex_set resolves joins") {
    const IntersectionLattice l = arrtop::intersection_semilattice(two_crossing_lines());
    const AffineSubspace origin = arrtop::subspace_of_vertex_set(l, {0, 1});
    CHECK(origin.dimension() == 0);
    CHECK(arrtop::subspace_of_vertex_set(l, {0}) == l.flats[0]);

    CHECK_THROWS_AS(arrtop::subspace_of_vertex_set(l, {}), ValidationError);

    const IntersectionLattice par = arrtop::intersection_semilattice(two_parallel_lines());
    try {
        arrtop::subspace_of_vertex_set(par, {0, 1});
        FAIL("expected NoJoin");
    } catch (const NoJoin& e) {
        CHECK(std::string(e.what()).find("{a1,a2}") != std::string::npos);
        CHECK(std::string(e.what()).find("empty intersection") != std::string::npos);
    }
}

TEST_CASE("derived flats are ordered by dimension then key") {
    // Two crossing planes and a transversal plane in Q^3 generate lines
    // before the origin.
    const Arrangement a = Arrangement::validate(
        {sub({{1, 0, 0}}, {0}, 3), sub({{0, 1, 0}}, {0}, 3), sub({{0, 0, 1}}, {0}, 3)}, 3);
    const IntersectionLattice l = arrtop::intersection_semilattice(a);
    CHECK(l.poset.size() == 7);
    for (int x = 3; x + 1 < l.poset.size(); ++x)
        CHECK(l.flats[x].dimension() >= l.flats[x + 1].dimension());
    CHECK(l.flats[6].dimension() == 0);
}

TEST_CASE("atom set labels") {
    CHECK(arrtop::atom_set_label({0, 2}) == "{a1,a3}");
    CHECK(arrtop::atom_set_label({}) == "{}");
}
