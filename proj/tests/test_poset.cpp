#include <catch2/catch_amalgamated.hpp>

#include "arrtop/poset.hpp"
#include "arrtop/simplicial_complex.hpp"

using arrtop::FinitePoset;
using arrtop::NotASemilattice;
using arrtop::SimplicialComplex;

namespace {
FinitePoset diamond() {
    return FinitePoset::from_covers({"bot", "a", "b", "top"},
                                    {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
}

FinitePoset bowtie() {
    // Two minimal elements each below two maximal ones: joins exist as
    // upper bounds but never as least upper bounds.
    return FinitePoset::from_covers({"a", "b", "x", "y"},
                                    {{0, 2}, {0, 3}, {1, 2}, {1, 3}});
}
}  // namespace

TEST_CASE("leq and minimal elements") {
    const FinitePoset p = diamond();
    CHECK(p.leq(0, 3));
    CHECK(p.leq(1, 1));
    CHECK_FALSE(p.leq(1, 2));
    CHECK(p.minimal_elements() == std::vector<int>{0});
    CHECK(bowtie().minimal_elements() == std::vector<int>{0, 1});
}

TEST_CASE("join returns the least upper bound when it exists") {
    const FinitePoset p = diamond();
    CHECK(p.join({1, 2}) == 3);
    CHECK(p.join({0, 1}) == 1);
    CHECK(p.join({3}) == 3);

    const FinitePoset two = FinitePoset::from_covers({"a", "b"}, {});
    CHECK_FALSE(two.join({0, 1}).has_value());
}

TEST_CASE("bowtie is not a semilattice") {
    const FinitePoset p = bowtie();
    CHECK_FALSE(p.is_semilattice());
    CHECK_THROWS_AS(p.join({0, 1}), NotASemilattice);
    CHECK(diamond().is_semilattice());
}

TEST_CASE("covering pairs skip transitive relations") {
    const FinitePoset chain = FinitePoset::from_covers({"x", "y", "z"}, {{0, 1}, {1, 2}});
    const auto covers = chain.covering_pairs();
    CHECK(covers == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
}

TEST_CASE("all_chains lists index-sorted chains by length then lexicographically") {
    const FinitePoset chain = FinitePoset::from_covers({"x", "y", "z"}, {{0, 1}, {1, 2}});
    const auto chains = chain.all_chains();
    const std::vector<std::vector<int>> expect = {
        {0}, {1}, {2}, {0, 1}, {0, 2}, {1, 2}, {0, 1, 2}};
    CHECK(chains == expect);
}

TEST_CASE("order complex of a 3-chain is the full triangle") {
    const FinitePoset chain = FinitePoset::from_covers({"x", "y", "z"}, {{0, 1}, {1, 2}});
    const SimplicialComplex k = arrtop::order_complex(chain);
    CHECK(k.f_vector() == std::vector<long long>{3, 3, 1});
    CHECK(k.euler_characteristic() == 1);
}

TEST_CASE("order complex of an antichain is discrete") {
    const FinitePoset anti = FinitePoset::from_covers({"a", "b", "c"}, {});
    const SimplicialComplex k = arrtop::order_complex(anti);
    CHECK(k.f_vector() == std::vector<long long>{3});
}

TEST_CASE("nerve complex spans minimal elements with joins") {
    // Diamond: minimal element is bot alone, so the nerve is a point.
    CHECK(arrtop::nerve_complex(diamond()).f_vector() == std::vector<long long>{1});

    // Two atoms with a common top: the pair has a join, so the nerve is an edge.
    const FinitePoset vee =
        FinitePoset::from_covers({"a", "b", "top"}, {{0, 2}, {1, 2}});
    CHECK(arrtop::nerve_complex(vee).f_vector() == std::vector<long long>{2, 1});

    // Two incomparable atoms, no join: two isolated vertices.
    const FinitePoset two = FinitePoset::from_covers({"a", "b"}, {});
    CHECK(arrtop::nerve_complex(two).f_vector() == std::vector<long long>{2});
}

TEST_CASE("face poset of the full triangle") {
    const SimplicialComplex tri = SimplicialComplex::closure({"p", "q", "r"}, {{0, 1, 2}});
    const FinitePoset fp = arrtop::face_poset(tri);
    CHECK(fp.size() == 7);
    CHECK(fp.covering_pairs().size() == 9);
    CHECK(fp.minimal_elements().size() == 3);
}

TEST_CASE("barycentric subdivision of the full triangle") {
    const SimplicialComplex tri = SimplicialComplex::closure({"p", "q", "r"}, {{0, 1, 2}});
    const SimplicialComplex bd = arrtop::barycentric_subdivision(tri);
    CHECK(bd.f_vector() == std::vector<long long>{7, 12, 6});
    CHECK(bd.euler_characteristic() == tri.euler_characteristic());
}
