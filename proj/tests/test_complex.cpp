#include <catch2/catch_amalgamated.hpp>

#include "arrtop/simplicial_complex.hpp"

using arrtop::NotAComplex;
using arrtop::Simplex;
using arrtop::SimplicialComplex;

TEST_CASE("closure generates all faces") {
    const SimplicialComplex k = SimplicialComplex::closure({"a", "b", "c"}, {{0, 1, 2}});
    CHECK(k.simplex_count() == 7);
    CHECK(k.dim() == 2);
    CHECK(k.has_simplex({0, 2}));
    CHECK(k.simplex_index({0, 1, 2}) >= 0);
    CHECK(k.simplex_index({1, 2, 0}) == k.simplex_index({0, 1, 2}));
}

TEST_CASE("from_simplices rejects a non-closed family") {
    CHECK_THROWS_AS(SimplicialComplex::from_simplices({"a", "b"}, {{0, 1}}), NotAComplex);
    CHECK_NOTHROW(SimplicialComplex::from_simplices({"a", "b"}, {{0}, {1}, {0, 1}}));
}

TEST_CASE("simplex labels use vertex labels") {
    const SimplicialComplex k = SimplicialComplex::closure({"a", "b"}, {{0, 1}});
    CHECK(k.simplex_label({0, 1}) == "{a,b}");
}

TEST_CASE("euler characteristic and f-vector") {
    const SimplicialComplex circle =
        SimplicialComplex::closure({"0", "1", "2"}, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(circle.f_vector() == std::vector<long long>{3, 3});
    CHECK(circle.euler_characteristic() == 0);
    CHECK(SimplicialComplex().euler_characteristic() == 0);
}

TEST_CASE("sphere_complex is the boundary of a simplex") {
    CHECK(arrtop::sphere_complex(-1).empty());
    CHECK(arrtop::sphere_complex(0).f_vector() == std::vector<long long>{2});
    CHECK(arrtop::sphere_complex(1).f_vector() == std::vector<long long>{3, 3});
    CHECK(arrtop::sphere_complex(2).f_vector() == std::vector<long long>{4, 6, 4});
    CHECK(arrtop::sphere_complex(2).euler_characteristic() == 2);
}

TEST_CASE("join with the empty complex is the identity") {
    const SimplicialComplex circle = arrtop::sphere_complex(1);
    const SimplicialComplex j = arrtop::join_complex(circle, arrtop::sphere_complex(-1));
    CHECK(j.f_vector() == circle.f_vector());
}

TEST_CASE("join of two points is an edge, of two 0-spheres a square") {
    const SimplicialComplex pt = SimplicialComplex::closure({"p"}, {{0}});
    CHECK(arrtop::join_complex(pt, pt).f_vector() == std::vector<long long>{2, 1});

    const SimplicialComplex s0 = arrtop::sphere_complex(0);
    const SimplicialComplex square = arrtop::join_complex(s0, s0);
    CHECK(square.f_vector() == std::vector<long long>{4, 4});
    CHECK(square.euler_characteristic() == 0);
}

TEST_CASE("join of a point with a circle is a cone") {
    const SimplicialComplex pt = SimplicialComplex::closure({"apex"}, {{0}});
    const SimplicialComplex cone = arrtop::join_complex(pt, arrtop::sphere_complex(1));
    CHECK(cone.f_vector() == std::vector<long long>{4, 6, 3});
    CHECK(cone.euler_characteristic() == 1);
}
