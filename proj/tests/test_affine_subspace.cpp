#include <catch2/catch_amalgamated.hpp>

#include "arrtop/affine_subspace.hpp"

using arrtop::AffineSubspace;
using arrtop::QMatrix;
using arrtop::QVector;
using arrtop::Rational;

namespace {
AffineSubspace make(QMatrix eq, QVector rhs, int n) {
    auto s = AffineSubspace::canonicalize(std::move(eq), std::move(rhs), n);
    REQUIRE(s.has_value());
    return *s;
}
}  // namespace

TEST_CASE("canonicalize produces reduced row echelon form") {
    // 2x + 2y = 2 and x + y + z = 1 in Q^3.
    const AffineSubspace s = make({{2, 2, 0}, {1, 1, 1}}, {2, 1}, 3);
    CHECK(s.rank() == 2);
    CHECK(s.dimension() == 1);
    // Unit pivots in strictly increasing columns: x + y = 1, z = 0.
    CHECK(s.equations() == QMatrix{{1, 1, 0}, {0, 0, 1}});
    CHECK(s.rhs() == QVector{1, 0});
}

TEST_CASE("canonicalize drops redundant rows and detects inconsistency") {
    const AffineSubspace s = make({{1, 0}, {2, 0}}, {0, 0}, 2);
    CHECK(s.rank() == 1);
    CHECK_FALSE(AffineSubspace::canonicalize({{1, 0}, {1, 0}}, {0, 1}, 2).has_value());
    CHECK(AffineSubspace::full_space(3).dimension() == 3);
}

TEST_CASE("representation is unique across presentations") {
    const AffineSubspace a = make({{0, 1}}, {0}, 2);
    const AffineSubspace b = make({{0, 3}}, {0}, 2);
    CHECK(a == b);
    CHECK(a.key() == b.key());
    CHECK(a != make({{0, 1}}, {1}, 2));
}

TEST_CASE("intersect two planes in Q^3 gives a line") {
    const AffineSubspace plane_z = make({{0, 0, 1}}, {0}, 3);
    const AffineSubspace plane_xy = make({{1, -1, 0}}, {0}, 3);
    const auto line = AffineSubspace::intersect(plane_z, plane_xy);
    REQUIRE(line.has_value());
    CHECK(line->dimension() == 1);
    CHECK(line->equations() == QMatrix{{1, -1, 0}, {0, 0, 1}});
    CHECK(line->rhs() == QVector{0, 0});
}

TEST_CASE("intersect parallel lines is empty") {
    const AffineSubspace l0 = make({{0, 1}}, {0}, 2);
    const AffineSubspace l1 = make({{0, 1}}, {1}, 2);
    CHECK_FALSE(AffineSubspace::intersect(l0, l1).has_value());
}

TEST_CASE("contains follows point-set inclusion") {
    const AffineSubspace plane = make({{0, 0, 1}}, {0}, 3);
    const AffineSubspace x_axis = make({{0, 1, 0}, {0, 0, 1}}, {0, 0}, 3);
    CHECK(plane.contains(x_axis));
    CHECK_FALSE(x_axis.contains(plane));
    CHECK(plane.contains(plane));
    CHECK(AffineSubspace::full_space(3).contains(plane));
}

TEST_CASE("point and direction basis describe the subspace") {
    const AffineSubspace line = make({{1, -1, 0}, {0, 0, 1}}, {0, 0}, 3);
    const QVector p = line.point();
    CHECK(line.satisfies(p));
    const QMatrix dirs = line.direction_basis();
    REQUIRE(dirs.size() == 1);
    QVector q = p;
    for (int c = 0; c < 3; ++c) q[c] += dirs[0][c];
    CHECK(line.satisfies(q));
}
