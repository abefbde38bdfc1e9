#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gframe/group.hpp"

using namespace gframe;

TEST_CASE("cyclic group structure") {
    const GroupTable z4 = GroupTable::cyclic(4);
    CHECK(z4.order == 4);
    CHECK(z4.identity == 0);
    CHECK(z4.mul(1, 3) == 0);
    CHECK(z4.inv(1) == 3);
    CHECK(z4.inv(2) == 2);
    CHECK(validate_group(z4).ok());
    CHECK(z4.conjugacy_class_count() == 4);
}

TEST_CASE("from_product derives identity and inverses") {
    // Klein four-group written without any metadata.
    const std::vector<std::vector<int>> p = {
        {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    const GroupTable v4 = GroupTable::from_product(p);
    CHECK(v4.identity == 0);
    for (int a = 0; a < 4; ++a) CHECK(v4.inv(a) == a);
    CHECK(validate_group(v4).ok());
}

TEST_CASE("malformed tables throw") {
    CHECK_THROWS_AS(GroupTable::from_product({}), StructuralError);
    CHECK_THROWS_AS(GroupTable::from_product({{0, 1}, {1}}), StructuralError);
    CHECK_THROWS_AS(GroupTable::from_product({{0, 7}, {1, 0}}), StructuralError);
    // constant table: no two-sided identity
    CHECK_THROWS_AS(GroupTable::from_product({{0, 0}, {0, 0}}), StructuralError);
}

TEST_CASE("validate_group reports broken associativity") {
    GroupTable z4 = GroupTable::cyclic(4);
    z4.product[2][3] = 3;  // should be 1
    const ValidationReport report = validate_group(z4);
    CHECK(!report.ok());
    bool found = false;
    for (const auto& issue : report.issues)
        if (issue.kind == IssueKind::associativity) found = true;
    CHECK(found);
}

TEST_CASE("validate_group reports a non-multiplicative modular function") {
    GroupTable z2 = GroupTable::cyclic(2);
    z2.modular[1] = 2.0;  // 2 * 2 != modular(1 + 1) = 1
    const ValidationReport report = validate_group(z2);
    CHECK(!report.ok());
    CHECK(report.issues.front().kind == IssueKind::modular_homomorphism);
}

TEST_CASE("symmetric group on three letters") {
    const GroupTable s3 = GroupTable::symmetric3();
    CHECK(s3.order == 6);
    CHECK(validate_group(s3).ok());
    CHECK(s3.conjugacy_class_count() == 3);
    // (01)(12) = (021) but (12)(01) = (012): nonabelian
    CHECK(s3.mul(1, 2) != s3.mul(2, 1));
    CHECK(s3.labels[0] == "e");
}

TEST_CASE("dihedral group of the square") {
    const GroupTable d4 = GroupTable::dihedral(4);
    CHECK(d4.order == 8);
    CHECK(validate_group(d4).ok());
    CHECK(d4.conjugacy_class_count() == 5);
    // s r s = r^-1: reflections conjugate rotations to their inverses
    const int r = 1, s = 4;
    CHECK(d4.mul(d4.mul(s, r), s) == d4.inv(r));
}

TEST_CASE("inner product is conjugate-linear in the second slot") {
    const GroupTable z3 = GroupTable::cyclic(3);
    const GroupFunction f = make_function(z3, Vec::Random(3));
    const GroupFunction g = make_function(z3, Vec::Random(3));
    const Complex i(0.0, 1.0);
    GroupFunction fi = f, gi = g;
    fi.values *= i;
    gi.values *= i;
    CHECK(std::abs(inner_product(fi, g) - i * inner_product(f, g)) < 1e-14);
    CHECK(std::abs(inner_product(f, gi) + i * inner_product(f, g)) < 1e-14);
}

TEST_CASE("delta functions are an orthonormal family") {
    const GroupTable s3 = GroupTable::symmetric3();
    for (int s = 0; s < 6; ++s) {
        CHECK(norm(delta(s3, s)) == doctest::Approx(1.0).epsilon(1e-14));
        for (int t = 0; t < 6; ++t)
            if (t != s) CHECK(std::abs(inner_product(delta(s3, s), delta(s3, t))) < 1e-15);
    }
}

TEST_CASE("functions over different groups are rejected") {
    const GroupTable a = GroupTable::cyclic(3);
    const GroupTable b = GroupTable::cyclic(4);
    CHECK_THROWS_AS(inner_product(delta(a, 0), delta(b, 0)), PreconditionError);
    CHECK_THROWS_AS(make_function(a, Vec::Zero(4)), StructuralError);
}
