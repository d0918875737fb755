#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "freearr/catalog.hpp"
#include "freearr/iso.hpp"
#include "freearr/lattice.hpp"

using namespace freearr;

namespace {

Arrangement boolean_arr(int l) {
    std::vector<IntVec> rows;
    for (int i = 0; i < l; ++i) {
        IntVec v(l, 0);
        v[i] = 1;
        rows.push_back(v);
    }
    return make_arrangement(l, rows);
}

}  // namespace

TEST_CASE("canonicalize") {
    CHECK(canonicalize({2, -4, 6}).normal == IntVec{1, -2, 3});
    CHECK(canonicalize({0, 0, 5}).normal == IntVec{0, 0, 1});
    CHECK(canonicalize({-1, 1, 0}).normal == IntVec{1, -1, 0});
    CHECK(canonicalize({1, -2, 3}).normal == IntVec{1, -2, 3});  // idempotent
    CHECK(canonicalize({-3, 6, -9}).normal == IntVec{1, -2, 3});  // scalar-invariant
    CHECK_THROWS_WITH_AS(canonicalize({0, 0, 0}), doctest::Contains("InvalidHyperplane"),
                         FreearrError);
}

TEST_CASE("deletion") {
    Arrangement a = arr_A();
    CHECK(a.size() == 32);
    Arrangement del = deletion(a, canonicalize({1, 0, 0, 0, 0, 0, 0}));
    CHECK(del.size() == 31);
    CHECK(del.dim == 7);

    Arrangement one = make_arrangement(3, {{1, 2, 3}});
    CHECK(deletion(one, canonicalize({1, 2, 3})).size() == 0);

    // removing ker(x3+x4) from A yields B
    CHECK(deletion(a, canonicalize({0, 0, 1, 1, 0, 0, 0})) == arr_B());

    CHECK_THROWS_WITH_AS(deletion(one, canonicalize({1, 0, 0})), doctest::Contains("NotMember"),
                         FreearrError);
}

TEST_CASE("localization") {
    Arrangement b = arr_B();
    // full space flat: no hyperplane contains V, so the localization is empty
    CHECK(localization(b, flat_from_normals(b, {})).size() == 0);
    CHECK(restriction(b, flat_from_normals(b, {})) == b);

    Arrangement by = localization(b, flat_Y());
    CHECK(by.size() == 3);
    CHECK(by.index_of(canonicalize({1, 0, 0, 0, 0, 0, 0})) >= 0);
    CHECK(by.index_of(canonicalize({1, 1, 2, 2, 2, 1, 0})) >= 0);
    CHECK(by.index_of(canonicalize({0, 0, 0, 0, 0, 1, 0})) >= 0);

    Hyperplane h = b.hyperplanes[0];
    Arrangement loc = localization(b, hyperplane_flat(b, h));
    CHECK(loc.index_of(h) >= 0);

    CHECK_THROWS_WITH_AS(flat_from_normals(b, {{1, 1, 1, 1, 1, 1, 2}}),
                         doctest::Contains("NotAFlat"), FreearrError);
}

TEST_CASE("restriction") {
    Arrangement b3 = boolean_arr(3);
    Arrangement r = restriction(b3, hyperplane_flat(b3, canonicalize({1, 0, 0})));
    CHECK(r.dim == 2);
    CHECK(r.size() == 2);

    Arrangement az = restriction(arr_A(), flat_Z());
    CHECK(az.size() == 22);
    CHECK(linear_isomorphic(az, arr_C()).has_value());

    Arrangement bx = restriction(arr_B(), flat_X());
    CHECK(linear_isomorphic(bx, arr_D()).has_value());
}

TEST_CASE("product") {
    Arrangement phi2 = make_arrangement(2, {});
    Arrangement phi3 = make_arrangement(3, {});
    Arrangement p = product(phi2, phi3);
    CHECK(p.dim == 5);
    CHECK(p.size() == 0);

    Arrangement x = make_arrangement(1, {{1}});
    Arrangement q = product(x, x);
    CHECK(q.dim == 2);
    CHECK(q.size() == 2);

    // restriction of a product along H1 (+) V2 equals (A1^H1) x A2
    Arrangement a1 = make_arrangement(2, {{1, 0}, {0, 1}, {1, 1}});
    Arrangement a2 = make_arrangement(2, {{1, 0}, {1, -1}});
    Arrangement prod = product(a1, a2);
    Hyperplane h = canonicalize({1, 1, 0, 0});
    Arrangement lhs = restriction(prod, hyperplane_flat(prod, h));
    Arrangement rhs =
        product(restriction(a1, hyperplane_flat(a1, canonicalize({1, 1}))), a2);
    CHECK(canonical_key(lhs) == canonical_key(rhs));
    CHECK(prod.size() == a1.size() + a2.size());
}

TEST_CASE("rank and essentialize") {
    CHECK(rank(make_arrangement(4, {})) == 0);
    CHECK(rank(boolean_arr(5)) == 5);
    CHECK(rank(arr_A()) == 7);

    Arrangement planes = make_arrangement(3, {{1, 0, 0}, {0, 1, 0}, {1, 1, 0}});
    Essentialization ess = essentialize(planes);
    CHECK(ess.arrangement.dim == 2);
    CHECK(ess.kernel_dim == 1);
    CHECK(ess.arrangement.size() == planes.size());
    CHECK(matroid_isomorphic(ess.arrangement, planes).has_value());
}

TEST_CASE("triple") {
    Arrangement b2 = boolean_arr(2);
    Triple t = triple(b2, canonicalize({1, 0}));
    CHECK(t.deleted.size() == 1);
    CHECK(t.restricted.dim == 1);
    // ker y traces the origin on ker x, so the restriction has one hyperplane;
    // this is what chi(A) = chi(A') - chi(A'') requires.
    CHECK(t.restricted.size() == 1);

    Triple e41 = example_4_1();
    CHECK(e41.full.size() == 11);
    CHECK(e41.deleted.size() == 10);

    Triple tc = triple(arr_C(), canonicalize({1, 1, 0, 0, 0}));
    CHECK(tc.deleted == arr_D());
}

TEST_CASE("text format") {
    Arrangement b2 = parse_arrangement("dim 2\n1 0\n0 1\n");
    CHECK(b2 == boolean_arr(2));

    std::string a_text = catalog_text("a");
    CHECK(emit_arrangement(parse_arrangement(a_text)) == a_text);

    CHECK_THROWS_WITH_AS(parse_arrangement("dim 2\n1 0 0\n"), doctest::Contains("ParseError"),
                         FreearrError);
    CHECK_THROWS_WITH_AS(parse_arrangement("dim 2\n1 0\n2 0\n", true),
                         doctest::Contains("ParseError"), FreearrError);
    // duplicates merge silently outside strict mode
    CHECK(parse_arrangement("dim 2\n1 0\n2 0\n").size() == 1);
    // comments are allowed
    CHECK(parse_arrangement("# c\ndim 2\n1 0\n# c\n0 1\n").size() == 2);
}
