#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "freearr/catalog.hpp"
#include "freearr/lattice.hpp"

using namespace freearr;

TEST_CASE("entry counts") {
    CHECK(arr_A().size() == 32);
    CHECK(arr_B().size() == 31);
    CHECK(arr_C().size() == 22);
    CHECK(arr_D().size() == 21);
    CHECK(arr_Dpp().size() == 16);
    CHECK(arr_A().dim == 7);
    CHECK(arr_C().dim == 5);
    CHECK(arr_Dpp().dim == 4);
}

TEST_CASE("derived entries match their constructions") {
    CHECK(arr_B() == deletion(arr_A(), canonicalize({0, 0, 1, 1, 0, 0, 0})));
    CHECK(arr_D() == deletion(arr_C(), canonicalize({1, 1, 0, 0, 0})));
    Arrangement res = restriction(arr_D(), hyperplane_flat(arr_D(), canonicalize({0, 0, 0, 1, 0})));
    CHECK(canonical_key(res) == canonical_key(arr_Dpp()));
}

TEST_CASE("e7 root system") {
    Arrangement e7 = e7_positive_roots();
    CHECK(e7.size() == 63);
    CHECK(e7.dim == 7);
    CHECK(e7.index_of(canonicalize({1, 2, 2, 3, 2, 1, 1})) >= 0);
    // the highest root has coefficient sum 17
    long best = 0;
    for (const auto& h : e7.hyperplanes) {
        long s = 0;
        for (Int c : h.normal) s += c;
        best = std::max(best, s);
    }
    CHECK(best == 17);
    // the big catalog arrangement is a subarrangement
    for (const auto& h : arr_A().hyperplanes) CHECK(e7.index_of(h) >= 0);
}

TEST_CASE("example families") {
    Triple e41 = example_4_1();
    CHECK(e41.full.size() == 11);
    CHECK(e41.full.dim == 4);

    Arrangement base = essentialize(e41.restricted).arrangement;
    Triple t0 = example_4_2(base, 0);
    CHECK(t0.full.size() == base.size() + 1);
    IntVec ker_z(base.dim + 1, 0);
    ker_z.back() = 1;
    CHECK(t0.full.index_of(canonicalize(ker_z)) >= 0);

    for (int m = 0; m <= 3; ++m) {
        Triple t = example_4_2(base, m);
        IntPoly chib = char_poly(base);
        CHECK(char_poly(t.full) == chib * IntPoly::from_roots({m + 1}));
        CHECK(char_poly(t.deleted) == chib * IntPoly::from_roots({m}));
        CHECK(char_poly(t.restricted) == chib);
    }

    CHECK_THROWS_WITH_AS(example_4_2(make_arrangement(2, {{1, 1}}), 1),
                         doctest::Contains("PreconditionViolated"), FreearrError);
}

TEST_CASE("catalog names and texts") {
    auto names = catalog_names();
    CHECK(names == std::vector<std::string>{"a", "b", "c", "d", "dpp", "e7"});
    for (const auto& n : names) CHECK(parse_arrangement(catalog_text(n)) == catalog_get(n));
    CHECK_THROWS_AS(catalog_text("nope"), FreearrError);
    // table and chain blobs are also exposed
    CHECK(!catalog_text("a.table").empty());
    CHECK(!catalog_text("b.chain").empty());
}
