#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "freearr/catalog.hpp"
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

TEST_CASE("build_lattice") {
    Lattice b2 = build_lattice(boolean_arr(2));
    CHECK(b2.flats.size() == 4);
    CHECK(b2.count_of_rank(0) == 1);
    CHECK(b2.count_of_rank(1) == 2);
    CHECK(b2.count_of_rank(2) == 1);
    CHECK(b2.flats[0].mu == 1);
    for (size_t i = b2.rank_begin[1]; i < b2.rank_begin[2]; ++i) CHECK(b2.flats[i].mu == -1);

    Lattice phi = build_lattice(make_arrangement(3, {}));
    CHECK(phi.flats.size() == 1);

    // zero upper sums of the Moebius function on every nontrivial flat
    Lattice e41 = build_lattice(example_4_1().full);
    for (size_t i = 1; i < e41.flats.size(); ++i) {
        long long sum = 0;
        for (size_t j = 0; j < e41.flats.size(); ++j)
            if ((e41.flats[i].closed & e41.flats[j].closed) == e41.flats[j].closed)
                sum += e41.flats[j].mu;
        CHECK(sum == 0);
    }
}

TEST_CASE("char_poly") {
    CHECK(char_poly(make_arrangement(3, {})) == IntPoly::monomial(1, 3));

    Triple e41 = example_4_1();
    CHECK(char_poly(e41.full) == IntPoly::from_roots({1, 3, 3, 4}));
    CHECK(char_poly(e41.restricted) == IntPoly::from_roots({1, 3, 3}));
    CHECK(char_poly(e41.deleted) == IntPoly::from_roots({1, 3, 3, 3}));

    // chi(A, 1) = 0 and the t^(l-1) coefficient is -|A| for nonempty central A
    for (const Arrangement& a : {arr_C(), arr_D(), e41.full}) {
        IntPoly chi = char_poly(a);
        CHECK(chi.eval(1) == 0);
        CHECK(chi.coeff(a.dim - 1) == -static_cast<long>(a.size()));
        CHECK(chi.monic());
        CHECK(chi.degree() == a.dim);
    }
}

TEST_CASE("char_poly_whitney") {
    CHECK(char_poly_whitney(boolean_arr(2)) == IntPoly::from_roots({1, 1}));

    Arrangement lines = make_arrangement(2, {{1, 0}, {0, 1}, {1, 1}});
    CHECK(char_poly_whitney(lines) == IntPoly::from_roots({1, 2}));

    Triple e41 = example_4_1();
    CHECK(char_poly_whitney(e41.deleted) == IntPoly::from_roots({1, 3, 3, 3}));
    CHECK(char_poly_whitney(e41.full) == char_poly(e41.full));

    CHECK_THROWS_WITH_AS(char_poly_whitney(arr_C()), doctest::Contains("OracleTooLarge"),
                         FreearrError);
}

TEST_CASE("integer_root_multiset") {
    RootSplit s = integer_root_multiset(IntPoly::from_roots({1, 3, 3, 4}));
    CHECK(s.splits);
    CHECK(s.roots == std::vector<long>{1, 3, 3, 4});

    IntPoly t2p1({BigInt(1), BigInt(0), BigInt(1)});  // t^2 + 1
    RootSplit ns = integer_root_multiset(t2p1);
    CHECK(!ns.splits);
    CHECK(ns.residual == t2p1);

    RootSplit a = integer_root_multiset(char_poly(arr_A()));
    CHECK(a.splits);
    CHECK(a.roots == std::vector<long>{1, 5, 5, 5, 5, 5, 6});
}

TEST_CASE("divides") {
    IntPoly p = IntPoly::from_roots({1, 3, 3});
    CHECK(divides(p, IntPoly::from_roots({1, 3, 3, 3})));
    CHECK(divides(p, IntPoly::from_roots({1, 3, 3, 4})));
    CHECK(!divides(IntPoly::from_roots({2}), IntPoly::from_roots({1, 1, 1})));
    CHECK(divide_exact(p, IntPoly::from_roots({1, 3, 3, 4})) == IntPoly::from_roots({4}));
}

TEST_CASE("deletion-restriction and product formulas") {
    Arrangement a = example_4_1().full;
    for (const Hyperplane& h : a.hyperplanes) {
        Triple t = triple(a, h);
        CHECK(char_poly(t.full) == char_poly(t.deleted) - char_poly(t.restricted));
    }

    Arrangement a1 = make_arrangement(2, {{1, 0}, {0, 1}, {1, 1}});
    Arrangement a2 = make_arrangement(2, {{1, 0}, {1, -1}});
    CHECK(char_poly(product(a1, a2)) == char_poly(a1) * char_poly(a2));
}
