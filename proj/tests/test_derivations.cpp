#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "freearr/catalog.hpp"
#include "freearr/derivations.hpp"
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

bool space_contains(const DegreeSpace& sp, const Derivation& d, int nvars) {
    // stack the basis plus the candidate and compare ranks
    auto flatten = [&](const Derivation& der) {
        std::vector<Rat> v(static_cast<size_t>(nvars) * sp.mons.size(), Rat(0));
        for (int i = 0; i < nvars; ++i)
            for (const auto& [m, c] : der.coeffs[i].terms())
                v[i * sp.mons.size() + sp.mons.index.at(m)] = c;
        return v;
    };
    RatMat m = sp.basis;
    int base_rank = rref_rat(m);
    m = sp.basis;
    m.push_back(flatten(d));
    return rref_rat(m) == base_rank;
}

}  // namespace

TEST_CASE("derivation_space") {
    Arrangement b3 = boolean_arr(3);
    CHECK(derivation_space(b3, 0).dimension() == 0);
    CHECK(derivation_space(b3, 1).dimension() == 3);

    Arrangement ess = essentialize(example_4_1().full).arrangement;
    CHECK(derivation_space(ess, 0).dimension() == 0);
    DegreeSpace d1 = derivation_space(ess, 1);
    CHECK(d1.dimension() >= 1);
    CHECK(space_contains(d1, euler_derivation(ess.dim), ess.dim));
}

TEST_CASE("free_dim_prediction") {
    CHECK(free_dim_prediction({1, 1}, 2, 1) == 2);
    CHECK(free_dim_prediction({1, 3, 3, 4}, 4, 1) == 1);
    CHECK(free_dim_prediction({1, 3, 3, 4}, 4, 3) == 12);
}

TEST_CASE("is_free") {
    FreenessVerdict phi = is_free(make_arrangement(3, {}));
    CHECK(phi.free);
    CHECK(phi.cert.exponents == std::vector<int>{0, 0, 0});

    Triple e41 = example_4_1();
    CHECK(!is_free(e41.full).free);
    CHECK(!is_free(e41.deleted).free);  // not free despite chi = (t-1)(t-3)^3
    CHECK(!is_free(e41.restricted).free);

    FreenessVerdict d = is_free(arr_D());
    CHECK(d.free);
    CHECK(d.cert.exponents == std::vector<int>{1, 5, 5, 5, 5});

    FreenessVerdict dpp = is_free(arr_Dpp());
    CHECK(dpp.free);
    CHECK(dpp.cert.exponents == std::vector<int>{1, 5, 5, 5});
}

TEST_CASE("verify_freeness_certificate") {
    Arrangement b2 = boolean_arr(2);
    FreenessVerdict v = is_free(b2);
    REQUIRE(v.free);
    CHECK(verify_freeness_certificate(b2, v.cert).ok);

    // perturbing one coefficient must break membership or the determinant
    FreeCertificate bad = v.cert;
    bad.basis[0].coeffs[0].add_term(0, Rat(1));
    CHECK(!verify_freeness_certificate(b2, bad).ok);

    FreenessVerdict d = is_free(arr_D());
    REQUIRE(d.free);
    CHECK(verify_freeness_certificate(arr_D(), d.cert).ok);

    // certificates do not transfer to other arrangements
    CHECK(!verify_freeness_certificate(boolean_arr(2),
                                       is_free(make_arrangement(2, {{1, 0}, {0, 1}, {1, 1}})).cert)
               .ok);
}

TEST_CASE("exponent bookkeeping") {
    for (const Arrangement& a : {arr_C(), arr_D(), arr_Dpp()}) {
        const FreenessVerdict& v = is_free_cached(a);
        REQUIRE(v.free);
        long sum = 0;
        for (int e : v.cert.exponents) sum += e;
        CHECK(sum == static_cast<long>(a.size()));
        RootSplit s = integer_root_multiset(char_poly(a));
        REQUIRE(s.splits);
        std::vector<long> exps(v.cert.exponents.begin(), v.cert.exponents.end());
        std::sort(exps.begin(), exps.end());
        CHECK(exps == s.roots);
    }
}
