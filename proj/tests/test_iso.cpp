#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "freearr/catalog.hpp"
#include "freearr/lattice.hpp"
#include "freearr/iso.hpp"
#include "freearr/linalg.hpp"

using namespace freearr;

namespace {

Arrangement apply_matrix(const Arrangement& a, const std::vector<IntVec>& m) {
    // normals transform by alpha -> alpha o M
    std::vector<IntVec> rows;
    for (const auto& h : a.hyperplanes) {
        IntVec out(a.dim, 0);
        for (int j = 0; j < a.dim; ++j)
            for (int i = 0; i < a.dim; ++i) out[j] += h.normal[i] * m[i][j];
        rows.push_back(out);
    }
    return make_arrangement(a.dim, rows);
}

std::vector<IntVec> random_invertible(int l, std::mt19937& rng) {
    std::uniform_int_distribution<int> coef(-3, 3);
    while (true) {
        std::vector<IntVec> m(l, IntVec(l, 0));
        RatMat q(l, std::vector<Rat>(l));
        for (int i = 0; i < l; ++i)
            for (int j = 0; j < l; ++j) {
                m[i][j] = coef(rng);
                q[i][j] = to_rat(m[i][j]);
            }
        if (det_rat(q) != 0) return m;
    }
}

}  // namespace

TEST_CASE("self isomorphism under a random invertible matrix") {
    std::mt19937 rng(20240815);
    for (const Arrangement& a :
         {example_4_1().full, arr_Dpp(), make_arrangement(3, {{1, 0, 0}, {0, 1, 0}, {1, 1, 1}})}) {
        Arrangement b = apply_matrix(a, random_invertible(a.dim, rng));
        CHECK(matroid_isomorphic(a, b).has_value());
        auto lin = linear_isomorphic(a, b);
        REQUIRE(lin.has_value());
        // the returned matrix carries each mapped normal of b onto the
        // corresponding normal of a
        for (size_t i = 0; i < a.size(); ++i) {
            const IntVec& be = b.hyperplanes[lin->map[i]].normal;
            std::vector<Rat> img(a.dim, Rat(0));
            for (int r = 0; r < a.dim; ++r)
                for (int t = 0; t < a.dim; ++t) img[r] += lin->matrix[r][t] * to_rat(be[t]);
            CHECK(canonicalize_rat(img) == a.hyperplanes[i]);
        }
    }
}

TEST_CASE("different rank-2 profiles are not isomorphic") {
    Arrangement boolean3 = make_arrangement(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    Arrangement concurrent = make_arrangement(3, {{1, 0, 0}, {0, 1, 0}, {1, 1, 0}});
    CHECK(!matroid_isomorphic(boolean3, concurrent).has_value());
    CHECK(!linear_isomorphic(boolean3, concurrent).has_value());
}

TEST_CASE("restriction identities") {
    CHECK(linear_isomorphic(restriction(arr_B(), flat_Y()), arr_Dpp()).has_value());
    CHECK(linear_isomorphic(restriction(arr_A(), flat_Z()), arr_C()).has_value());

    // size mismatch short-circuits
    CHECK(!matroid_isomorphic(arr_C(), arr_D()).has_value());
}

TEST_CASE("restriction classes of the big arrangement's deletion") {
    // the exponent-matching restrictions of B fall into exactly two classes,
    // under the lattice notion and under the linear notion alike
    Arrangement b = arr_B();
    RootSplit s = integer_root_multiset(char_poly_cached(b));
    REQUIRE(s.splits);
    std::vector<Arrangement> reps;
    std::vector<Arrangement> lin_reps;
    for (const auto& h : b.hyperplanes) {
        Arrangement res = restriction(b, hyperplane_flat(b, h));
        RootSplit rs = integer_root_multiset(char_poly_cached(res));
        if (!rs.splits) continue;
        std::vector<long> want(s.roots.begin(), s.roots.end());
        want.erase(std::find(want.begin(), want.end(), 5));
        if (rs.roots != want) continue;
        bool seen = false;
        for (const auto& r : reps)
            if (matroid_isomorphic(r, res)) seen = true;
        if (!seen) reps.push_back(res);
        seen = false;
        for (const auto& r : lin_reps)
            if (linear_isomorphic(r, res)) seen = true;
        if (!seen) lin_reps.push_back(res);
    }
    CHECK(reps.size() == 2);
    CHECK(lin_reps.size() == 2);
}
