#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "freearr/catalog.hpp"
#include "freearr/certs.hpp"
#include "freearr/classes.hpp"

using namespace freearr;

namespace {

std::vector<IntVec> chain_normals(const std::string& name) {
    Arrangement as_arr = parse_arrangement(catalog_text(name));
    std::vector<IntVec> out;
    for (const auto& h : as_arr.hyperplanes) out.push_back(h.normal);
    return out;
}

}  // namespace

TEST_CASE("addition_step") {
    CHECK(addition_step({1, 4, 5, 5, 5, 5, 6}, {1, 5, 5, 5, 5, 6}) ==
          std::vector<long>{1, 5, 5, 5, 5, 5, 6});
    CHECK(addition_step({0, 0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0}) ==
          std::vector<long>{0, 0, 0, 0, 0, 0, 1});
    CHECK(!addition_step({1, 2}, {3}).has_value());
    CHECK_THROWS_WITH_AS(addition_step({1, 2}, {3, 4}), doctest::Contains("InvalidShapes"),
                         FreearrError);
}

TEST_CASE("verify_induction_table on the small catalog table") {
    Arrangement c = arr_C();
    InductionTable t = parse_induction_table(catalog_text("c.table"));
    TableCheck chk = verify_induction_table(c, t);
    CHECK(chk.ok);
    CHECK(t.final_exponents == std::vector<long>{1, 5, 5, 5, 6});
    CHECK(chk.steps.size() == c.size());

    // tampering: swapping two adjacent rows must be caught
    InductionTable bad = t;
    std::swap(bad.steps[4], bad.steps[5]);
    CHECK(!verify_induction_table(c, bad).ok);

    // emit/parse round-trip preserves the table
    InductionTable again = parse_induction_table(emit_induction_table(t));
    CHECK(verify_induction_table(c, again).ok);
}

TEST_CASE("is_inductively_free") {
    Arrangement lines = make_arrangement(2, {{1, 0}, {0, 1}, {1, 1}, {1, -1}});
    ClassVerdict v = is_inductively_free(lines);
    CHECK(v.membership == Membership::Member);
    CHECK(v.exponents == std::vector<long>{1, 3});

    ClassVerdict c = is_inductively_free(arr_C());
    CHECK(c.membership == Membership::Member);
    CHECK(verify_certificate(arr_C(), c.certificate).ok);

    ClassVerdict d = is_inductively_free(arr_D());
    CHECK(d.membership == Membership::NonMember);
    CHECK(replay_refutation(arr_D(), d.trace).ok);
}

TEST_CASE("is_additionally_free and free chains") {
    ChainCheck dc = verify_free_chain(arr_D(), chain_normals("d.chain"));
    CHECK(dc.ok);

    ClassVerdict dpp = is_additionally_free(arr_Dpp());
    CHECK(dpp.membership == Membership::NonMember);
    CHECK(replay_refutation(arr_Dpp(), dpp.trace).ok);

    ClassVerdict small = is_additionally_free(make_arrangement(2, {{1, 0}, {0, 1}, {1, 1}}));
    CHECK(small.membership == Membership::Member);
    CHECK(verify_certificate(make_arrangement(2, {{1, 0}, {0, 1}, {1, 1}}), small.certificate).ok);
}

TEST_CASE("is_divisionally_free") {
    ClassVerdict c = is_divisionally_free(arr_C());
    CHECK(c.membership == Membership::Member);
    CHECK(verify_certificate(arr_C(), c.certificate).ok);

    ClassVerdict d = is_divisionally_free(arr_D());
    CHECK(d.membership == Membership::NonMember);
    CHECK(replay_refutation(arr_D(), d.trace).ok);

    Arrangement lines = make_arrangement(2, {{1, 0}, {0, 1}, {3, 1}});
    CHECK(is_divisionally_free(lines).membership == Membership::Member);
}

TEST_CASE("is_stair_free") {
    CHECK(is_stair_free(make_arrangement(4, {})).membership == Membership::Member);

    ClassVerdict d = is_stair_free(arr_D());
    CHECK(d.membership == Membership::Member);
    CHECK(verify_certificate(arr_D(), d.certificate).ok);

    ClassVerdict dpp = is_stair_free(arr_Dpp());
    CHECK(dpp.membership == Membership::NonMember);
    CHECK(replay_refutation(arr_Dpp(), dpp.trace).ok);

    ClassVerdict b = is_stair_free(arr_B());
    CHECK(b.membership == Membership::Member);
    CHECK(verify_certificate(arr_B(), b.certificate).ok);
}

TEST_CASE("budgets") {
    clear_class_caches();
    ClassVerdict v = classify(arr_D(), "if", 1);
    CHECK(v.membership == Membership::Undecided);
    // an undecided trace must not replay as a refutation
    CHECK(!replay_refutation(arr_D(), v.trace).ok);
    clear_class_caches();
}

TEST_CASE("class containments on decided instances") {
    std::vector<Arrangement> pool = {
        make_arrangement(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {1, 0, 1}}),
        make_arrangement(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}}),
        arr_Dpp(),
    };
    for (const Arrangement& a : pool) {
        Membership ifm = is_inductively_free(a).membership;
        Membership afm = is_additionally_free(a).membership;
        Membership dfm = is_divisionally_free(a).membership;
        Membership sfm = is_stair_free(a).membership;
        if (ifm == Membership::Member) {
            CHECK(afm == Membership::Member);
            CHECK(dfm == Membership::Member);
        }
        if (afm == Membership::Member || dfm == Membership::Member)
            CHECK(sfm == Membership::Member);
        if (sfm == Membership::Member) CHECK(is_free_cached(a).free);
    }
}
