#include "freearr/battery.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>

#include "freearr/catalog.hpp"
#include "freearr/certs.hpp"
#include "freearr/derivations.hpp"
#include "freearr/iso.hpp"
#include "freearr/lattice.hpp"

namespace freearr {

namespace {

// Collects named subchecks; the first failure becomes the claim detail.
struct Recorder {
    bool ok = true;
    bool undecided = false;
    std::string first_fail;
    Json subs = Json::array();

    void check(const std::string& name, bool cond) {
        subs.push_back(Json{{"check", name}, {"ok", cond}});
        if (!cond && ok) {
            ok = false;
            first_fail = name;
        }
    }
    // A decider outcome: an unexpected Undecided downgrades the claim rather
    // than failing it.
    void verdict(const std::string& name, const ClassVerdict& v, Membership want) {
        if (v.membership == Membership::Undecided && want != Membership::Undecided) {
            undecided = true;
            subs.push_back(Json{{"check", name}, {"ok", false}, {"undecided", true}});
            if (first_fail.empty()) first_fail = name + " (budget)";
            return;
        }
        check(name, v.membership == want);
    }
};

std::vector<long> roots_or_empty(const Arrangement& a) {
    RootSplit s = integer_root_multiset(char_poly_cached(a));
    if (!s.splits) return {};
    std::vector<long> r = s.roots;
    std::sort(r.begin(), r.end());
    return r;
}

std::vector<long> cert_exps(const FreenessVerdict& v) {
    std::vector<long> e(v.cert.exponents.begin(), v.cert.exponents.end());
    std::sort(e.begin(), e.end());
    return e;
}

std::vector<IntVec> chain_from_text(const std::string& text) {
    Arrangement parsed = parse_arrangement(text, true);
    std::vector<IntVec> chain;
    for (const auto& h : parsed.hyperplanes) chain.push_back(h.normal);
    return chain;
}

// Walks a refutation trace alongside the arrangements it refers to and
// reports whether some nested restriction is matroid-isomorphic to `target`.
bool trace_reaches(const Arrangement& a, const Json& node, const Arrangement& target) {
    if (!node.contains("candidates")) return false;
    for (const auto& cand : node["candidates"]) {
        IntVec v;
        for (const auto& c : cand.at("normal")) v.push_back(c.get<Int>());
        int i = a.index_of(canonicalize(v));
        if (i < 0) continue;
        auto probe = [&](const Json& rec) -> bool {
            if (rec.contains("restriction")) {
                Arrangement res = restriction(a, hyperplane_flat(a, a.hyperplanes[i]));
                if (rank(res) == rank(target) && matroid_isomorphic(res, target)) return true;
                if (trace_reaches(res, rec["restriction"], target)) return true;
            }
            if (rec.contains("deletion")) {
                Arrangement del = a;
                del.hyperplanes.erase(del.hyperplanes.begin() + i);
                if (trace_reaches(del, rec["deletion"], target)) return true;
            }
            return false;
        };
        if (cand.contains("addition") && probe(cand["addition"])) return true;
        if (cand.contains("division") && probe(cand["division"])) return true;
        if (probe(cand)) return true;
    }
    return false;
}

Arrangement random_arrangement(std::mt19937& g, int dim, int max_n) {
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::uniform_int_distribution<int> nd(1, max_n);
    int n = nd(g);
    std::vector<IntVec> rows;
    for (int i = 0; i < n; ++i) {
        IntVec v(dim);
        bool nz = false;
        for (auto& c : v) {
            c = coeff(g);
            nz |= c != 0;
        }
        if (nz) rows.push_back(std::move(v));
    }
    return make_arrangement(dim, rows, false);
}

// ------------------------------------------------------------- the claims

void claim_table_replay(Recorder& r, const Arrangement& a, const std::string& table_text,
                        const std::vector<long>& want_final, long long budget) {
    InductionTable t = parse_induction_table(catalog_text(table_text));
    TableCheck ck = verify_induction_table(a, t, budget);
    r.check("every step replays", ck.ok);
    if (!ck.ok && !ck.steps.empty()) r.first_fail += ": " + ck.steps.back().reason;
    r.check("final exponents", ck.final_exponents == want_final);
    r.subs.back()["final"] = ck.final_exponents;
}

void claim_free_and_chain(Recorder& r, const Arrangement& a, const std::vector<long>& want_exps,
                          const std::string& chain_text) {
    const FreenessVerdict& fv = is_free_cached(a);
    r.check("free", fv.free);
    if (fv.free) {
        r.check("exponents", cert_exps(fv) == want_exps);
        CertCheck cc = verify_freeness_certificate(a, fv.cert);
        r.check("certificate replays", cc.ok);
    }
    ChainCheck ck = verify_free_chain(a, chain_from_text(catalog_text(chain_text)));
    r.check("build order has all prefixes free", ck.ok);
}

void claim_d_not_if(Recorder& r, long long budget) {
    Arrangement d = arr_D(), dpp = arr_Dpp();
    ClassVerdict v = is_inductively_free(d, budget);
    r.verdict("not inductively free", v, Membership::NonMember);
    if (v.membership != Membership::NonMember) return;
    r.check("refutation replays", replay_refutation(d, v.trace).ok);
    int survivors = 0, iso_to_dpp = 0;
    bool ker_x4_found = false;
    for (size_t i = 0; i < d.size(); ++i) {
        Arrangement res = restriction(d, hyperplane_flat(d, d.hyperplanes[i]));
        if (roots_or_empty(res) != std::vector<long>{1, 5, 5, 5}) continue;
        ++survivors;
        if (linear_isomorphic(res, dpp)) ++iso_to_dpp;
        if (d.hyperplanes[i] == canonicalize({0, 0, 0, 1, 0})) ker_x4_found = true;
    }
    r.check("exponent-matching restrictions exist", survivors >= 1);
    r.check("all exponent-matching restrictions are the same class", survivors == iso_to_dpp);
    r.check("the class is the ker-x4 restriction", ker_x4_found);
    r.subs.back()["survivors"] = survivors;
}

void claim_d_not_df(Recorder& r, long long budget) {
    Arrangement d = arr_D(), dpp = arr_Dpp();
    ClassVerdict v = is_divisionally_free(d, budget);
    r.verdict("not divisionally free", v, Membership::NonMember);
    if (v.membership != Membership::NonMember) return;
    r.check("refutation replays", replay_refutation(d, v.trace).ok);
    bool none = true;
    for (size_t i = 0; i < dpp.size(); ++i) {
        Arrangement res = restriction(dpp, hyperplane_flat(dpp, dpp.hyperplanes[i]));
        if (roots_or_empty(res) == std::vector<long>{1, 5, 5}) none = false;
    }
    r.check("no restriction of D'' has exponents {1,5,5}", none);
}

void claim_b_not_if_df(Recorder& r, long long budget) {
    Arrangement b = arr_B(), dpp = arr_Dpp();
    ClassVerdict vif = is_inductively_free(b, budget);
    r.verdict("not inductively free", vif, Membership::NonMember);
    ClassVerdict vdf = is_divisionally_free(b, budget);
    r.verdict("not divisionally free", vdf, Membership::NonMember);
    if (vif.membership == Membership::NonMember) {
        r.check("inductive refutation replays", replay_refutation(b, vif.trace).ok);
        r.check("inductive refutation passes through D''", trace_reaches(b, vif.trace, dpp));
    }
    if (vdf.membership == Membership::NonMember) {
        r.check("divisional refutation replays", replay_refutation(b, vdf.trace).ok);
        r.check("divisional refutation passes through D''", trace_reaches(b, vdf.trace, dpp));
    }
}

void claim_dpp_not_af(Recorder& r, long long budget) {
    Arrangement dpp = arr_Dpp();
    const FreenessVerdict& fv = is_free_cached(dpp);
    r.check("free", fv.free);
    r.check("exponents {1,5,5,5}", fv.free && cert_exps(fv) == std::vector<long>{1, 5, 5, 5});
    ClassVerdict v = is_additionally_free(dpp, budget);
    r.verdict("not additively free", v, Membership::NonMember);
    bool none = true;
    for (size_t i = 0; i < dpp.size(); ++i) {
        Arrangement del = dpp;
        del.hyperplanes.erase(del.hyperplanes.begin() + i);
        const FreenessVerdict& dv = is_free_cached(del);
        if (dv.free && cert_exps(dv) == std::vector<long>{1, 4, 5, 5}) none = false;
    }
    r.check("no deletion is free with exponents {1,4,5,5}", none);
}

void claim_cross_identities(Recorder& r) {
    Arrangement a = arr_A(), b = arr_B(), c = arr_C(), d = arr_D(), dpp = arr_Dpp();
    r.check("C is linearly isomorphic to A restricted to Z",
            linear_isomorphic(c, restriction(a, flat_Z())).has_value());
    r.check("D is linearly isomorphic to B restricted to X",
            linear_isomorphic(d, restriction(b, flat_X())).has_value());
    r.check("B restricted to Y is linearly isomorphic to D''",
            linear_isomorphic(restriction(b, flat_Y()), dpp).has_value());
    Arrangement loc = localization(b, flat_Y());
    Arrangement want = make_arrangement(
        7, {{1, 0, 0, 0, 0, 0, 0}, {1, 1, 2, 2, 2, 1, 0}, {0, 0, 0, 0, 0, 1, 0}}, true);
    r.check("localization of B at Y is the expected three hyperplanes",
            canonical_key(loc) == canonical_key(want));
}

void claim_ex41(Recorder& r) {
    Triple t = example_4_1();
    r.check("11 hyperplanes", t.full.size() == 11);
    r.check("chi of the triple's arrangement",
            char_poly_cached(t.full) == IntPoly::from_roots({1, 3, 3, 4}));
    r.check("chi of the deletion", char_poly_cached(t.deleted) == IntPoly::from_roots({1, 3, 3, 3}));
    r.check("chi of the restriction", char_poly_cached(t.restricted) == IntPoly::from_roots({1, 3, 3}));
    r.check("arrangement is not free", !is_free_cached(t.full).free);
    r.check("deletion is not free", !is_free_cached(t.deleted).free);
    r.check("restriction is not free", !is_free_cached(t.restricted).free);
}

void claim_ex42(Recorder& r) {
    Arrangement base = example_4_1().restricted;
    const IntPoly chi_base = char_poly_cached(base);
    for (int m = 0; m <= 3; ++m) {
        std::string tag = " (m=" + std::to_string(m) + ")";
        Triple t = example_4_2(base, m);
        r.check("chi of the extension" + tag,
                char_poly_cached(t.full) == chi_base * IntPoly::from_roots({m + 1}));
        r.check("chi of the deletion" + tag,
                char_poly_cached(t.deleted) == chi_base * IntPoly::from_roots({m}));
        r.check("chi of the restriction" + tag, char_poly_cached(t.restricted) == chi_base);
        r.check("triple members are not free" + tag,
                !is_free_cached(t.full).free && !is_free_cached(t.deleted).free &&
                    !is_free_cached(t.restricted).free);
        std::vector<IntVec> embedded;
        for (const auto& h : base.hyperplanes) {
            IntVec v = h.normal;
            v.push_back(0);
            embedded.push_back(std::move(v));
        }
        Arrangement loc = localization(t.full, flat_from_normals(t.full, embedded));
        r.check("localization at the embedded center matches the base" + tag,
                loc.size() == base.size() && linear_isomorphic(loc, base).has_value());
    }
}

void claim_property_suites(Recorder& r, long long budget) {
    {  // deletion-restriction recursion
        std::mt19937 g(101);
        bool all = true;
        for (int k = 0; k < 40; ++k) {
            Arrangement a = random_arrangement(g, 2 + k % 3, 8);
            if (a.size() == 0) continue;
            int i = std::uniform_int_distribution<int>(0, static_cast<int>(a.size()) - 1)(g);
            Triple t = triple(a, a.hyperplanes[i]);
            all = all && char_poly(t.full) == char_poly(t.deleted) - char_poly(t.restricted);
        }
        r.check("deletion-restriction recursion", all);
    }
    {  // product formulas
        std::mt19937 g(202);
        bool chi_ok = true, exp_ok = true;
        for (int k = 0; k < 20; ++k) {
            Arrangement a1 = random_arrangement(g, 1 + k % 3, 5);
            Arrangement a2 = random_arrangement(g, 1 + (k / 2) % 3, 5);
            Arrangement p = product(a1, a2);
            chi_ok = chi_ok && char_poly(p) == char_poly(a1) * char_poly(a2);
            const FreenessVerdict &f1 = is_free_cached(a1), &f2 = is_free_cached(a2);
            if (f1.free && f2.free) {
                const FreenessVerdict& fp = is_free_cached(p);
                std::vector<long> want = cert_exps(f1);
                for (long e : cert_exps(f2)) want.push_back(e);
                std::sort(want.begin(), want.end());
                exp_ok = exp_ok && fp.free && cert_exps(fp) == want;
            }
        }
        r.check("product chi formula", chi_ok);
        r.check("product exponent formula", exp_ok);
    }
    {  // Whitney oracle agreement
        std::mt19937 g(303);
        bool all = true;
        for (int k = 0; k < 25; ++k) {
            Arrangement a = random_arrangement(g, 2 + k % 3, 8);
            all = all && char_poly(a) == char_poly_whitney(a);
        }
        r.check("whitney oracle agreement", all);
    }
    {  // certificate round-trips
        std::mt19937 g(404);
        int found = 0;
        bool all = true;
        for (int k = 0; k < 100 && found < 8; ++k) {
            Arrangement a = random_arrangement(g, 2 + k % 3, 7);
            const FreenessVerdict& fv = is_free_cached(a);
            if (!fv.free) continue;
            ++found;
            FreeCertificate back = free_certificate_from_json(free_certificate_json(fv.cert));
            all = all && verify_freeness_certificate(a, back).ok;
        }
        r.check("certificate round-trips", all && found >= 8);
    }
    {  // two-of-three coherence
        std::mt19937 g(505);
        bool all = true;
        for (int k = 0; k < 30; ++k) {
            Arrangement a = random_arrangement(g, 2 + k % 3, 8);
            if (a.size() == 0) continue;
            int i = std::uniform_int_distribution<int>(0, static_cast<int>(a.size()) - 1)(g);
            Triple t = triple(a, a.hyperplanes[i]);
            const FreenessVerdict& fa = is_free_cached(t.full);
            const FreenessVerdict& fd = is_free_cached(t.deleted);
            const FreenessVerdict& fr = is_free_cached(t.restricted);
            if (fa.free && fd.free) {
                // Strong form: the third is free and the exponents interlock.
                all = all && fr.free &&
                      addition_step(cert_exps(fd), cert_exps(fr)) == std::optional(cert_exps(fa));
            }
            if (fd.free && fr.free) {
                auto step = addition_step(cert_exps(fd), cert_exps(fr));
                if (step) all = all && fa.free && cert_exps(fa) == *step;
            }
            if (fa.free && fr.free) {
                std::vector<long> ea = cert_exps(fa), er = cert_exps(fr), rest = ea;
                bool contained = true;
                for (long e : er) {
                    auto it = std::find(rest.begin(), rest.end(), e);
                    if (it == rest.end()) {
                        contained = false;
                        break;
                    }
                    rest.erase(it);
                }
                if (contained && rest.size() == 1) {
                    std::vector<long> want = er;
                    want.push_back(rest[0] - 1);
                    std::sort(want.begin(), want.end());
                    all = all && fd.free && cert_exps(fd) == want;
                }
            }
        }
        r.check("two-of-three coherence", all);
    }
    {  // AF / SF product closure
        std::mt19937 g(606);
        bool af_ok = true, sf_ok = true, undecided = false;
        for (int k = 0; k < 8; ++k) {
            Arrangement a1 = random_arrangement(g, 1 + k % 3, 5);
            Arrangement a2 = random_arrangement(g, 1 + (k / 2) % 3, 5);
            Arrangement p = product(a1, a2);
            ClassVerdict v1 = is_additionally_free(a1, budget), v2 = is_additionally_free(a2, budget);
            if (v1.membership == Membership::Undecided || v2.membership == Membership::Undecided)
                undecided = true;
            else if (v1.membership == Membership::Member && v2.membership == Membership::Member) {
                ClassVerdict vp = is_additionally_free(p, budget);
                if (vp.membership == Membership::Undecided) undecided = true;
                af_ok = af_ok && vp.membership != Membership::NonMember;
            }
            ClassVerdict s1 = is_stair_free(a1, budget), s2 = is_stair_free(a2, budget);
            if (s1.membership == Membership::Undecided || s2.membership == Membership::Undecided)
                undecided = true;
            else if (s1.membership == Membership::Member && s2.membership == Membership::Member) {
                ClassVerdict sp = is_stair_free(p, budget);
                if (sp.membership == Membership::Undecided) undecided = true;
                sf_ok = sf_ok && sp.membership != Membership::NonMember;
            }
        }
        r.undecided = r.undecided || undecided;
        r.check("product closure for the additive class", af_ok);
        r.check("product closure for the stair class", sf_ok);
    }
    {  // localization closure of the additive class on D
        Arrangement d = arr_D();
        Lattice lat = build_lattice(d);
        bool all = true, undecided = false;
        for (size_t f = 0; f < lat.flats.size() && all; ++f) {
            Arrangement loc = localization(d, flat_of(d, lat, f));
            ClassVerdict v = is_additionally_free(loc, budget);
            if (v.membership == Membership::Undecided) undecided = true;
            all = all && v.membership != Membership::NonMember;
        }
        r.undecided = r.undecided || undecided;
        r.check("localization closure of the additive class on D", all);
        r.subs.back()["flats"] = lat.flats.size();
    }
}

struct ClaimDef {
    std::string id;
    std::string anchor;
    std::function<void(Recorder&, long long)> run;
};

std::vector<ClaimDef> claim_defs() {
    return {
        {"table1-replay", "induction table replay for the rank-7 arrangement A",
         [](Recorder& r, long long b) {
             Arrangement a = arr_A();
             claim_table_replay(r, a, "a.table", {1, 5, 5, 5, 5, 5, 6}, b);
             r.check("32 hyperplanes", a.size() == 32);
         }},
        {"table3-replay", "induction table replay for the rank-5 arrangement C",
         [](Recorder& r, long long b) {
             Arrangement c = arr_C();
             claim_table_replay(r, c, "c.table", {1, 5, 5, 5, 6}, b);
             r.check("22 hyperplanes", c.size() == 22);
         }},
        {"b-free-af", "B is free with exponents {1,5,5,5,5,5,5}; shipped build order is all-prefixes-free",
         [](Recorder& r, long long) {
             claim_free_and_chain(r, arr_B(), {1, 5, 5, 5, 5, 5, 5}, "b.chain");
         }},
        {"d-free-af", "D is free with exponents {1,5,5,5,5}; shipped build order is all-prefixes-free",
         [](Recorder& r, long long) {
             claim_free_and_chain(r, arr_D(), {1, 5, 5, 5, 5}, "d.chain");
         }},
        {"d-not-if", "D is not inductively free; its only exponent-matching restriction class is D''",
         [](Recorder& r, long long b) { claim_d_not_if(r, b); }},
        {"d-not-df", "D is not divisionally free; no restriction of D'' has exponents {1,5,5}",
         [](Recorder& r, long long b) { claim_d_not_df(r, b); }},
        {"b-not-if-df", "B is neither inductively nor divisionally free; refutations pass through D''",
         [](Recorder& r, long long b) { claim_b_not_if_df(r, b); }},
        {"dpp-not-af", "D'' is free with exponents {1,5,5,5} but no deletion order keeps prefixes free",
         [](Recorder& r, long long b) { claim_dpp_not_af(r, b); }},
        {"cross-identities", "C, D and D'' arise as restrictions of A and B; localization of B at Y",
         [](Recorder& r, long long) { claim_cross_identities(r); }},
        {"ex4.1", "non-free triple whose characteristic polynomials all factor over Z",
         [](Recorder& r, long long) { claim_ex41(r); }},
        {"ex4.2", "one-parameter family of non-free triples with factoring characteristic polynomials",
         [](Recorder& r, long long) { claim_ex42(r); }},
        {"property-suites", "randomized identity and closure suites with fixed seeds",
         [](Recorder& r, long long b) { claim_property_suites(r, b); }},
    };
}

}  // namespace

std::vector<std::string> battery_claims() {
    std::vector<std::string> ids;
    for (const auto& c : claim_defs()) ids.push_back(c.id);
    return ids;
}

std::vector<ClaimReport> verify_paper(const BatteryConfig& config) {
    long long budget = config.budget < 0 ? 0 : std::max<long long>(1, config.budget);
    std::vector<ClaimReport> reports;
    for (const auto& def : claim_defs()) {
        if (!config.only.empty() &&
            std::find(config.only.begin(), config.only.end(), def.id) == config.only.end())
            continue;
        ClaimReport rep;
        rep.id = def.id;
        rep.anchor = def.anchor;
        Recorder rec;
        auto t0 = std::chrono::steady_clock::now();
        try {
            def.run(rec, budget);
        } catch (const std::exception& e) {
            rec.ok = false;
            rec.first_fail = std::string("exception: ") + e.what();
        }
        rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        rep.verdict = !rec.ok ? "fail" : rec.undecided ? "undecided" : "pass";
        if (!rec.ok || rec.undecided) rep.detail = rec.first_fail;
        rep.artifact = Json{{"subchecks", rec.subs}};
        reports.push_back(std::move(rep));
    }
    return reports;
}

int battery_exit_code(const std::vector<ClaimReport>& reports) {
    bool any_fail = false, any_undecided = false;
    for (const auto& r : reports) {
        any_fail = any_fail || r.verdict == "fail";
        any_undecided = any_undecided || r.verdict == "undecided";
    }
    return any_fail ? 2 : any_undecided ? 3 : 0;
}

}  // namespace freearr
