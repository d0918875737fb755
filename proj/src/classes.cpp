#include "freearr/classes.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <sstream>
#include <unordered_map>

#include "freearr/derivations.hpp"
#include "freearr/lattice.hpp"

namespace freearr {

std::string to_string(Membership m) {
    switch (m) {
        case Membership::Member: return "member";
        case Membership::NonMember: return "nonmember";
        default: return "undecided";
    }
}

std::optional<std::vector<long>> addition_step(const std::vector<long>& exp_deleted,
                                               const std::vector<long>& exp_restricted) {
    if (exp_deleted.size() != exp_restricted.size() + 1)
        throw invalid_shapes("addition step needs exponent lists of sizes l and l-1");
    std::vector<long> rest = exp_deleted;
    long leftover = 0;
    bool found_all = true;
    for (long e : exp_restricted) {
        auto it = std::find(rest.begin(), rest.end(), e);
        if (it == rest.end()) {
            found_all = false;
            break;
        }
        rest.erase(it);
    }
    if (!found_all) return std::nullopt;
    leftover = rest[0];
    std::vector<long> result = exp_restricted;
    result.push_back(leftover + 1);
    std::sort(result.begin(), result.end());
    return result;
}

namespace {

// Chi root multiset of the full (non-essentialized) arrangement, length dim,
// zeros of the center included; nullopt when chi does not split over Z.
std::optional<std::vector<long>> roots_of(const Arrangement& a) {
    RootSplit s = integer_root_multiset(char_poly_cached(a));
    if (!s.splits) return std::nullopt;
    std::vector<long> r = s.roots;
    std::sort(r.begin(), r.end());
    return r;
}

Json normal_json(const IntVec& v) {
    Json j = Json::array();
    for (Int c : v) j.push_back(c);
    return j;
}

Json roots_json(const std::vector<long>& r) {
    Json j = Json::array();
    for (long e : r) j.push_back(e);
    return j;
}

std::vector<long> parse_long_list(const Json& j) {
    std::vector<long> r;
    for (const auto& x : j) r.push_back(x.get<long>());
    return r;
}

IntVec parse_normal_json(const Json& j) {
    IntVec v;
    for (const auto& x : j) v.push_back(x.get<Int>());
    return v;
}

// Exponent relation of one deletion: the deleted exponents equal the full
// ones with a single entry decremented.
bool one_step_down(const std::vector<long>& full, const std::vector<long>& deleted) {
    if (full.size() != deleted.size()) return false;
    std::vector<long> f = full, d = deleted;
    std::sort(f.begin(), f.end());
    std::sort(d.begin(), d.end());
    int diffs = 0;
    // Compare as multisets: removing the decremented pair must equalize them.
    std::vector<long> dr = d;
    for (size_t i = 0; i < f.size(); ++i) {
        auto it = std::find(dr.begin(), dr.end(), f[i]);
        if (it != dr.end()) {
            dr.erase(it);
        } else {
            ++diffs;
            auto down = std::find(dr.begin(), dr.end(), f[i] - 1);
            if (down == dr.end()) return false;
            dr.erase(down);
        }
    }
    return diffs == 1 && dr.empty();
}

struct Ctx {
    long long remaining;
};

struct Memo {
    std::unordered_map<std::string, ClassVerdict> if_memo, af_memo, df_memo, sf_memo;
};
Memo& memo() {
    static Memo m;
    return m;
}

ClassVerdict budget_verdict() {
    ClassVerdict v;
    v.membership = Membership::Undecided;
    v.trace = Json{{"reason", "budget"}};
    return v;
}

Arrangement with_hyperplane_removed(const Arrangement& a, int i) {
    Arrangement d = a;
    d.hyperplanes.erase(d.hyperplanes.begin() + i);
    return d;
}

Arrangement restrict_to(const Arrangement& a, int i) {
    return restriction(a, hyperplane_flat(a, a.hyperplanes[i]));
}

// ---------------------------------------------------------------- inductive

ClassVerdict if_node(const Arrangement& a, Ctx& ctx) {
    if (--ctx.remaining < 0) return budget_verdict();
    int n = static_cast<int>(a.size());
    auto base_roots = roots_of(a);
    if (n == 0 || rank(a) <= 2) {
        ClassVerdict v;
        v.membership = Membership::Member;
        v.exponents = *base_roots;  // rank <= 2 chi always splits
        Json normals = Json::array();
        for (const auto& h : a.hyperplanes) normals.push_back(normal_json(h.normal));
        v.certificate = Json{{"kind", "inductive-chain"},
                             {"dim", a.dim},
                             {"normals", normals},
                             {"exponents", roots_json(v.exponents)}};
        return v;
    }
    std::string key = canonical_key(a);
    if (auto it = memo().if_memo.find(key); it != memo().if_memo.end()) return it->second;

    ClassVerdict v;
    Json node{{"class", "if"}, {"dim", a.dim}, {"n", n}};
    if (!base_roots) {
        v.membership = Membership::NonMember;
        node["reason"] = "chi-not-splitting";
        v.trace = node;
        memo().if_memo.emplace(key, v);
        return v;
    }
    v.exponents = *base_roots;
    node["chi_roots"] = roots_json(v.exponents);
    bool saw_undecided = false;
    Json cands = Json::array();
    for (int i = 0; i < n; ++i) {
        Json cand{{"normal", normal_json(a.hyperplanes[i].normal)}};
        Arrangement res = restrict_to(a, i);
        auto rr = roots_of(res);
        Arrangement del = with_hyperplane_removed(a, i);
        // The deletion chi is the expensive half; only consult it when the
        // restriction multiset already fits with a single leftover exponent.
        bool pattern = false;
        if (rr) {
            std::vector<long> rest = *base_roots;
            bool contained = true;
            for (long e : *rr) {
                auto it = std::find(rest.begin(), rest.end(), e);
                if (it == rest.end()) {
                    contained = false;
                    break;
                }
                rest.erase(it);
            }
            if (contained && rest.size() == 1) {
                std::vector<long> want_del = *rr;
                want_del.push_back(rest[0] - 1);
                std::sort(want_del.begin(), want_del.end());
                auto dr = roots_of(del);
                pattern = dr && *dr == want_del;
            }
        }
        if (!pattern) {
            cand["fail"] = "pattern";
            cands.push_back(std::move(cand));
            continue;
        }
        ClassVerdict vr = if_node(res, ctx);
        if (vr.membership == Membership::Undecided) {
            saw_undecided = true;
            cand["fail"] = "undecided";
            cands.push_back(std::move(cand));
            continue;
        }
        if (vr.membership == Membership::NonMember) {
            cand["fail"] = "restriction-refuted";
            cand["restriction"] = vr.trace;
            cands.push_back(std::move(cand));
            continue;
        }
        ClassVerdict vd = if_node(del, ctx);
        if (vd.membership == Membership::Undecided) {
            saw_undecided = true;
            cand["fail"] = "undecided";
            cands.push_back(std::move(cand));
            continue;
        }
        if (vd.membership == Membership::NonMember) {
            cand["fail"] = "deletion-refuted";
            cand["deletion"] = vd.trace;
            cands.push_back(std::move(cand));
            continue;
        }
        Json normals = vd.certificate["normals"];
        normals.push_back(normal_json(a.hyperplanes[i].normal));
        v.membership = Membership::Member;
        v.certificate = Json{{"kind", "inductive-chain"},
                             {"dim", a.dim},
                             {"normals", normals},
                             {"exponents", roots_json(v.exponents)}};
        memo().if_memo.emplace(key, v);
        return v;
    }
    node["candidates"] = std::move(cands);
    if (saw_undecided) {
        v.membership = Membership::Undecided;
        node["reason"] = "budget";
        v.trace = node;
        return v;
    }
    v.membership = Membership::NonMember;
    node["reason"] = "exhausted";
    v.trace = node;
    memo().if_memo.emplace(key, v);
    return v;
}

// ----------------------------------------------------------------- additive

ClassVerdict af_node(const Arrangement& a, Ctx& ctx) {
    if (--ctx.remaining < 0) return budget_verdict();
    int n = static_cast<int>(a.size());
    if (n == 0) {
        ClassVerdict v;
        v.membership = Membership::Member;
        v.exponents.assign(a.dim, 0);
        v.certificate = Json{{"kind", "free-chain"}, {"dim", a.dim}, {"normals", Json::array()}};
        return v;
    }
    std::string key = canonical_key(a);
    if (auto it = memo().af_memo.find(key); it != memo().af_memo.end()) return it->second;

    ClassVerdict v;
    Json node{{"class", "af"}, {"dim", a.dim}, {"n", n}};
    const FreenessVerdict& fv = is_free_cached(a);
    if (!fv.free) {
        v.membership = Membership::NonMember;
        node["reason"] = "not-free";
        v.trace = node;
        memo().af_memo.emplace(key, v);
        return v;
    }
    v.exponents = *roots_of(a);
    node["chi_roots"] = roots_json(v.exponents);

    // Visit deletions whose chi already matches the one-step exponent drop
    // first; the rest still get a full freeness check before refutation.
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::vector<char> pattern_ok(n, 0);
    for (int i = 0; i < n; ++i) {
        auto dr = roots_of(with_hyperplane_removed(a, i));
        pattern_ok[i] = dr && one_step_down(v.exponents, *dr);
    }
    std::stable_sort(order.begin(), order.end(),
                     [&](int x, int y) { return pattern_ok[x] > pattern_ok[y]; });

    bool saw_undecided = false;
    std::map<int, Json> cand_by_index;
    for (int i : order) {
        Json cand{{"normal", normal_json(a.hyperplanes[i].normal)}};
        Arrangement del = with_hyperplane_removed(a, i);
        const FreenessVerdict& dfv = is_free_cached(del);
        if (!dfv.free) {
            cand["fail"] = "deletion-not-free";
            cand_by_index[i] = std::move(cand);
            continue;
        }
        ClassVerdict vd = af_node(del, ctx);
        if (vd.membership == Membership::Undecided) {
            saw_undecided = true;
            cand["fail"] = "undecided";
            cand_by_index[i] = std::move(cand);
            continue;
        }
        if (vd.membership == Membership::NonMember) {
            cand["fail"] = "deletion-refuted";
            cand["deletion"] = vd.trace;
            cand_by_index[i] = std::move(cand);
            continue;
        }
        Json normals = vd.certificate["normals"];
        normals.push_back(normal_json(a.hyperplanes[i].normal));
        v.membership = Membership::Member;
        v.certificate = Json{{"kind", "free-chain"}, {"dim", a.dim}, {"normals", normals}};
        memo().af_memo.emplace(key, v);
        return v;
    }
    Json cands = Json::array();
    for (auto& [i, c] : cand_by_index) cands.push_back(std::move(c));
    node["candidates"] = std::move(cands);
    if (saw_undecided) {
        v.membership = Membership::Undecided;
        node["reason"] = "budget";
        v.trace = node;
        return v;
    }
    v.membership = Membership::NonMember;
    node["reason"] = "exhausted";
    v.trace = node;
    memo().af_memo.emplace(key, v);
    return v;
}

// --------------------------------------------------------------- divisional

ClassVerdict df_node(const Arrangement& a, Ctx& ctx) {
    if (--ctx.remaining < 0) return budget_verdict();
    int n = static_cast<int>(a.size());
    if (rank(a) <= 2) {
        ClassVerdict v;
        v.membership = Membership::Member;
        v.exponents = *roots_of(a);
        v.certificate = Json{{"kind", "divisional-flag"}, {"dim", a.dim}, {"normals", Json::array()}};
        return v;
    }
    std::string key = canonical_key(a);
    if (auto it = memo().df_memo.find(key); it != memo().df_memo.end()) return it->second;

    ClassVerdict v;
    Json node{{"class", "df"}, {"dim", a.dim}, {"n", n}};
    if (auto r = roots_of(a)) {
        v.exponents = *r;
        node["chi_roots"] = roots_json(*r);
    }
    bool saw_undecided = false;
    Json cands = Json::array();
    const IntPoly& chi = char_poly_cached(a);
    for (int i = 0; i < n; ++i) {
        Json cand{{"normal", normal_json(a.hyperplanes[i].normal)}};
        Arrangement res = restrict_to(a, i);
        if (!divides(char_poly_cached(res), chi)) {
            cand["fail"] = "chi-not-dividing";
            cands.push_back(std::move(cand));
            continue;
        }
        ClassVerdict vr = df_node(res, ctx);
        if (vr.membership == Membership::Undecided) {
            saw_undecided = true;
            cand["fail"] = "undecided";
            cands.push_back(std::move(cand));
            continue;
        }
        if (vr.membership == Membership::NonMember) {
            cand["fail"] = "restriction-refuted";
            cand["restriction"] = vr.trace;
            cands.push_back(std::move(cand));
            continue;
        }
        Json normals = Json::array();
        normals.push_back(normal_json(a.hyperplanes[i].normal));
        for (const auto& x : vr.certificate["normals"]) normals.push_back(x);
        v.membership = Membership::Member;
        v.certificate = Json{{"kind", "divisional-flag"}, {"dim", a.dim}, {"normals", normals}};
        memo().df_memo.emplace(key, v);
        return v;
    }
    node["candidates"] = std::move(cands);
    if (saw_undecided) {
        v.membership = Membership::Undecided;
        node["reason"] = "budget";
        v.trace = node;
        return v;
    }
    v.membership = Membership::NonMember;
    node["reason"] = "exhausted";
    v.trace = node;
    memo().df_memo.emplace(key, v);
    return v;
}

// -------------------------------------------------------------------- stair

ClassVerdict sf_node(const Arrangement& a, Ctx& ctx) {
    if (--ctx.remaining < 0) return budget_verdict();
    int n = static_cast<int>(a.size());
    if (n == 0) {
        ClassVerdict v;
        v.membership = Membership::Member;
        v.exponents.assign(a.dim, 0);
        v.certificate = Json{{"kind", "stair-steps"}, {"dim", a.dim}, {"steps", Json::array()}};
        return v;
    }
    std::string key = canonical_key(a);
    if (auto it = memo().sf_memo.find(key); it != memo().sf_memo.end()) return it->second;

    ClassVerdict v;
    Json node{{"class", "sf"}, {"dim", a.dim}, {"n", n}};
    auto base_roots = roots_of(a);
    if (!base_roots) {
        v.membership = Membership::NonMember;
        node["reason"] = "chi-not-splitting";
        v.trace = node;
        memo().sf_memo.emplace(key, v);
        return v;
    }
    v.exponents = *base_roots;
    node["chi_roots"] = roots_json(v.exponents);
    bool saw_undecided = false;
    Json cands = Json::array();
    const IntPoly& chi = char_poly_cached(a);
    for (int i = 0; i < n; ++i) {
        Json cand{{"normal", normal_json(a.hyperplanes[i].normal)}};
        Arrangement res = restrict_to(a, i);
        Arrangement del = with_hyperplane_removed(a, i);
        Json add_rec, div_rec;
        bool done = false;

        // Addition branch: exponents fit, the restriction is free, and the
        // deletion is recursively a member.
        auto rr = roots_of(res);
        auto dr = roots_of(del);
        std::optional<std::vector<long>> step;
        if (rr && dr) {
            step = addition_step(*dr, *rr);
            if (step && *step != *base_roots) step.reset();
        }
        if (!step) {
            add_rec["fail"] = "pattern";
        } else if (!is_free_cached(res).free) {
            add_rec["fail"] = "restriction-not-free";
        } else {
            ClassVerdict vd = sf_node(del, ctx);
            if (vd.membership == Membership::Member) {
                Json steps = Json::array();
                steps.push_back(Json{{"op", "add"}, {"normal", normal_json(a.hyperplanes[i].normal)}});
                for (const auto& s : vd.certificate["steps"]) steps.push_back(s);
                v.membership = Membership::Member;
                v.certificate = Json{{"kind", "stair-steps"}, {"dim", a.dim}, {"steps", steps}};
                done = true;
            } else if (vd.membership == Membership::Undecided) {
                saw_undecided = true;
                add_rec["fail"] = "undecided";
            } else {
                add_rec["fail"] = "deletion-refuted";
                add_rec["deletion"] = vd.trace;
            }
        }
        if (done) {
            memo().sf_memo.emplace(key, v);
            return v;
        }

        // Division branch: chi of the restriction divides and the
        // restriction is recursively a member.
        if (!divides(char_poly_cached(res), chi)) {
            div_rec["fail"] = "chi-not-dividing";
        } else {
            ClassVerdict vr = sf_node(res, ctx);
            if (vr.membership == Membership::Member) {
                Json steps = Json::array();
                steps.push_back(
                    Json{{"op", "divide"}, {"normal", normal_json(a.hyperplanes[i].normal)}});
                for (const auto& s : vr.certificate["steps"]) steps.push_back(s);
                v.membership = Membership::Member;
                v.certificate = Json{{"kind", "stair-steps"}, {"dim", a.dim}, {"steps", steps}};
                memo().sf_memo.emplace(key, v);
                return v;
            }
            if (vr.membership == Membership::Undecided) {
                saw_undecided = true;
                div_rec["fail"] = "undecided";
            } else {
                div_rec["fail"] = "restriction-refuted";
                div_rec["restriction"] = vr.trace;
            }
        }
        cand["addition"] = std::move(add_rec);
        cand["division"] = std::move(div_rec);
        cands.push_back(std::move(cand));
    }
    node["candidates"] = std::move(cands);
    if (saw_undecided) {
        v.membership = Membership::Undecided;
        node["reason"] = "budget";
        v.trace = node;
        return v;
    }
    v.membership = Membership::NonMember;
    node["reason"] = "exhausted";
    v.trace = node;
    memo().sf_memo.emplace(key, v);
    return v;
}

long long resolve_budget(long long budget) { return budget > 0 ? budget : default_budget(); }

}  // namespace

long long default_budget() {
    if (const char* env = std::getenv("FREEARR_BUDGET")) {
        char* end = nullptr;
        long long b = std::strtoll(env, &end, 10);
        if (end && *end == '\0' && b > 0) return b;
    }
    return 5'000'000;
}

ClassVerdict is_inductively_free(const Arrangement& a, long long budget) {
    Ctx ctx{resolve_budget(budget)};
    return if_node(a, ctx);
}

ClassVerdict is_additionally_free(const Arrangement& a, long long budget) {
    Ctx ctx{resolve_budget(budget)};
    return af_node(a, ctx);
}

ClassVerdict is_divisionally_free(const Arrangement& a, long long budget) {
    Ctx ctx{resolve_budget(budget)};
    return df_node(a, ctx);
}

ClassVerdict is_stair_free(const Arrangement& a, long long budget) {
    Ctx ctx{resolve_budget(budget)};
    return sf_node(a, ctx);
}

ClassVerdict classify(const Arrangement& a, const std::string& klass, long long budget) {
    if (klass == "if") return is_inductively_free(a, budget);
    if (klass == "af") return is_additionally_free(a, budget);
    if (klass == "df") return is_divisionally_free(a, budget);
    if (klass == "sf") return is_stair_free(a, budget);
    throw precondition_violated("unknown class: " + klass);
}

void clear_class_caches() {
    memo().if_memo.clear();
    memo().af_memo.clear();
    memo().df_memo.clear();
    memo().sf_memo.clear();
}

// ------------------------------------------------------------ table parsing

namespace {

std::vector<long> parse_longs(const std::string& s) {
    std::istringstream in(s);
    std::vector<long> r;
    long x;
    while (in >> x) r.push_back(x);
    if (!in.eof()) throw parse_error("bad integer list: " + s);
    return r;
}

}  // namespace

InductionTable parse_induction_table(const std::string& text) {
    InductionTable t;
    std::istringstream in(text);
    std::string line;
    bool have_dim = false, have_final = false;
    while (std::getline(in, line)) {
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        std::istringstream probe(line);
        std::string first;
        if (!(probe >> first)) continue;
        if (!have_dim) {
            if (first != "dim") throw parse_error("induction table must start with 'dim l'");
            long l;
            if (!(probe >> l) || l < 0) throw parse_error("bad dimension");
            std::string extra;
            if (probe >> extra) throw parse_error("trailing tokens after dimension");
            t.dim = static_cast<int>(l);
            have_dim = true;
            continue;
        }
        if (have_final) throw parse_error("content after the final line");
        if (first == "final") {
            std::string rest;
            std::getline(probe, rest);
            t.final_exponents = parse_longs(rest);
            have_final = true;
            continue;
        }
        size_t p1 = line.find('|');
        size_t p2 = p1 == std::string::npos ? std::string::npos : line.find('|', p1 + 1);
        if (p2 == std::string::npos) throw parse_error("table line needs two '|' separators");
        InductionTable::Step s;
        s.exp_before = parse_longs(line.substr(0, p1));
        for (long c : parse_longs(line.substr(p1 + 1, p2 - p1 - 1))) s.normal.push_back(c);
        s.exp_restriction = parse_longs(line.substr(p2 + 1));
        if (static_cast<int>(s.exp_before.size()) != t.dim ||
            static_cast<int>(s.normal.size()) != t.dim ||
            static_cast<int>(s.exp_restriction.size()) != t.dim - 1)
            throw parse_error("table line widths do not match the dimension");
        t.steps.push_back(std::move(s));
    }
    if (!have_dim) throw parse_error("missing 'dim l' header");
    if (!have_final) throw parse_error("missing final line");
    if (static_cast<int>(t.final_exponents.size()) != t.dim)
        throw parse_error("final exponent count does not match the dimension");
    return t;
}

std::string emit_induction_table(const InductionTable& t) {
    std::ostringstream out;
    out << "dim " << t.dim << "\n";
    auto join = [&](auto begin, auto end) {
        for (auto it = begin; it != end; ++it) out << (it == begin ? "" : " ") << *it;
    };
    for (const auto& s : t.steps) {
        join(s.exp_before.begin(), s.exp_before.end());
        out << " | ";
        join(s.normal.begin(), s.normal.end());
        out << " | ";
        join(s.exp_restriction.begin(), s.exp_restriction.end());
        out << "\n";
    }
    out << "final ";
    join(t.final_exponents.begin(), t.final_exponents.end());
    out << "\n";
    return out.str();
}

// ------------------------------------------------------------- verification

namespace {

TableCheck run_table(const Arrangement& a, const std::vector<IntVec>& chain,
                     const InductionTable* claimed, long long budget) {
    TableCheck out;
    auto fail = [&](int index, const std::string& reason) {
        out.steps.push_back({index, false, reason});
        out.ok = false;
        return out;
    };
    int l = a.dim;
    if (claimed && claimed->dim != l) return fail(-1, "dimension mismatch");
    if (chain.size() != a.size()) return fail(-1, "step count does not match the arrangement");
    Arrangement prefix{l, {}};
    std::vector<long> running(l, 0);
    for (size_t i = 0; i < chain.size(); ++i) {
        int idx = static_cast<int>(i);
        Hyperplane h = canonicalize(chain[i]);
        if (a.index_of(h) < 0) return fail(idx, "normal is not a hyperplane of the arrangement");
        if (prefix.index_of(h) >= 0) return fail(idx, "normal repeated");
        if (claimed) {
            std::vector<long> before = claimed->steps[i].exp_before;
            std::sort(before.begin(), before.end());
            if (before != running) return fail(idx, "claimed starting exponents differ");
        }
        Arrangement next = prefix;
        next.hyperplanes.push_back(h);
        Arrangement res = restriction(next, hyperplane_flat(next, h));
        auto rr = roots_of(res);
        if (!rr) return fail(idx, "restriction chi does not split");
        if (claimed) {
            std::vector<long> want = claimed->steps[i].exp_restriction;
            std::sort(want.begin(), want.end());
            if (want != *rr) return fail(idx, "claimed restriction exponents differ");
        }
        ClassVerdict vr = is_inductively_free(res, budget);
        if (vr.membership != Membership::Member)
            return fail(idx, vr.membership == Membership::Undecided
                                 ? "restriction inductive check ran out of budget"
                                 : "restriction is not inductively free");
        auto step = addition_step(running, *rr);
        if (!step) return fail(idx, "exponent multisets do not admit the addition step");
        auto cr = roots_of(next);
        if (!cr || *cr != *step) return fail(idx, "chi of the extended arrangement disagrees");
        out.steps.push_back({idx, true, ""});
        running = *step;
        prefix = std::move(next);
    }
    if (claimed) {
        std::vector<long> fin = claimed->final_exponents;
        std::sort(fin.begin(), fin.end());
        if (fin != running) return fail(static_cast<int>(chain.size()), "final exponents differ");
    }
    out.ok = true;
    out.final_exponents = running;
    return out;
}

}  // namespace

TableCheck verify_induction_table(const Arrangement& a, const InductionTable& t, long long budget) {
    std::vector<IntVec> chain;
    for (const auto& s : t.steps) chain.push_back(s.normal);
    return run_table(a, chain, &t, budget);
}

TableCheck verify_inductive_chain(const Arrangement& a, const std::vector<IntVec>& chain,
                                  long long budget) {
    return run_table(a, chain, nullptr, budget);
}

ChainCheck verify_free_chain(const Arrangement& a, const std::vector<IntVec>& chain) {
    ChainCheck out;
    if (chain.size() != a.size()) {
        out.reason = "chain length does not match the arrangement";
        return out;
    }
    Arrangement prefix{a.dim, {}};
    for (size_t i = 0; i < chain.size(); ++i) {
        Hyperplane h = canonicalize(chain[i]);
        out.failed_prefix = static_cast<int>(i) + 1;
        if (a.index_of(h) < 0) {
            out.reason = "normal is not a hyperplane of the arrangement";
            return out;
        }
        if (prefix.index_of(h) >= 0) {
            out.reason = "normal repeated";
            return out;
        }
        prefix.hyperplanes.push_back(h);
        const FreenessVerdict& fv = is_free_cached(prefix);
        if (!fv.free) {
            out.reason = "prefix is not free";
            return out;
        }
        out.prefix_exponents.emplace_back(fv.cert.exponents.begin(), fv.cert.exponents.end());
    }
    out.ok = true;
    out.failed_prefix = -1;
    return out;
}

FlagCheck verify_divisional_flag(const Arrangement& a, const std::vector<IntVec>& flag) {
    Arrangement cur = a;
    for (const IntVec& v : flag) {
        Hyperplane h = canonicalize(v);
        if (cur.index_of(h) < 0) return {false, "flag normal is not a hyperplane of the current step"};
        Arrangement res = restriction(cur, hyperplane_flat(cur, h));
        if (!divides(char_poly_cached(res), char_poly_cached(cur)))
            return {false, "chi of the restriction does not divide"};
        cur = std::move(res);
    }
    if (rank(cur) > 2) return {false, "flag stops above rank 2"};
    return {true, ""};
}

FlagCheck verify_stair_steps(const Arrangement& a, const Json& steps) {
    Arrangement cur = a;
    for (const auto& s : steps) {
        Hyperplane h = canonicalize(parse_normal_json(s.at("normal")));
        int i = cur.index_of(h);
        if (i < 0) return {false, "step normal is not a hyperplane of the current step"};
        Arrangement res = restriction(cur, hyperplane_flat(cur, h));
        std::string op = s.at("op").get<std::string>();
        if (op == "add") {
            Arrangement del = with_hyperplane_removed(cur, i);
            auto cr = roots_of(cur), dr = roots_of(del), rr = roots_of(res);
            if (!cr || !dr || !rr) return {false, "chi does not split at an addition step"};
            auto step = addition_step(*dr, *rr);
            if (!step || *step != *cr) return {false, "addition step exponents do not fit"};
            if (!is_free_cached(res).free) return {false, "restriction at an addition step is not free"};
            cur = std::move(del);
        } else if (op == "divide") {
            if (!divides(char_poly_cached(res), char_poly_cached(cur)))
                return {false, "chi of the restriction does not divide"};
            cur = std::move(res);
        } else {
            return {false, "unknown step op: " + op};
        }
    }
    if (cur.size() != 0) return {false, "steps stop before the empty arrangement"};
    return {true, ""};
}

// ------------------------------------------------------------ trace replay

namespace {

FlagCheck replay_node(const Arrangement& a, const Json& trace);

FlagCheck replay_candidates(const Arrangement& a, const Json& node, const std::string& klass) {
    const Json& cands = node.at("candidates");
    if (cands.size() != a.size()) return {false, "trace does not cover every hyperplane"};
    std::vector<char> seen(a.size(), 0);
    for (const auto& cand : cands) {
        Hyperplane h = canonicalize(parse_normal_json(cand.at("normal")));
        int i = a.index_of(h);
        if (i < 0 || seen[i]) return {false, "trace candidate is not a distinct hyperplane"};
        seen[i] = 1;
        Arrangement res = restrict_to(a, i);
        Arrangement del = with_hyperplane_removed(a, i);
        auto roots = roots_of(a);
        auto check_pattern = [&]() -> bool {  // true when the pattern genuinely fails
            auto rr = roots_of(res), dr = roots_of(del);
            if (!rr || !dr || !roots) return true;
            auto step = addition_step(*dr, *rr);
            return !step || *step != *roots;
        };
        auto check_fail = [&](const Json& rec, const Json* sub_res, const Json* sub_del) -> FlagCheck {
            std::string f = rec.at("fail").get<std::string>();
            if (f == "pattern") {
                if (!check_pattern()) return {false, "recorded pattern failure does not reproduce"};
            } else if (f == "restriction-refuted") {
                if (!sub_res) return {false, "missing restriction subtrace"};
                FlagCheck c = replay_node(res, *sub_res);
                if (!c.ok) return c;
            } else if (f == "deletion-refuted") {
                if (!sub_del) return {false, "missing deletion subtrace"};
                FlagCheck c = replay_node(del, *sub_del);
                if (!c.ok) return c;
            } else if (f == "deletion-not-free") {
                if (is_free_cached(del).free) return {false, "recorded non-free deletion is free"};
            } else if (f == "restriction-not-free") {
                if (is_free_cached(res).free) return {false, "recorded non-free restriction is free"};
            } else if (f == "chi-not-dividing") {
                if (divides(char_poly_cached(res), char_poly_cached(a)))
                    return {false, "recorded chi non-division does not reproduce"};
            } else {
                return {false, "trace failure kind is not a refutation: " + f};
            }
            return {true, ""};
        };
        if (klass == "sf") {
            const Json& add = cand.at("addition");
            const Json& div = cand.at("division");
            FlagCheck c = check_fail(add, nullptr,
                                     add.contains("deletion") ? &add.at("deletion") : nullptr);
            if (!c.ok) return c;
            c = check_fail(div, div.contains("restriction") ? &div.at("restriction") : nullptr,
                           nullptr);
            if (!c.ok) return c;
        } else {
            FlagCheck c = check_fail(cand, cand.contains("restriction") ? &cand.at("restriction") : nullptr,
                                     cand.contains("deletion") ? &cand.at("deletion") : nullptr);
            if (!c.ok) return c;
        }
    }
    return {true, ""};
}

FlagCheck replay_node(const Arrangement& a, const Json& trace) {
    std::string klass = trace.at("class").get<std::string>();
    std::string reason = trace.at("reason").get<std::string>();
    if (trace.contains("chi_roots")) {
        auto roots = roots_of(a);
        if (!roots || *roots != parse_long_list(trace.at("chi_roots")))
            return {false, "recorded chi roots do not reproduce"};
    }
    if (reason == "chi-not-splitting") {
        if (roots_of(a)) return {false, "recorded non-splitting chi splits"};
        return {true, ""};
    }
    if (reason == "not-free") {
        if (klass != "af") return {false, "not-free refutation outside the additive class"};
        if (is_free_cached(a).free) return {false, "recorded non-free arrangement is free"};
        return {true, ""};
    }
    if (reason == "exhausted") {
        if (klass == "if" || klass == "af") {
            // Exhaustion only refutes above the base cases.
            if (a.size() == 0 || (klass == "if" && rank(a) <= 2))
                return {false, "exhaustion recorded at a base case"};
        }
        if (klass == "df" && rank(a) <= 2) return {false, "exhaustion recorded at a base case"};
        if (klass == "sf" && a.size() == 0) return {false, "exhaustion recorded at a base case"};
        return replay_candidates(a, trace, klass);
    }
    return {false, "trace reason is not a refutation: " + reason};
}

}  // namespace

FlagCheck replay_refutation(const Arrangement& a, const Json& trace) {
    try {
        return replay_node(a, trace);
    } catch (const Json::exception& e) {
        return {false, std::string("malformed trace: ") + e.what()};
    }
}

}  // namespace freearr
