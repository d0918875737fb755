#include "freearr/catalog.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "freearr_catalog_data.hpp"

namespace freearr {

Arrangement arr_A() { return parse_arrangement(detail_data::kAArr, true); }

Arrangement arr_B() { return deletion(arr_A(), canonicalize({0, 0, 1, 1, 0, 0, 0})); }

Arrangement arr_C() { return parse_arrangement(detail_data::kCArr, true); }

Arrangement arr_D() { return deletion(arr_C(), canonicalize({1, 1, 0, 0, 0})); }

Arrangement arr_Dpp() {
    Arrangement d = arr_D();
    return restriction(d, flat_from_normals(d, {{0, 0, 0, 1, 0}}));
}

Flat flat_Z() {
    return flat_from_normals(arr_A(), {{1, 0, 0, 0, 0, 0, 0}, {1, 1, 2, 2, 2, 1, 0}});
}

Flat flat_X() {
    return flat_from_normals(arr_B(), {{1, 0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 1, 0}});
}

Flat flat_Y() {
    return flat_from_normals(arr_B(),
                             {{1, 0, 0, 0, 0, 0, 0}, {1, 1, 2, 2, 2, 1, 0}, {0, 0, 0, 0, 0, 1, 0}});
}

Arrangement e7_positive_roots() {
    // Bourbaki numbering: the branch node is 4, with neighbors 2, 3, 5.
    static const int cartan[7][7] = {
        {2, 0, -1, 0, 0, 0, 0},  //
        {0, 2, 0, -1, 0, 0, 0},  //
        {-1, 0, 2, -1, 0, 0, 0},  //
        {0, -1, -1, 2, -1, 0, 0},  //
        {0, 0, 0, -1, 2, -1, 0},  //
        {0, 0, 0, 0, -1, 2, -1},  //
        {0, 0, 0, 0, 0, -1, 2},
    };
    std::set<IntVec> roots;
    std::vector<IntVec> frontier;
    for (int i = 0; i < 7; ++i) {
        IntVec e(7, 0);
        e[i] = 1;
        roots.insert(e);
        frontier.push_back(e);
    }
    while (!frontier.empty()) {
        std::vector<IntVec> next;
        for (const IntVec& r : frontier)
            for (int i = 0; i < 7; ++i) {
                Int pairing = 0;
                for (int j = 0; j < 7; ++j) pairing += cartan[i][j] * r[j];
                IntVec s = r;
                s[i] -= pairing;
                if (roots.insert(s).second) next.push_back(s);
            }
        frontier = std::move(next);
    }
    std::vector<IntVec> positive;
    for (const IntVec& r : roots)
        if (std::all_of(r.begin(), r.end(), [](Int c) { return c >= 0; })) positive.push_back(r);
    return make_arrangement(7, positive, true);
}

Triple example_4_1() {
    // Coordinates (w, x, y, z).
    std::vector<IntVec> normals = {
        {1, 0, 0, 0},  {0, 1, 0, 0},  {0, 0, 1, 0},  {0, 0, 0, 1},
        {0, 1, 1, 0},  {0, 1, 0, 1},  {0, 1, 0, -1}, {0, 0, 1, -1},
        {0, 0, 1, 1},  {0, 1, 1, -1}, {1, 1, -1, 0},
    };
    Arrangement a = make_arrangement(4, normals, true);
    return triple(a, canonicalize({0, 1, 1, -1}));
}

Triple example_4_2(const Arrangement& base, int m) {
    if (m < 0) throw precondition_violated("the family needs m >= 0");
    int l = base.dim;
    int xi = -1;
    for (int i = 0; i < l && xi < 0; ++i) {
        IntVec e(l, 0);
        e[i] = 1;
        if (base.index_of(Hyperplane{e}) >= 0) xi = i;
    }
    if (xi < 0) throw precondition_violated("base must contain a coordinate hyperplane ker(x)");
    std::vector<IntVec> normals;
    for (const Hyperplane& h : base.hyperplanes) {
        IntVec v = h.normal;
        v.push_back(0);
        normals.push_back(std::move(v));
    }
    IntVec z(l + 1, 0);
    z[l] = 1;
    normals.push_back(z);
    for (int k = 1; k <= m; ++k) {
        IntVec v(l + 1, 0);
        v[xi] = k;
        v[l] = -1;
        normals.push_back(std::move(v));
    }
    Arrangement a = make_arrangement(l + 1, normals, true);
    IntVec last(l + 1, 0);
    if (m == 0) {
        last[l] = 1;
    } else {
        last[xi] = m;
        last[l] = -1;
    }
    return triple(a, canonicalize(last));
}

namespace {

const std::map<std::string, const char*>& text_map() {
    static const std::map<std::string, const char*> m = {
        {"a", detail_data::kAArr},       {"c", detail_data::kCArr},
        {"a.table", detail_data::kATable}, {"c.table", detail_data::kCTable},
        {"b.chain", detail_data::kBChain}, {"d.chain", detail_data::kDChain},
    };
    return m;
}

}  // namespace

std::vector<std::string> catalog_names() { return {"a", "b", "c", "d", "dpp", "e7"}; }

std::string catalog_text(const std::string& name) {
    auto it = text_map().find(name);
    if (it != text_map().end()) return it->second;
    for (const std::string& n : catalog_names())
        if (n == name) return emit_arrangement(catalog_get(name));
    throw not_member("unknown catalog entry: " + name);
}

Arrangement catalog_get(const std::string& name) {
    if (name == "a") return arr_A();
    if (name == "b") return arr_B();
    if (name == "c") return arr_C();
    if (name == "d") return arr_D();
    if (name == "dpp") return arr_Dpp();
    if (name == "e7") return e7_positive_roots();
    throw not_member("unknown catalog entry: " + name);
}

}  // namespace freearr
