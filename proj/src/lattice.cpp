#include "freearr/lattice.hpp"

#include <algorithm>
#include <mutex>
#include <unordered_map>
#include <unordered_set>

namespace freearr {

Lattice build_lattice(const Arrangement& a) {
    int n = static_cast<int>(a.size());
    if (n > 64) throw precondition_violated("lattice construction capped at 64 hyperplanes");
    Lattice lat;
    lat.n = n;
    lat.dim = a.dim;

    // Per-rank frontier: closed mask plus the row space spanned by its normals.
    struct Node {
        Mask closed;
        RowSpace span;
    };
    std::vector<Node> frontier;
    frontier.push_back({0, RowSpace(a.dim)});
    lat.flats.push_back({0, 0, 0});
    lat.rank_begin = {0, 1};

    auto span_key = [](const RowSpace& s) {
        std::string k;
        k.reserve(s.rank() * s.ncols() * sizeof(Int));
        for (auto& row : s.rows())
            k.append(reinterpret_cast<const char*>(row.data()), row.size() * sizeof(Int));
        return k;
    };

    int r = 0;
    while (!frontier.empty()) {
        std::unordered_map<Mask, Node> next;
        std::unordered_set<std::string> seen_spans;  // canonical echelon rows already closed at this level
        for (auto& node : frontier) {
            for (int h = 0; h < n; ++h) {
                if (node.closed & (Mask(1) << h)) continue;
                RowSpace span = node.span;
                if (!span.insert(a.hyperplanes[h].normal)) continue;
                if (!seen_spans.insert(span_key(span)).second) continue;
                Mask closed = 0;
                for (int k = 0; k < n; ++k)
                    if (span.contains(a.hyperplanes[k].normal)) closed |= Mask(1) << k;
                if (next.count(closed)) continue;
                next.emplace(closed, Node{closed, std::move(span)});
            }
        }
        frontier.clear();
        if (next.empty()) break;
        ++r;
        lat.rank_begin.push_back(lat.rank_begin.back());
        std::vector<Mask> masks;
        masks.reserve(next.size());
        for (auto& [m, _] : next) masks.push_back(m);
        std::sort(masks.begin(), masks.end());
        for (Mask m : masks) {
            lat.flats.push_back({m, r, 0});
            ++lat.rank_begin.back();
            frontier.push_back(std::move(next.at(m)));
        }
    }

    // Moebius values: mu(V) = 1, then zero upper sums down the ranks.
    lat.flats[0].mu = 1;
    for (size_t i = 1; i < lat.flats.size(); ++i) {
        long long s = 0;
        Mask m = lat.flats[i].closed;
        for (size_t j = 0; j < i; ++j)
            if ((lat.flats[j].closed & m) == lat.flats[j].closed) s += lat.flats[j].mu;
        lat.flats[i].mu = -s;
    }
    return lat;
}

Flat flat_of(const Arrangement& a, const Lattice& lat, size_t flat_index) {
    std::vector<int> idx;
    Mask m = lat.flats[flat_index].closed;
    for (int h = 0; h < lat.n; ++h)
        if (m & (Mask(1) << h)) idx.push_back(h);
    return flat_from_indices(a, idx);
}

IntPoly char_poly(const Arrangement& a) {
    Lattice lat = build_lattice(a);
    std::vector<BigInt> c(a.dim + 1, BigInt(0));
    for (auto& f : lat.flats) c[a.dim - f.rank] += to_big(f.mu);
    return IntPoly(std::move(c));
}

IntPoly char_poly_whitney(const Arrangement& a, int oracle_bound) {
    int n = static_cast<int>(a.size());
    if (n > oracle_bound) throw oracle_too_large("whitney oracle bound is " + std::to_string(oracle_bound));
    std::vector<BigInt> c(a.dim + 1, BigInt(0));
    // Depth-first over subsets with an incremental row space.
    struct Rec {
        const Arrangement& a;
        std::vector<BigInt>& c;
        int n;
        void go(int i, int parity, const RowSpace& span) {
            if (i == n) {
                c[a.dim - span.rank()] += parity;
                return;
            }
            go(i + 1, parity, span);
            RowSpace s2 = span;
            s2.insert(a.hyperplanes[i].normal);
            go(i + 1, -parity, s2);
        }
    } rec{a, c, n};
    rec.go(0, 1, RowSpace(a.dim));
    return IntPoly(std::move(c));
}

namespace {
std::unordered_map<std::string, IntPoly> g_chi_cache;
}

const IntPoly& char_poly_cached(const Arrangement& a) {
    std::string key = canonical_key(a);
    auto it = g_chi_cache.find(key);
    if (it != g_chi_cache.end()) return it->second;
    IntPoly p = char_poly(a);
    return g_chi_cache.emplace(std::move(key), std::move(p)).first->second;
}

void clear_char_poly_cache() { g_chi_cache.clear(); }

}  // namespace freearr
