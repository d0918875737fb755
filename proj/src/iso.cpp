#include "freearr/iso.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <unordered_set>

#include "freearr/lattice.hpp"

namespace freearr {

namespace {

struct MatroidView {
    Arrangement ess;
    Lattice lat;
    int n = 0;
    std::vector<std::vector<int>> pair_size;     // popcount of the rank-2 flat through i, j
    std::vector<std::vector<int>> atom_profile;  // sorted pair_size row, self entry dropped
};

MatroidView view_of(const Arrangement& a) {
    MatroidView v;
    v.ess = essentialize(a).arrangement;
    v.lat = build_lattice(v.ess);
    v.n = static_cast<int>(v.ess.size());
    v.pair_size.assign(v.n, std::vector<int>(v.n, 0));
    if (v.lat.top_rank() >= 2)
        for (size_t f = v.lat.rank_begin[2]; f < v.lat.rank_begin[3]; ++f) {
            Mask m = v.lat.flats[f].closed;
            int size = std::popcount(m);
            for (int i = 0; i < v.n; ++i)
                if (m >> i & 1)
                    for (int j = i + 1; j < v.n; ++j)
                        if (m >> j & 1) v.pair_size[i][j] = v.pair_size[j][i] = size;
        }
    v.atom_profile.resize(v.n);
    for (int i = 0; i < v.n; ++i) {
        for (int j = 0; j < v.n; ++j)
            if (j != i) v.atom_profile[i].push_back(v.pair_size[i][j]);
        std::sort(v.atom_profile[i].begin(), v.atom_profile[i].end());
    }
    return v;
}

// Cheap lattice fingerprint: multiset of (rank, flat size, mu).
std::vector<std::tuple<int, int, long long>> fingerprint(const Lattice& lat) {
    std::vector<std::tuple<int, int, long long>> fp;
    for (const auto& f : lat.flats) fp.emplace_back(f.rank, std::popcount(f.closed), f.mu);
    std::sort(fp.begin(), fp.end());
    return fp;
}

struct Search {
    const MatroidView& a;
    const MatroidView& b;
    const std::function<bool(const std::vector<int>&)>& accept;
    long long budget;
    std::vector<int> order;           // order in which A's atoms are assigned
    std::vector<std::vector<int>> cand;  // candidates in B per A atom
    std::vector<int> map;             // A atom -> B atom, -1 unassigned
    std::vector<bool> used;
    std::vector<std::unordered_set<Mask>> b_flats_by_rank;

    bool lattice_check() const {
        for (const auto& f : a.lat.flats) {
            Mask image = 0;
            for (int i = 0; i < a.n; ++i)
                if (f.closed >> i & 1) image |= Mask{1} << map[i];
            if (!b_flats_by_rank[f.rank].count(image)) return false;
        }
        return true;
    }

    bool extend(size_t depth) {
        if (depth == order.size()) return lattice_check() && accept(map);
        int i = order[depth];
        for (int j : cand[i]) {
            if (used[j]) continue;
            if (--budget < 0) throw oracle_too_large("isomorphism search budget exceeded");
            bool ok = true;
            for (size_t d = 0; d < depth && ok; ++d) {
                int k = order[d];
                ok = a.pair_size[i][k] == b.pair_size[j][map[k]];
            }
            if (!ok) continue;
            map[i] = j;
            used[j] = true;
            if (extend(depth + 1)) return true;
            map[i] = -1;
            used[j] = false;
        }
        return false;
    }
};

bool run_search(const MatroidView& va, const MatroidView& vb,
                const std::function<bool(const std::vector<int>&)>& accept, long long budget) {
    if (va.n != vb.n || fingerprint(va.lat) != fingerprint(vb.lat)) return false;
    if (va.n == 0) return accept({});
    Search s{va, vb, accept, budget, {}, {}, std::vector<int>(va.n, -1),
             std::vector<bool>(vb.n, false), {}};
    s.cand.resize(va.n);
    for (int i = 0; i < va.n; ++i) {
        for (int j = 0; j < vb.n; ++j)
            if (va.atom_profile[i] == vb.atom_profile[j]) s.cand[i].push_back(j);
        if (s.cand[i].empty()) return false;
    }
    s.order.resize(va.n);
    for (int i = 0; i < va.n; ++i) s.order[i] = i;
    std::stable_sort(s.order.begin(), s.order.end(),
                     [&](int x, int y) { return s.cand[x].size() < s.cand[y].size(); });
    s.b_flats_by_rank.resize(va.lat.top_rank() + 1);
    for (const auto& f : vb.lat.flats) s.b_flats_by_rank[f.rank].insert(f.closed);
    return s.extend(0);
}

}  // namespace

bool for_each_matroid_iso(const Arrangement& a, const Arrangement& b,
                          const std::function<bool(const std::vector<int>&)>& accept,
                          long long node_budget) {
    return run_search(view_of(a), view_of(b), accept, node_budget);
}

std::optional<std::vector<int>> matroid_isomorphic(const Arrangement& a, const Arrangement& b,
                                                   long long node_budget) {
    std::optional<std::vector<int>> found;
    for_each_matroid_iso(
        a, b,
        [&](const std::vector<int>& m) {
            found = m;
            return true;
        },
        node_budget);
    return found;
}

namespace {

// For a fixed bijection sigma, an invertible M with M * beta_{sigma(i)}
// parallel to alpha_i solves a homogeneous linear system in the l^2 entries
// of M; search the solution space for an invertible point.
std::optional<LinearIso> lift_to_linear(const Arrangement& ea, const Arrangement& eb,
                                        const std::vector<int>& sigma) {
    int l = ea.dim;
    int n = static_cast<int>(ea.size());
    if (l == 0 || n == 0) {
        if (!(l == 0 && n == 0)) return std::nullopt;
        return LinearIso{{}, {}, {}};
    }
    RatMat rows;
    for (int i = 0; i < n; ++i) {
        const IntVec& al = ea.hyperplanes[i].normal;
        const IntVec& be = eb.hyperplanes[sigma[i]].normal;
        // alpha[r] * (M beta)[s] - alpha[s] * (M beta)[r] = 0, unknown M[r][s] at r*l+s.
        for (int r = 0; r < l; ++r)
            for (int s = r + 1; s < l; ++s) {
                std::vector<Rat> row(l * l, Rat(0));
                for (int t = 0; t < l; ++t) {
                    row[s * l + t] += to_rat(al[r]) * to_rat(be[t]);
                    row[r * l + t] -= to_rat(al[s]) * to_rat(be[t]);
                }
                rows.push_back(std::move(row));
            }
    }
    std::vector<std::vector<Rat>> space = nullspace_rat(std::move(rows));
    if (space.empty()) return std::nullopt;

    auto assemble = [&](const std::vector<Rat>& v) {
        RatMat m(l, std::vector<Rat>(l));
        for (int r = 0; r < l; ++r)
            for (int s = 0; s < l; ++s) m[r][s] = v[r * l + s];
        return m;
    };
    auto try_point = [&](const std::vector<Rat>& v) -> std::optional<LinearIso> {
        RatMat m = assemble(v);
        if (det_rat(m) == 0) return std::nullopt;
        LinearIso iso{sigma, m, std::vector<Rat>(n)};
        for (int i = 0; i < n; ++i) {
            const IntVec& al = ea.hyperplanes[i].normal;
            const IntVec& be = eb.hyperplanes[sigma[i]].normal;
            std::vector<Rat> image(l, Rat(0));
            for (int r = 0; r < l; ++r)
                for (int t = 0; t < l; ++t) image[r] += m[r][t] * to_rat(be[t]);
            int piv = 0;
            while (al[piv] == 0) ++piv;
            Rat c = image[piv] / to_rat(al[piv]);
            if (c == 0) return std::nullopt;
            for (int r = 0; r < l; ++r)
                if (image[r] != c * to_rat(al[r])) return std::nullopt;
            iso.scalars[i] = c;
        }
        return iso;
    };

    for (const auto& v : space)
        if (auto iso = try_point(v)) return iso;
    // The determinant is a polynomial on the solution space; if it is not
    // identically zero a handful of fixed pseudo-random points finds a
    // nonzero value with overwhelming probability, and every hit is then
    // verified exactly.
    std::mt19937 rng(20240811);
    std::uniform_int_distribution<int> coeff(-1000003, 1000003);
    for (int attempt = 0; attempt < 40; ++attempt) {
        std::vector<Rat> v(l * l, Rat(0));
        for (const auto& basis_vec : space) {
            Rat w = to_rat(coeff(rng));
            for (int t = 0; t < l * l; ++t) v[t] += w * basis_vec[t];
        }
        if (auto iso = try_point(v)) return iso;
    }
    return std::nullopt;
}

}  // namespace

std::optional<LinearIso> linear_isomorphic(const Arrangement& a, const Arrangement& b,
                                           long long node_budget) {
    Arrangement ea = essentialize(a).arrangement;
    Arrangement eb = essentialize(b).arrangement;
    if (ea.dim != eb.dim || ea.size() != eb.size()) return std::nullopt;
    std::optional<LinearIso> found;
    for_each_matroid_iso(
        ea, eb,
        [&](const std::vector<int>& sigma) {
            found = lift_to_linear(ea, eb, sigma);
            return found.has_value();
        },
        node_budget);
    return found;
}

}  // namespace freearr
