#include "freearr/arrangement.hpp"

#include <algorithm>
#include <sstream>

namespace freearr {

Hyperplane canonicalize(const IntVec& v) {
    return Hyperplane{primitive(v)};
}

Hyperplane canonicalize_rat(const std::vector<Rat>& v) {
    bool all_zero = std::all_of(v.begin(), v.end(), [](const Rat& q) { return q == 0; });
    if (all_zero) throw invalid_hyperplane("zero vector");
    return Hyperplane{clear_denominators(v)};
}

int Arrangement::index_of(const Hyperplane& h) const {
    for (size_t i = 0; i < hyperplanes.size(); ++i)
        if (hyperplanes[i] == h) return static_cast<int>(i);
    return -1;
}

Arrangement make_arrangement(int dim, const std::vector<IntVec>& normals, bool strict) {
    if (dim < 0) throw parse_error("negative dimension");
    Arrangement a;
    a.dim = dim;
    for (auto& v : normals) {
        if (static_cast<int>(v.size()) != dim) throw parse_error("normal has wrong arity");
        Hyperplane h = canonicalize(v);
        if (a.index_of(h) >= 0) {
            if (strict) throw parse_error("duplicate hyperplane " + emit_normal(h.normal));
            continue;
        }
        a.hyperplanes.push_back(std::move(h));
    }
    return a;
}

Arrangement deletion(const Arrangement& a, const Hyperplane& h) {
    int i = a.index_of(h);
    if (i < 0) throw not_member("hyperplane not in arrangement");
    Arrangement r = a;
    r.hyperplanes.erase(r.hyperplanes.begin() + i);
    return r;
}

bool flat_contains_hyperplane(const Flat& x, const Hyperplane& h) {
    for (auto& b : x.basis)
        if (dot(b, h.normal) != 0) return false;
    return true;
}

namespace {

// Verifies X is a flat of A and returns the containing set.
std::vector<int> closure_of(const Arrangement& a, const std::vector<IntVec>& basis, int subspace_dim) {
    std::vector<int> containing;
    std::vector<IntVec> contained_normals;
    for (size_t i = 0; i < a.hyperplanes.size(); ++i) {
        bool inside = true;
        for (auto& b : basis)
            if (dot(b, a.hyperplanes[i].normal) != 0) {
                inside = false;
                break;
            }
        if (inside) {
            containing.push_back(static_cast<int>(i));
            contained_normals.push_back(a.hyperplanes[i].normal);
        }
    }
    if (rank_of(contained_normals, a.dim) != a.dim - subspace_dim)
        throw not_a_flat("subspace is not an intersection of arrangement hyperplanes");
    return containing;
}

}  // namespace

Flat flat_from_normals(const Arrangement& a, const std::vector<IntVec>& normals) {
    for (auto& v : normals)
        if (static_cast<int>(v.size()) != a.dim) throw parse_error("flat normal has wrong arity");
    Flat x;
    x.basis = rref_primitive(nullspace(normals, a.dim), a.dim);
    x.containing = closure_of(a, x.basis, static_cast<int>(x.basis.size()));
    return x;
}

Flat flat_from_indices(const Arrangement& a, const std::vector<int>& indices) {
    std::vector<IntVec> normals;
    for (int i : indices) {
        if (i < 0 || i >= static_cast<int>(a.size())) throw not_member("flat index out of range");
        normals.push_back(a.hyperplanes[i].normal);
    }
    Flat x;
    x.basis = rref_primitive(nullspace(normals, a.dim), a.dim);
    std::vector<int> containing;
    for (size_t i = 0; i < a.hyperplanes.size(); ++i)
        if (flat_contains_hyperplane(x, a.hyperplanes[i])) containing.push_back(static_cast<int>(i));
    x.containing = containing;
    return x;
}

Flat hyperplane_flat(const Arrangement& a, const Hyperplane& h) {
    int i = a.index_of(h);
    if (i < 0) throw not_member("hyperplane not in arrangement");
    return flat_from_indices(a, {i});
}

Arrangement localization(const Arrangement& a, const Flat& x) {
    Arrangement r;
    r.dim = a.dim;
    for (int i : x.containing) r.hyperplanes.push_back(a.hyperplanes[i]);
    return r;
}

Arrangement restriction(const Arrangement& a, const Flat& x) {
    int k = x.subspace_dim();
    Arrangement r;
    r.dim = k;
    for (size_t i = 0; i < a.hyperplanes.size(); ++i) {
        if (std::binary_search(x.containing.begin(), x.containing.end(), static_cast<int>(i)))
            continue;
        IntVec restricted(k);
        for (int j = 0; j < k; ++j) restricted[j] = dot(x.basis[j], a.hyperplanes[i].normal);
        Hyperplane h = canonicalize(restricted);
        if (r.index_of(h) < 0) r.hyperplanes.push_back(std::move(h));
    }
    return r;
}

Arrangement product(const Arrangement& a1, const Arrangement& a2) {
    Arrangement r;
    r.dim = a1.dim + a2.dim;
    for (auto& h : a1.hyperplanes) {
        IntVec v(r.dim, 0);
        std::copy(h.normal.begin(), h.normal.end(), v.begin());
        r.hyperplanes.push_back(Hyperplane{std::move(v)});
    }
    for (auto& h : a2.hyperplanes) {
        IntVec v(r.dim, 0);
        std::copy(h.normal.begin(), h.normal.end(), v.begin() + a1.dim);
        r.hyperplanes.push_back(Hyperplane{std::move(v)});
    }
    return r;
}

int rank(const Arrangement& a) {
    std::vector<IntVec> normals;
    for (auto& h : a.hyperplanes) normals.push_back(h.normal);
    return rank_of(normals, a.dim);
}

Essentialization essentialize(const Arrangement& a) {
    std::vector<IntVec> normals;
    for (auto& h : a.hyperplanes) normals.push_back(h.normal);
    auto basis = rref_primitive(normals, a.dim);  // basis of the normal span
    int r = static_cast<int>(basis.size());
    Essentialization e;
    e.kernel_dim = a.dim - r;
    e.arrangement.dim = r;
    if (r == 0) return e;
    // Express each normal in the echelon basis of the span: solve c * B = alpha.
    std::vector<int> pivcol(r);
    for (int i = 0; i < r; ++i) {
        int p = 0;
        while (basis[i][p] == 0) ++p;
        pivcol[i] = p;
    }
    for (auto& h : a.hyperplanes) {
        std::vector<Rat> c(r, Rat(0));
        std::vector<Rat> residue(a.dim);
        for (int j = 0; j < a.dim; ++j) residue[j] = to_rat(h.normal[j]);
        for (int i = 0; i < r; ++i) {
            Rat f = residue[pivcol[i]] / to_rat(basis[i][pivcol[i]]);
            c[i] = f;
            if (f != 0)
                for (int j = 0; j < a.dim; ++j) residue[j] -= f * to_rat(basis[i][j]);
        }
        e.arrangement.hyperplanes.push_back(canonicalize_rat(c));
    }
    return e;
}

Triple triple(const Arrangement& a, const Hyperplane& h) {
    Triple t;
    t.full = a;
    t.deleted = deletion(a, h);
    t.restricted = restriction(a, hyperplane_flat(a, h));
    return t;
}

std::string canonical_key(const Arrangement& a) {
    std::vector<IntVec> normals;
    for (auto& h : a.hyperplanes) normals.push_back(h.normal);
    std::sort(normals.begin(), normals.end());
    std::ostringstream os;
    os << a.dim << ':';
    for (auto& v : normals) {
        for (Int x : v) os << x << ',';
        os << ';';
    }
    return os.str();
}

std::string emit_normal(const IntVec& v) {
    std::ostringstream os;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) os << ' ';
        os << v[i];
    }
    return os.str();
}

Arrangement parse_arrangement(const std::string& text, bool strict) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    int dim = -1;
    std::vector<IntVec> normals;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;
        if (dim < 0) {
            if (first != "dim") throw parse_error("line " + std::to_string(lineno) + ": expected 'dim <l>'");
            if (!(ls >> dim) || dim < 0) throw parse_error("line " + std::to_string(lineno) + ": bad dimension");
            std::string extra;
            if (ls >> extra) throw parse_error("line " + std::to_string(lineno) + ": trailing tokens after dim");
            continue;
        }
        IntVec v;
        try {
            v.push_back(std::stoll(first));
        } catch (std::exception&) {
            throw parse_error("line " + std::to_string(lineno) + ": bad integer '" + first + "'");
        }
        std::string tok;
        while (ls >> tok) {
            try {
                v.push_back(std::stoll(tok));
            } catch (std::exception&) {
                throw parse_error("line " + std::to_string(lineno) + ": bad integer '" + tok + "'");
            }
        }
        if (static_cast<int>(v.size()) != dim)
            throw parse_error("line " + std::to_string(lineno) + ": expected " + std::to_string(dim) +
                              " entries, got " + std::to_string(v.size()));
        normals.push_back(std::move(v));
    }
    if (dim < 0) throw parse_error("missing 'dim' header");
    try {
        return make_arrangement(dim, normals, strict);
    } catch (FreearrError& e) {
        throw;
    }
}

std::string emit_arrangement(const Arrangement& a) {
    std::ostringstream os;
    os << "dim " << a.dim << '\n';
    for (auto& h : a.hyperplanes) os << emit_normal(h.normal) << '\n';
    return os.str();
}

}  // namespace freearr
