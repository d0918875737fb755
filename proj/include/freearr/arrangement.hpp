#pragma once

#include <optional>
#include <string>
#include <vector>

#include "freearr/linalg.hpp"

namespace freearr {

// Primitive integer normal vector, first nonzero entry positive.
struct Hyperplane {
    IntVec normal;
    bool operator==(const Hyperplane& o) const { return normal == o.normal; }
    bool operator<(const Hyperplane& o) const { return normal < o.normal; }
};

Hyperplane canonicalize(const IntVec& v);
Hyperplane canonicalize_rat(const std::vector<Rat>& v);

// Central rational arrangement: ordered duplicate-free hyperplane list in a
// fixed ambient dimension.  The empty list is Phi_dim.
struct Arrangement {
    int dim = 0;
    std::vector<Hyperplane> hyperplanes;

    size_t size() const { return hyperplanes.size(); }
    int index_of(const Hyperplane& h) const;  // -1 if absent
    bool operator==(const Arrangement& o) const { return dim == o.dim && hyperplanes == o.hyperplanes; }
};

// Builds an arrangement, canonicalizing and deduplicating.  In strict mode a
// duplicate (after canonicalization) is an error.
Arrangement make_arrangement(int dim, const std::vector<IntVec>& normals, bool strict = false);

// Element of L(A): basis of the subspace X plus the indices of the
// hyperplanes containing X.  The basis is in canonical primitive RREF.
struct Flat {
    std::vector<IntVec> basis;   // dim(X) rows of length ambient dim
    std::vector<int> containing;
    int subspace_dim() const { return static_cast<int>(basis.size()); }
};

// The four standard constructions plus plumbing.
Arrangement deletion(const Arrangement& a, const Hyperplane& h);
Arrangement localization(const Arrangement& a, const Flat& x);
Arrangement restriction(const Arrangement& a, const Flat& x);
Arrangement product(const Arrangement& a1, const Arrangement& a2);
int rank(const Arrangement& a);

struct Essentialization {
    Arrangement arrangement;
    int kernel_dim = 0;
};
Essentialization essentialize(const Arrangement& a);

struct Triple {
    Arrangement full, deleted, restricted;
};
Triple triple(const Arrangement& a, const Hyperplane& h);

// Flat of A cut out by the listed normals; throws NotAFlat if the
// intersection is not an element of L(A).
Flat flat_from_normals(const Arrangement& a, const std::vector<IntVec>& normals);
// Flat cut out by a subset of A's hyperplanes (always a flat).
Flat flat_from_indices(const Arrangement& a, const std::vector<int>& indices);
// Rank-1 flat of a single hyperplane.
Flat hyperplane_flat(const Arrangement& a, const Hyperplane& h);

bool flat_contains_hyperplane(const Flat& x, const Hyperplane& h);

// Canonical sortable key: dim plus sorted normals.  Memoization currency for
// the class deciders.
std::string canonical_key(const Arrangement& a);

std::string emit_normal(const IntVec& v);

// Text format: "dim <l>" then one normal per line, '#' comments.
Arrangement parse_arrangement(const std::string& text, bool strict = false);
std::string emit_arrangement(const Arrangement& a);

}  // namespace freearr
