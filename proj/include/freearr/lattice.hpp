#pragma once

#include <cstdint>
#include <vector>

#include "freearr/arrangement.hpp"
#include "freearr/poly.hpp"

namespace freearr {

using Mask = uint64_t;  // closed hyperplane set; arrangement size capped at 64

// Intersection lattice of a central arrangement, flats grouped by rank
// (= codimension of the flat).  Flat identity is its closed hyperplane set.
struct Lattice {
    int n = 0;    // number of hyperplanes
    int dim = 0;  // ambient dimension
    struct LatFlat {
        Mask closed;
        int rank;
        long long mu;
    };
    std::vector<LatFlat> flats;           // sorted by rank, then by mask
    std::vector<size_t> rank_begin;       // index of first flat of each rank (size rank+2)
    int top_rank() const { return static_cast<int>(rank_begin.size()) - 2; }
    size_t count_of_rank(int r) const { return rank_begin[r + 1] - rank_begin[r]; }
};

Lattice build_lattice(const Arrangement& a);

// Converts a lattice flat into a Flat value of the arrangement.
Flat flat_of(const Arrangement& a, const Lattice& lat, size_t flat_index);

IntPoly char_poly(const Arrangement& a);

// Subset-expansion oracle; independent of the lattice path.
IntPoly char_poly_whitney(const Arrangement& a, int oracle_bound = 20);

// Process-wide memo for characteristic polynomials (the class deciders
// revisit the same sub-arrangements constantly).
const IntPoly& char_poly_cached(const Arrangement& a);
void clear_char_poly_cache();

}  // namespace freearr
