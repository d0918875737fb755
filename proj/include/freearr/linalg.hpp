#pragma once

#include <optional>
#include <vector>

#include "freearr/common.hpp"

namespace freearr {

// Row space of integer vectors, kept in fraction-free reduced echelon form
// with primitive rows and positive pivots.  The long-long engine throws
// OverflowSignal; RowSpace transparently redoes the work with mpz.
class RowSpace {
public:
    explicit RowSpace(int ncols);

    // Returns true if the vector enlarged the space.
    bool insert(const IntVec& v);
    bool contains(const IntVec& v) const;
    int rank() const;
    int ncols() const;
    // Echelon basis, primitive integer rows, pivot entries positive.
    const std::vector<IntVec>& rows() const;
    // Stable fingerprint of the subspace (the canonical echelon rows).
    size_t hash() const;
    bool operator==(const RowSpace& o) const;

private:
    int cols_;
    std::vector<IntVec> rows_;   // sorted by pivot column
    std::vector<int> pivots_;
    bool insert_ll(const IntVec& v);
    bool insert_big(const IntVec& v);
    bool contains_ll(const IntVec& v) const;
    bool contains_big(const IntVec& v) const;
};

int rank_of(const std::vector<IntVec>& vectors, int ncols);

// Primitive integer basis of {x : M x = 0}, rows of M are the given vectors.
std::vector<IntVec> nullspace(const std::vector<IntVec>& rows, int ncols);

// Reduced row echelon form over Q, rows scaled to primitive integer vectors
// with positive leading entry (canonical for a subspace).
std::vector<IntVec> rref_primitive(const std::vector<IntVec>& rows, int ncols);

// Dense rational matrices for the small systems (isomorphism solving,
// Saito determinant evaluation, oracle checks).
using RatMat = std::vector<std::vector<Rat>>;

int rref_rat(RatMat& m);  // in place, returns rank
std::vector<std::vector<Rat>> nullspace_rat(RatMat m);
Rat det_rat(RatMat m);
std::optional<RatMat> inverse_rat(const RatMat& m);

// Primitive form of an integer vector: divide by gcd, first nonzero positive.
// Throws InvalidHyperplane on the zero vector when `reject_zero`.
IntVec primitive(IntVec v, bool reject_zero = true);

Int dot(const IntVec& a, const IntVec& b);

// Clear denominators of a rational vector into a primitive integer vector.
IntVec clear_denominators(const std::vector<Rat>& v);

}  // namespace freearr
