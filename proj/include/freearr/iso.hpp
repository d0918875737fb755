#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "freearr/arrangement.hpp"

namespace freearr {

// Bijection of hyperplane indices inducing an isomorphism of intersection
// lattices.  Found by backtracking over atom maps pruned with rank-2 flat
// profiles, then certified against the full lattices.
std::optional<std::vector<int>> matroid_isomorphic(const Arrangement& a, const Arrangement& b,
                                                   long long node_budget = 50'000'000);

// Visits lattice-preserving bijections until the callback returns true;
// returns true when the callback accepted one.
bool for_each_matroid_iso(const Arrangement& a, const Arrangement& b,
                          const std::function<bool(const std::vector<int>&)>& accept,
                          long long node_budget = 50'000'000);

struct LinearIso {
    std::vector<int> map;            // hyperplane i of A -> map[i] of B
    RatMat matrix;                   // M with M * beta_{map[i]} parallel to alpha_i
    std::vector<Rat> scalars;        // M * beta_{map[i]} = scalars[i] * alpha_i
};

// Invertible change of coordinates carrying the essentialization of B onto
// the essentialization of A (normals mapped to parallel normals).
std::optional<LinearIso> linear_isomorphic(const Arrangement& a, const Arrangement& b,
                                           long long node_budget = 50'000'000);

}  // namespace freearr
