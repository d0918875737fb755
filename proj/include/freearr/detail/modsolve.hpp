#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "freearr/common.hpp"
#include "freearr/derivations.hpp"

namespace freearr::detail {

// One exact integer constraint row: remainder coefficient of theta(alpha_H)
// modulo alpha_H, scaled to clear the pivot denominator.
struct SparseRow {
    std::vector<std::pair<int, long long>> entries;  // (column, coefficient)
};

// Constraint rows for one hyperplane at one degree.  Columns are the
// l * |mons| unknown coefficients, component-major.
std::vector<SparseRow> hyperplane_rows(const IntVec& alpha, int d, const MonomialBasis& mb);

// Exact rational kernel of the stacked blocks.  Multi-modular elimination
// with rational reconstruction; every returned vector is re-verified against
// the exact integer rows, and the dimension is certified by the modular rank
// bound, so the result is exact despite the fast path.
std::vector<std::vector<Rat>> exact_kernel(const std::vector<std::vector<SparseRow>>& blocks, int ncols);

// Kernel of the blocks modulo one word-sized prime (used for steering only).
struct ModKernelResult {
    uint32_t prime;
    int rank = 0;
    std::vector<int> free_cols;
    std::vector<std::vector<uint32_t>> vectors;  // dense, length ncols
};
ModKernelResult mod_kernel(const std::vector<std::vector<SparseRow>>& blocks, int ncols, int prime_index);

int num_solver_primes();

// Incremental span of rational vectors modulo one of the solver primes.
// Used only to steer choices; callers re-certify exactly.  A vector whose
// denominator vanishes mod the prime makes insert throw OverflowSignal.
class ModSpan {
public:
    ModSpan(int ncols, int prime_index);
    ~ModSpan();
    ModSpan(ModSpan&&) noexcept;
    ModSpan& operator=(ModSpan&&) noexcept;
    // Returns true if v enlarged the span mod p.
    bool insert(const std::vector<Rat>& v);
    int rank() const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

}  // namespace freearr::detail
