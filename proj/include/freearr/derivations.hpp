#pragma once

#include <map>
#include <optional>
#include <vector>

#include "freearr/arrangement.hpp"
#include "freearr/mpoly.hpp"
#include "freearr/poly.hpp"

namespace freearr {

// Homogeneous derivation theta = sum_i coeffs[i] d/dx_i with every coeffs[i]
// homogeneous of the same degree.
struct Derivation {
    int degree = 0;
    std::vector<MPoly> coeffs;
};

// Ordered list of monomials of fixed degree in `nvars` variables; the
// coordinate system for one graded piece of D(A).
struct MonomialBasis {
    int nvars = 0;
    int degree = 0;
    std::vector<Mono> mons;
    std::map<Mono, int> index;
    static MonomialBasis make(int nvars, int degree);
    int size() const { return static_cast<int>(mons.size()); }
};

// Exact rational basis of D(A)_d.  Vectors live over l * |mons| coordinates,
// component i of the derivation occupying the slice [i*|mons|, (i+1)*|mons|).
struct DegreeSpace {
    int degree = 0;
    MonomialBasis mons;
    std::vector<std::vector<Rat>> basis;
    int dimension() const { return static_cast<int>(basis.size()); }
    Derivation derivation(int k, int nvars) const;
};

DegreeSpace derivation_space(const Arrangement& a, int d);

long long free_dim_prediction(const std::vector<int>& exps, int l, int d);

struct FreeCertificate {
    std::vector<int> exponents;            // full, including zeros of the center
    std::vector<int> essential_exponents;  // exponents of the essentialization
    std::vector<Derivation> basis;         // on the essentialization's coordinates
    Rat scalar;                            // det(coefficient matrix) = scalar * Q
};

enum class NotFreeWitness { None, NonSplittingChi, GradedDimMismatch, SaitoIdenticallyZero };

struct FreenessVerdict {
    bool free = false;
    FreeCertificate cert;
    NotFreeWitness witness = NotFreeWitness::None;
    int mismatch_degree = -1;
    long long predicted_dim = -1, actual_dim = -1;
    IntPoly residual;  // non-splitting cofactor of chi
};

struct SaitoResult {
    bool found = false;
    std::vector<Derivation> basis;
    Rat scalar;
};

// Decides whether some tuple drawn from the graded spaces realizes Saito's
// criterion for the candidate exponents.  `spaces` maps each distinct
// exponent to the exact basis of that graded piece.
SaitoResult saito_scan(const Arrangement& a, const std::vector<int>& exps,
                       const std::map<int, DegreeSpace>& spaces, long long tuple_budget = 2000000);

FreenessVerdict is_free(const Arrangement& a);
// Memoized by canonical key; currency of the class deciders.
const FreenessVerdict& is_free_cached(const Arrangement& a);
void clear_freeness_cache();

struct CertCheck {
    bool ok = false;
    std::string reason;
};
// Independent exact re-check of a Free certificate (membership of every
// basis element, degree bookkeeping, determinant scalar).
CertCheck verify_freeness_certificate(const Arrangement& a, const FreeCertificate& cert);

// Q(A) as a symbolic product evaluator's value at a point.
Rat defining_polynomial_at(const Arrangement& a, const std::vector<Rat>& point);
// A point with all alpha_H nonzero, of the form (1, t, t^2, ...).
std::vector<Rat> point_off_arrangement(const Arrangement& a);

// Euler derivation sum x_i d/dx_i.
Derivation euler_derivation(int nvars);

}  // namespace freearr
