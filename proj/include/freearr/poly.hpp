#pragma once

#include <string>
#include <vector>

#include "freearr/common.hpp"

namespace freearr {

// Integer polynomial in t, coefficients ascending.  Normalized: no trailing
// zero coefficients (the zero polynomial has empty storage).
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<BigInt> coeffs);
    static IntPoly constant(long c);
    static IntPoly monomial(long c, int deg);
    // (t - r1)(t - r2)...
    static IntPoly from_roots(const std::vector<long>& roots);

    int degree() const;  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    const BigInt& coeff(int i) const;
    const std::vector<BigInt>& coeffs() const { return c_; }
    bool monic() const;

    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator*(const IntPoly& o) const;
    bool operator==(const IntPoly& o) const { return c_ == o.c_; }

    BigInt eval(const BigInt& t) const;
    std::string to_string() const;  // expanded, in t

private:
    std::vector<BigInt> c_;
    void trim();
};

// Exact divisibility over Z[t]; p must be nonzero.
bool divides(const IntPoly& p, const IntPoly& q);
// q / p when divides(p, q); throws otherwise.
IntPoly divide_exact(const IntPoly& p, const IntPoly& q);

// Integer-root splitting of a monic polynomial.  When the polynomial is a
// product of linear integer factors, `splits` holds and `roots` is the
// multiset (ascending); otherwise `residual` is the non-splitting cofactor.
struct RootSplit {
    bool splits = false;
    std::vector<long> roots;
    IntPoly residual;
};
RootSplit integer_root_multiset(const IntPoly& p);

std::string factored_string(const RootSplit& s);

}  // namespace freearr
