#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "freearr/common.hpp"

namespace freearr {

// Packed exponent tuple: 8 bits per variable, at most 8 variables.
using Mono = uint64_t;

inline int mono_exp(Mono m, int var) { return static_cast<int>((m >> (8 * var)) & 0xff); }
inline Mono mono_set(Mono m, int var, int e) {
    return (m & ~(Mono(0xff) << (8 * var))) | (Mono(e) << (8 * var));
}
inline Mono mono_mul(Mono a, Mono b) { return a + b; }  // exponents add; callers keep degrees < 256
int mono_degree(Mono m, int nvars);

// Sparse multivariate polynomial over Q with deterministic term order.
class MPoly {
public:
    MPoly() = default;
    explicit MPoly(int nvars) : nvars_(nvars) {}
    static MPoly constant(int nvars, const Rat& c);
    static MPoly variable(int nvars, int var);
    static MPoly linear_form(const std::vector<Rat>& coeffs);
    static MPoly linear_form_int(const IntVec& coeffs);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    int total_degree() const;
    const std::map<Mono, Rat>& terms() const { return terms_; }

    void add_term(Mono m, const Rat& c);
    MPoly operator+(const MPoly& o) const;
    MPoly operator-(const MPoly& o) const;
    MPoly operator*(const MPoly& o) const;
    MPoly scaled(const Rat& c) const;

    // Substitute variable `var` by the linear form sum_j coeffs[j] x_j
    // (coeffs[var] must be zero).
    MPoly substitute_linear(int var, const std::vector<Rat>& coeffs) const;
    Rat evaluate(const std::vector<Rat>& point) const;
    std::string to_string(const std::vector<std::string>& var_names = {}) const;

    bool operator==(const MPoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

private:
    int nvars_ = 0;
    std::map<Mono, Rat> terms_;
};

}  // namespace freearr
