#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace freearr {

using Int = long long;
using BigInt = mpz_class;
using Rat = mpq_class;
using IntVec = std::vector<Int>;

// Error kinds named by the contract they guard.
struct FreearrError : std::runtime_error {
    std::string kind;
    FreearrError(std::string k, const std::string& msg)
        : std::runtime_error(k + ": " + msg), kind(std::move(k)) {}
};

inline FreearrError invalid_hyperplane(const std::string& msg) { return {"InvalidHyperplane", msg}; }
inline FreearrError not_member(const std::string& msg) { return {"NotMember", msg}; }
inline FreearrError not_a_flat(const std::string& msg) { return {"NotAFlat", msg}; }
inline FreearrError oracle_too_large(const std::string& msg) { return {"OracleTooLarge", msg}; }
inline FreearrError precondition_violated(const std::string& msg) { return {"PreconditionViolated", msg}; }
inline FreearrError parse_error(const std::string& msg) { return {"ParseError", msg}; }
inline FreearrError invalid_shapes(const std::string& msg) { return {"InvalidShapes", msg}; }
inline FreearrError internal_error(const std::string& msg) { return {"InternalError", msg}; }

// Signals that the long-long fast path overflowed and the caller should
// redo the computation with arbitrary precision.
struct OverflowSignal {};

// gmpxx has no long long overloads; long is 64-bit on every supported target.
inline BigInt to_big(Int v) { return BigInt(static_cast<long>(v)); }
inline Rat to_rat(Int v) { return Rat(static_cast<long>(v)); }

inline Int checked_mul(Int a, Int b) {
    __int128 p = static_cast<__int128>(a) * b;
    if (p > static_cast<__int128>(INT64_MAX) || p < static_cast<__int128>(INT64_MIN)) throw OverflowSignal{};
    return static_cast<Int>(p);
}

inline Int checked_add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowSignal{};
    return r;
}

inline Int checked_sub(Int a, Int b) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r)) throw OverflowSignal{};
    return r;
}

inline Int gcd_ll(Int a, Int b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
        Int t = a % b;
        a = b;
        b = t;
    }
    return a;
}

}  // namespace freearr
