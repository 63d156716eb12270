#pragma once

#include <cstdint>
#include <stdexcept>

namespace tev {

// Raised when a (g, r, d) triple violates the validity constraints
// (r >= 1, g >= 0, d >= r, r | d, n >= r+1).
struct invalid_params : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Raised when a requested enumeration would exceed the configured work bound.
struct work_bound_exceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t s = 0;
    if (__builtin_add_overflow(a, b, &s))
        throw std::overflow_error("tev: counter overflow in addition");
    return s;
}

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t p = 0;
    if (__builtin_mul_overflow(a, b, &p))
        throw std::overflow_error("tev: counter overflow in multiplication");
    return p;
}

// base^exp, saturated just above cap so callers can test "> cap" safely.
inline std::uint64_t pow_capped(std::uint64_t base, unsigned exp, std::uint64_t cap) {
    const std::uint64_t over = cap == UINT64_MAX ? UINT64_MAX : cap + 1;
    std::uint64_t v = 1;
    for (unsigned e = 0; e < exp; ++e) {
        if (base == 0) return 0;
        if (v > cap / base) return over;
        v *= base;
    }
    return v;
}

// Execution knobs shared by the counting entry points.
struct ExecPolicy {
    std::uint64_t work_bound = 100000000;  // cap on (r+1)^g
    unsigned threads = 0;                  // 0 = one thread per hardware core
};

}  // namespace tev
