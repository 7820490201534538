#pragma once

#include <cstdint>

#include "simplicial/error.hpp"

// Overflow-checked 64-bit arithmetic. Every count and identity side in the
// library goes through these; wraparound is reported as ErrorKind::kOverflow.
namespace simplicial::checked {

inline std::int64_t add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) {
        throw Error(ErrorKind::kOverflow, "integer overflow in addition");
    }
    return r;
}

inline std::int64_t sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) {
        throw Error(ErrorKind::kOverflow, "integer overflow in subtraction");
    }
    return r;
}

inline std::int64_t mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) {
        throw Error(ErrorKind::kOverflow, "integer overflow in multiplication");
    }
    return r;
}

// (-1)^e for any integer exponent.
constexpr std::int64_t sign(std::int64_t e) { return (e % 2 == 0) ? 1 : -1; }

}  // namespace simplicial::checked
