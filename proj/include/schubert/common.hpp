#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace schubert {

// Base class for everything this library throws on purpose.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed or out-of-contract user input (bad permutation string, descent
// bounds violated, ...).  The CLI maps this to exit code 2.
struct invalid_input : error {
    using error::error;
};

// A supposedly-unreachable state was reached: an algorithm invariant failed.
struct internal_error : error {
    using error::error;
};

// Raised by BPD insertion when the working grid is too small to hold the
// insertion path; the caller re-embeds into a larger window and retries.
struct grow_window_needed : error {
    using error::error;
};

// Structure constants and polynomial coefficients.  64-bit with explicit
// overflow checks: desk-scale inputs stay tiny, but a silent wraparound would
// corrupt results, so arithmetic goes through the helpers below.
using coeff_t = long long;

inline coeff_t checked_add(coeff_t a, coeff_t b) {
    coeff_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw error("coefficient overflow in addition");
    return r;
}

inline coeff_t checked_mul(coeff_t a, coeff_t b) {
    coeff_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw error("coefficient overflow in multiplication");
    return r;
}

} // namespace schubert
