#pragma once
#include <utility>

#include "doctest.h"
#include "jct/error.hpp"

// Runs f, which must throw jct::Error, and hands back the code for matching.
template <typename F>
jct::Err code_of(F&& f) {
    try {
        std::forward<F>(f)();
    } catch (const jct::Error& e) {
        return e.code;
    }
    FAIL("expected a jct::Error");
    return jct::Err::NumericalFailure;
}

inline std::uint64_t test_rng(std::uint64_t& x) {
    x += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}
