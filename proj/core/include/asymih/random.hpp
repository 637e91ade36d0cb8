// Seeded, platform-independent random numbers for sampling.
//
// Only raw std::mt19937_64 output is used (its sequence is fixed by the
// standard); distributions are derived here so that reports are
// byte-identical across standard library implementations.
#pragma once

#include "asymih/gauss_rational.hpp"

#include <cstdint>
#include <random>

namespace asymih {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }
    /// Uniform-ish integer in [lo, hi] (modulo reduction; bias is irrelevant here).
    long between(long lo, long hi);
    /// Nonzero integer in [-bound, bound].
    long nonzero(long bound);
    /// num/den with |num| <= max_num and 1 <= den <= max_den.
    Rational rational(long max_num, long max_den);

private:
    std::mt19937_64 engine_;
};

}  // namespace asymih
