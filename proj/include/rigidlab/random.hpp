#ifndef RIGIDLAB_RANDOM_HPP
#define RIGIDLAB_RANDOM_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "rigidlab/field.hpp"

namespace rigidlab {

uint64_t splitmix64(uint64_t x);

// Stable derivation of sub-stream seeds from a base seed. Used so that
// trial t of an analysis, or chain c of a sweep, always sees the same
// random stream regardless of evaluation order.
uint64_t derive_seed(uint64_t base, uint64_t salt);

// Deterministic source of field elements. Draws raw mt19937_64 words
// (whose output sequence is fixed by the standard) and rejection-samples;
// std::uniform_int_distribution is avoided because its mapping is
// implementation-defined and would break byte-identical reports.
class SeededRng {
public:
    explicit SeededRng(uint64_t seed) : gen_(seed) {}

    uint64_t next_u64() { return gen_(); }

    // Unbiased value in [0, bound); bound >= 1.
    uint64_t next_below(uint64_t bound);

    uint64_t field_element(const PrimeField& f) { return next_below(f.modulus()); }

    // Deterministic coin with probability numer/2^32.
    bool chance(uint32_t numer) { return (next_u64() >> 32) < numer; }

private:
    std::mt19937_64 gen_;
};

std::vector<uint64_t> random_vector(size_t n, SeededRng& rng, const PrimeField& f);

}  // namespace rigidlab

#endif
