#include "rigidlab/random.hpp"

namespace rigidlab {

uint64_t splitmix64(uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

uint64_t derive_seed(uint64_t base, uint64_t salt) {
    return splitmix64(splitmix64(base) + salt);
}

uint64_t SeededRng::next_below(uint64_t bound) {
    // Values >= zone would bias the low residues; redraw (at most a few
    // times in expectation for any bound).
    uint64_t residue = (UINT64_MAX % bound + 1) % bound;
    uint64_t zone = UINT64_MAX - residue;  // inclusive upper bound of fair draws
    for (;;) {
        uint64_t x = gen_();
        if (x <= zone) return x % bound;
    }
}

std::vector<uint64_t> random_vector(size_t n, SeededRng& rng, const PrimeField& f) {
    std::vector<uint64_t> out(n);
    for (size_t i = 0; i < n; ++i) out[i] = rng.field_element(f);
    return out;
}

}  // namespace rigidlab
