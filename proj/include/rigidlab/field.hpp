#ifndef RIGIDLAB_FIELD_HPP
#define RIGIDLAB_FIELD_HPP

#include <cstdint>

namespace rigidlab {

// Default modulus: the Mersenne prime 2^61 - 1. Products of two reduced
// elements fit comfortably in unsigned __int128, and reduction is a couple
// of shifts instead of a 128-bit division.
inline constexpr uint64_t kDefaultModulus = 2305843009213693951ULL;

// Deterministic Miller-Rabin, valid for all 64-bit inputs.
bool is_prime_u64(uint64_t n);

// Arithmetic in Z/pZ for a prime 2 <= p < 2^63.
// Elements are plain uint64_t values in [0, p).
class PrimeField {
public:
    explicit PrimeField(uint64_t modulus = kDefaultModulus);

    uint64_t modulus() const { return p_; }

    uint64_t reduce(uint64_t x) const { return x % p_; }

    uint64_t add(uint64_t a, uint64_t b) const {
        uint64_t s = a + b;  // no overflow: a, b < 2^63
        return s >= p_ ? s - p_ : s;
    }

    uint64_t sub(uint64_t a, uint64_t b) const {
        return a >= b ? a - b : a + p_ - b;
    }

    uint64_t neg(uint64_t a) const { return a == 0 ? 0 : p_ - a; }

    uint64_t mul(uint64_t a, uint64_t b) const {
        unsigned __int128 t = static_cast<unsigned __int128>(a) * b;
        if (p_ == kDefaultModulus) {
            // Mersenne reduction: fold the top bits twice.
            uint64_t lo = static_cast<uint64_t>(t) & kDefaultModulus;
            uint64_t hi = static_cast<uint64_t>(t >> 61);
            uint64_t s = lo + hi;
            if (s >= p_) s -= p_;
            if (s >= p_) s -= p_;
            return s;
        }
        return static_cast<uint64_t>(t % p_);
    }

    uint64_t pow(uint64_t base, uint64_t exp) const;

    // Multiplicative inverse; requires a != 0.
    uint64_t inv(uint64_t a) const;

    bool operator==(const PrimeField&) const = default;

private:
    uint64_t p_;
};

}  // namespace rigidlab

#endif
