#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "stresslab/scalar.hpp"

namespace stresslab {

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

inline std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

} // namespace detail

// All randomness in the tool flows from one root seed. Children are derived
// with splitmix64 over the parent seed xor a label hash, so that every
// consumer sees a reproducible stream independent of evaluation order.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : seed_(seed), eng_(mix(seed)) {}

    std::uint64_t seed() const { return seed_; }

    Rng child(std::string_view tag) const {
        std::uint64_t s = seed_ ^ detail::fnv1a(tag);
        return Rng(detail::splitmix64(s));
    }

    Rng child(std::uint64_t salt) const {
        std::uint64_t s = seed_ ^ (salt * 0x9e3779b97f4a7c15ull + 0x165667b19e3779f9ull);
        return Rng(detail::splitmix64(s));
    }

    std::uint64_t next() { return eng_(); }

    // Uniform-ish integer in [lo, hi]; plain modulo keeps the stream
    // platform-independent, bias is irrelevant at 64-bit state size.
    std::int64_t int_in(std::int64_t lo, std::int64_t hi) {
        std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<std::int64_t>(eng_() % span);
    }

    std::uint64_t uint_below(std::uint64_t n) { return eng_() % n; }

    Scalar nonzero_scalar(const Field& f, std::int64_t bound) {
        for (;;) {
            Scalar s = scalar(f, bound);
            if (!s.is_zero()) return s;
        }
    }

    Scalar scalar(const Field& f, std::int64_t bound) {
        return Scalar::integer(f, int_in(-bound, bound));
    }

    std::uint64_t random_prime_near(std::uint64_t base) {
        for (;;) {
            std::uint64_t c = base + (eng_() % (std::uint64_t{1} << 20));
            c |= 1;
            if (is_prime_u64(c)) return c;
        }
    }

private:
    static std::uint64_t mix(std::uint64_t s) { return detail::splitmix64(s); }

    std::uint64_t seed_;
    std::mt19937_64 eng_;
};

inline Field random_prime_field(std::uint64_t seed) {
    Rng r(seed);
    return Field::prime(r.child("prime").random_prime_near(std::uint64_t{1} << 31));
}

} // namespace stresslab
