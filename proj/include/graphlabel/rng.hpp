#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace graphlabel {

// Mixes a 64-bit value through the splitmix64 finalizer. Used both for
// deriving independent substreams and as the keyed hash behind equality-code
// sketching, so it must stay stable across platforms and releases.
inline std::uint64_t mix64(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Keyed hash of an equality code: two codes collide under a random key with
// probability ~ 2^-64 before reduction.
inline std::uint64_t keyed_hash(std::uint64_t key, std::uint64_t value)
{
    return mix64(value ^ mix64(key));
}

// Seeded pseudo-random generator. Engine identifier: "mt19937_64". All
// bounded sampling is done with explicit rejection / 53-bit conversion rather
// than std::*_distribution, so identical seeds give identical outputs on any
// conforming standard library.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

    std::uint64_t seed() const { return seed_; }

    std::uint64_t next_u64() { return engine_(); }

    // Uniform value in [0, n). n must be positive.
    std::uint64_t below(std::uint64_t n)
    {
        const std::uint64_t limit = n * ((~std::uint64_t{0}) / n);
        std::uint64_t x;
        do {
            x = next_u64();
        } while (x >= limit);
        return x % n;
    }

    // Uniform integer in [lo, hi], inclusive.
    int uniform_int(int lo, int hi) { return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo) + 1)); }

    // Uniform real in [0, 1) with 53 bits of precision.
    double unit_real() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return unit_real() < p; }

    // Inverse-CDF sample of an exponential with the given rate, conditioned
    // on the value lying in [0, hi).
    double truncated_exponential(double rate, double hi)
    {
        const double cap = 1.0 - std::exp(-rate * hi);
        const double u = unit_real() * cap;
        return -std::log1p(-u) / rate;
    }

    template <typename T>
    void shuffle(std::vector<T> & items)
    {
        for (std::size_t i = items.size(); i > 1; --i)
            std::swap(items[i - 1], items[below(i)]);
    }

    // Independent substream; derivation is order-insensitive in `stream`.
    Rng derive(std::uint64_t stream) const { return Rng(keyed_hash(seed_, stream)); }

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

} // namespace graphlabel
