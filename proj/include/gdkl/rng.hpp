#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <vector>

namespace gdkl {

// Counter-free splittable PRNG (splitmix64 core). Every consumer of
// randomness takes an explicit Rng so runs are reproducible from a single
// seed, and split() derives statistically independent streams so folds,
// seeds and training steps can be evaluated in any order or in parallel
// without changing results.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, 1)
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // standard normal via Box-Muller; second value of each pair is cached
    double normal() {
        if (have_cached_) {
            have_cached_ = false;
            return cached_;
        }
        double u1 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double t = 2.0 * std::numbers::pi * u2;
        cached_ = r * std::sin(t);
        have_cached_ = true;
        return r * std::cos(t);
    }

    // unbiased integer in [0, n)
    std::uint64_t uniform_int(std::uint64_t n) {
        const std::uint64_t rem = (UINT64_MAX % n + 1) % n;
        std::uint64_t x = next_u64();
        if (rem != 0) {
            while (x > UINT64_MAX - rem) x = next_u64();
        }
        return x % n;
    }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::swap(v[i - 1], v[uniform_int(i)]);
        }
    }

    // independent child stream; deterministic function of (state, tag)
    Rng split(std::uint64_t tag) const {
        std::uint64_t z = state_ ^ (0x632be59bd9b4e019ULL * (tag + 1));
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return Rng(z ^ (z >> 31));
    }

private:
    std::uint64_t state_;
    bool have_cached_ = false;
    double cached_ = 0.0;
};

// stateless hash of a tuple of tags, for per-entry MC streams
inline std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b, std::uint64_t c = 0,
                              std::uint64_t d = 0) {
    std::uint64_t z = a;
    for (std::uint64_t t : {b, c, d}) {
        z ^= t + 0x9e3779b97f4a7c15ULL + (z << 6) + (z >> 2);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    }
    return z ^ (z >> 31);
}

}  // namespace gdkl
