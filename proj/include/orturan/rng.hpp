#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace orturan {

// Seeded 64-bit Mersenne Twister (std::mt19937_64, whose state transition is
// fixed by the C++ standard). Derived quantities are computed here rather than
// through <random> distributions so that a seed reproduces the same stream on
// every standard library.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    // Uniform in [0, 1): top 53 bits scaled by 2^-53.
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Uniform in [0, bound) by rejection; bound > 0.
    std::uint64_t below(std::uint64_t bound)
    {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        for (;;) {
            const std::uint64_t x = next();
            if (x < limit)
                return x % bound;
        }
    }

    bool chance(double p) { return uniform01() < p; }

    // Fisher-Yates from the back.
    template <typename T>
    void shuffle(std::vector<T>& items)
    {
        for (std::size_t i = items.size(); i > 1; --i)
            std::swap(items[i - 1], items[below(i)]);
    }

private:
    std::mt19937_64 engine_;
};

} // namespace orturan
