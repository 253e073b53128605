#pragma once

#include <cstdint>
#include <vector>

#include "stablelattice/core.hpp"

namespace stablelattice {

// splitmix64: the full output sequence is pinned so generated instances are
// reproducible across platforms and standard library versions.
class SplitMix64 {
public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound) by rejection; bound >= 1.
    uint64_t next_below(uint64_t bound) {
        uint64_t limit = ~uint64_t{0} - ~uint64_t{0} % bound;
        uint64_t x;
        do {
            x = next();
        } while (x >= limit);
        return x % bound;
    }

    double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    uint64_t state_;
};

// Fisher-Yates with next_below, applied to the identity; byte-deterministic.
std::vector<int> random_permutation(int n, SplitMix64& rng);

struct GeneratorConfig {
    enum class Mode { uniform_random, master_list, adversarial_swap };

    int n = 0;
    uint64_t seed = 0;
    Mode mode = Mode::uniform_random;
};

// uniform_random: every list an independent uniform permutation.
// master_list: one random permutation per side, shared by all agents; such
// instances have a unique stable matching.
// adversarial_swap: boy i ranks girls i, i+1, ... cyclically and girls rank
// boys the same way shifted, yielding the n-rotation Latin instance with a
// long elimination chain; seed is unused in this mode.
Instance generate(const GeneratorConfig& cfg);

}  // namespace stablelattice
