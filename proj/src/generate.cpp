#include "stablelattice/generate.hpp"

#include "stablelattice/errors.hpp"

namespace stablelattice {

std::vector<int> random_permutation(int n, SplitMix64& rng) {
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    for (int i = n - 1; i > 0; --i) {
        int j = static_cast<int>(rng.next_below(static_cast<uint64_t>(i) + 1));
        std::swap(p[i], p[j]);
    }
    return p;
}

namespace {

Instance uniform_random(int n, SplitMix64& rng) {
    std::vector<std::vector<int>> boys, girls;
    boys.reserve(n);
    girls.reserve(n);
    for (int b = 0; b < n; ++b) boys.push_back(random_permutation(n, rng));
    for (int g = 0; g < n; ++g) girls.push_back(random_permutation(n, rng));
    return Instance(std::move(boys), std::move(girls));
}

Instance master_list(int n, SplitMix64& rng) {
    auto boys_list = random_permutation(n, rng);
    auto girls_list = random_permutation(n, rng);
    return Instance(std::vector<std::vector<int>>(n, boys_list),
                    std::vector<std::vector<int>>(n, girls_list));
}

// Cyclic Latin instance: boy i starts at girl i, girl j starts at boy j+1.
// The lattice is a chain of n-1 rotations, each of full length n.
Instance adversarial_swap(int n) {
    std::vector<std::vector<int>> boys(n), girls(n);
    for (int b = 0; b < n; ++b) {
        boys[b].reserve(n);
        for (int k = 0; k < n; ++k) boys[b].push_back((b + k) % n);
    }
    for (int g = 0; g < n; ++g) {
        girls[g].reserve(n);
        for (int k = 0; k < n; ++k) girls[g].push_back((g + 1 + k) % n);
    }
    return Instance(std::move(boys), std::move(girls));
}

}  // namespace

Instance generate(const GeneratorConfig& cfg) {
    if (cfg.n < 1) throw DomainError("generator: n must be positive");
    SplitMix64 rng(cfg.seed);
    switch (cfg.mode) {
        case GeneratorConfig::Mode::uniform_random:
            return uniform_random(cfg.n, rng);
        case GeneratorConfig::Mode::master_list:
            return master_list(cfg.n, rng);
        case GeneratorConfig::Mode::adversarial_swap:
            return adversarial_swap(cfg.n);
    }
    throw DomainError("generator: unknown mode");
}

}  // namespace stablelattice
