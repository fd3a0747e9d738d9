#pragma once

#include <cstdint>
#include <random>

namespace rcdb {

// Thin wrapper over mt19937_64 with an explicit stream id, so that one
// episode can hold independent generators (labels vs adversary) that do
// not perturb each other when a config knob changes.
class Rng {
public:
    Rng(std::uint64_t seed, std::uint64_t stream) {
        std::seed_seq seq{seed, stream, std::uint64_t{0x9e3779b97f4a7c15ULL}};
        gen_.seed(seq);
    }

    // uniform in [0,1), 53-bit resolution; avoids the library's
    // implementation-defined distributions so traces are portable
    double uniform01() { return (gen_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    int bernoulli(double p) { return uniform01() < p ? 1 : 0; }

private:
    std::mt19937_64 gen_;
};

}  // namespace rcdb
