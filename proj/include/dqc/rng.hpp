#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace dqc {

/// Deterministic random source. All randomized components draw through this
/// wrapper so results are reproducible from a single seed across platforms
/// (std::shuffle and the std distributions are implementation-defined).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform integer in [0, bound).
    int next_int(int bound) {
        return bound <= 1 ? 0 : static_cast<int>(next_u64() % static_cast<std::uint64_t>(bound));
    }

    /// Uniform double in [0, 1).
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (int i = static_cast<int>(v.size()) - 1; i > 0; --i) {
            std::swap(v[i], v[next_int(i + 1)]);
        }
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace dqc
