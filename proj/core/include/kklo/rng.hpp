#pragma once

#include <cstdint>
#include <vector>

namespace kklo {

/// Counter-based deterministic RNG (SplitMix64 over seed + counter).
///
/// Every draw is output = mix64(seed + counter * GOLDEN) with the counter
/// incremented first, so a stream is fully described by (seed, counter) and
/// is bit-identical across platforms and runs. Gaussians come from
/// Box-Muller on the uniform stream; the spare half of each pair is cached
/// in the state.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : seed_(seed) {}

    std::uint64_t seed() const { return seed_; }
    std::uint64_t counter() const { return counter_; }

    std::uint64_t next_u64();
    /// 53-bit uniform in [0, 1).
    double uniform01();
    /// Unbiased uniform index in [0, n).
    std::size_t uniform_index(std::size_t n);
    /// Single standard-normal draw.
    double normal();

private:
    std::uint64_t seed_;
    std::uint64_t counter_ = 0;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

/// n iid standard-normal draws, advancing rng deterministically.
std::vector<double> gaussian(Rng& rng, std::size_t n);

/// In-place Fisher-Yates shuffle.
template <typename T>
void shuffle(std::vector<T>& v, Rng& rng) {
    if (v.size() < 2) return;
    for (std::size_t i = v.size() - 1; i > 0; --i) {
        std::size_t j = rng.uniform_index(i + 1);
        std::swap(v[i], v[j]);
    }
}

/// Deterministic derived seed for independent sub-streams (sweep cells,
/// companion datasets). Same inputs always give the same child seed.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream, std::uint64_t index);

}  // namespace kklo
