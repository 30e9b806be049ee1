#include "kklo/rng.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace kklo {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

}  // namespace

std::uint64_t Rng::next_u64() {
    ++counter_;
    return mix64(seed_ + counter_ * kGolden);
}

double Rng::uniform01() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

std::size_t Rng::uniform_index(std::size_t n) {
    if (n == 0) throw std::invalid_argument("uniform_index: n must be positive");
    const std::uint64_t bound = n;
    const std::uint64_t threshold = (0ULL - bound) % bound;
    std::uint64_t x;
    do {
        x = next_u64();
    } while (x < threshold);
    return static_cast<std::size_t>(x % bound);
}

double Rng::normal() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    // u1 in (0, 1] keeps the log finite.
    const double u1 = 1.0 - uniform01();
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(theta);
    has_spare_ = true;
    return r * std::cos(theta);
}

std::vector<double> gaussian(Rng& rng, std::size_t n) {
    if (n < 1) throw std::invalid_argument("gaussian: n must be >= 1");
    std::vector<double> out(n);
    for (double& v : out) v = rng.normal();
    return out;
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream, std::uint64_t index) {
    return mix64(mix64(base + kGolden * stream) + kGolden * (index + 1));
}

}  // namespace kklo
