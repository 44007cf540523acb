#pragma once
// Seedable randomness for simulations. The engine is std::mt19937_64
// (bit-exact across standard libraries); uniforms take the top 53 bits of
// an engine draw, Gaussians use the Marsaglia polar transform on those
// uniforms. Per-trial streams are derived from a master seed with the
// splitmix64 finalizer so trial outcomes are independent of scheduling.

#include <cstdint>
#include <random>

namespace wiretap {

constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Seed for stream `index` under `master`: splitmix64(master ^ splitmix64(index + 1)).
constexpr std::uint64_t derive_stream_seed(std::uint64_t master,
                                           std::uint64_t index) {
    return splitmix64(master ^ splitmix64(index + 1));
}

class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    bool next_bit() { return (engine_() >> 63) != 0; }

    // Uniform in (0, 1], 53-bit resolution.
    double next_unit() {
        return double((engine_() >> 11) + 1) * 0x1.0p-53;
    }

    double next_gaussian();

  private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace wiretap
