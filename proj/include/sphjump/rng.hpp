#pragma once

#include <cstdint>
#include <random>

namespace sphjump {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

// Per-path random stream. The engine seed is derived from
// (master_seed, stream_index) so results do not depend on how paths are
// distributed over workers.
class RngStream {
  public:
    RngStream(std::uint64_t master_seed, std::uint64_t stream_index)
        : engine_(splitmix64(splitmix64(master_seed) ^ stream_index)) {}

    double uniform() { return unif_(engine_); }

    double normal() { return normal_(engine_); }

    // Exponential holding time with the given rate.
    double exponential(double rate) {
        return -std::log1p(-unif_(engine_)) / rate;
    }

    std::mt19937_64& engine() { return engine_; }

  private:
    std::mt19937_64 engine_;
    std::uniform_real_distribution<double> unif_{0.0, 1.0};
    std::normal_distribution<double> normal_{0.0, 1.0};
};

}  // namespace sphjump
