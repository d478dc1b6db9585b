#pragma once

#include <cstdint>
#include <random>

namespace sparsetrig {

/// Random streams are std::mt19937_64 engines. Every randomized operation takes
/// an explicit 64-bit seed and builds its own engine, so no state is shared.
/// Sub-seeds for independent entities are derived by hashing
/// (parent seed, role, index) through the SplitMix64 finalizer.
using Engine = std::mt19937_64;

enum class StreamRole : std::uint64_t {
  Trial = 1,
  Support = 2,
  Coefficients = 3,
  Points = 4,
};

std::uint64_t splitmix64(std::uint64_t x);

std::uint64_t derive_seed(std::uint64_t parent, StreamRole role, std::uint64_t index = 0);

Engine make_engine(std::uint64_t seed);

}  // namespace sparsetrig
