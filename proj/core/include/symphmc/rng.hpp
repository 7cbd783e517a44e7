#pragma once

#include <cstdint>
#include <random>

namespace symphmc {

using Rng = std::mt19937_64;

/// Purposes of independent random streams derived from one master seed.
enum class StreamPurpose : std::uint32_t {
  Initialization = 1,
  Iteration = 2,
  Test = 3,
};

/// Deterministic generator for stream `index` of `purpose` under `seed`.
/// Distinct (seed, purpose, index) triples give independent-looking streams.
Rng make_stream(std::uint64_t seed, StreamPurpose purpose, std::uint64_t index);

}  // namespace symphmc
