#pragma once

#include <cstdint>
#include <random>

namespace bell {

using RngEngine = std::mt19937_64;

// Stream roles, folded into the substream hash so that e.g. the pair-count
// draw never shares a stream with per-pair outcome sampling.
enum class StreamKind : std::uint64_t {
  pair_count = 1,  // per-setting Poisson pair-number draw
  aggregate = 2,   // per-setting multinomial tally draw
  per_pair = 3,    // per-(setting, chunk) pairwise sampling
  lambda = 4,      // hidden-variable sampling outside the simulator
  sweep = 5,       // seed derivation for multi-seed sweeps
};

// splitmix64 finalizer; bijective on 64-bit words.
constexpr std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Deterministic seed for the (setting, kind, chunk) substream of a master
// seed. Serial and parallel runs draw from identical chunk streams, so the
// merged result is independent of scheduling.
constexpr std::uint64_t substream_seed(std::uint64_t master,
                                       std::uint64_t setting, StreamKind kind,
                                       std::uint64_t chunk = 0) {
  std::uint64_t h = mix64(master ^ 0x5851f42d4c957f2dULL);
  h = mix64(h + setting);
  h = mix64(h + static_cast<std::uint64_t>(kind));
  h = mix64(h + chunk);
  return h;
}

inline RngEngine make_engine(std::uint64_t seed) { return RngEngine(seed); }

// Uniform double in [0, 1) from the top 53 bits of one engine draw.
inline double uniform01(RngEngine& g) {
  return static_cast<double>(g() >> 11) * 0x1.0p-53;
}

}  // namespace bell
