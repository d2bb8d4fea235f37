#pragma once

#include <cstdint>
#include <random>

namespace gendiff {

// All randomness in the library comes from std::mt19937_64, whose output
// sequence is fixed by the standard, mapped to doubles with the 53-bit
// construction below (std::uniform_real_distribution is implementation
// defined and is avoided).
using Engine = std::mt19937_64;

// Uniform double in [0, 1).
inline double uniform01(Engine& engine) {
  return static_cast<double>(engine() >> 11) * 0x1.0p-53;
}

// SplitMix64 finalizer; used to derive independent per-task seeds.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// seed XOR encode(key): the per-row seed of scans keyed by an integer.
inline std::uint64_t derive_seed(std::uint64_t seed, std::int64_t key) {
  return seed ^ mix64(static_cast<std::uint64_t>(key));
}

}  // namespace gendiff
