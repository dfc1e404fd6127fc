#pragma once

// Deterministic RNG used everywhere: xoshiro256++ seeded through splitmix64.
// std engines are portable but their distributions are not, so all bounded
// draws are done by hand here. Identical (seed, call sequence) gives identical
// output on every platform.

#include <cstdint>
#include <vector>

namespace psat {

// splitmix64 finalizer; also the avalanche mix for seed derivation.
inline uint64_t mix64(uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// Per-trial stream seed from (base_seed, stream_index).
// Documented contract: derive_stream(b, i) = mix64(b + (i+1) * 0x9E3779B97F4A7C15).
// Test vectors live in tests/test_rng.cpp and README.
inline uint64_t derive_stream(uint64_t base_seed, uint64_t stream_index) {
  return mix64(base_seed + (stream_index + 1) * 0x9E3779B97F4A7C15ull);
}

class Rng {
 public:
  explicit Rng(uint64_t seed) {
    // Expand the 64-bit seed into xoshiro state with splitmix64.
    uint64_t x = seed;
    for (auto &w : s_) {
      x += 0x9E3779B97F4A7C15ull;
      w = mix64(x);
    }
  }

  uint64_t next() {
    const uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
    const uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  // Unbiased uniform draw in [0, bound). bound > 0.
  uint64_t below(uint64_t bound) {
    const uint64_t threshold = (-bound) % bound;  // 2^64 mod bound
    for (;;) {
      uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }

  // Uniform in [0, 1) with 53 random bits.
  double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  bool coin() { return next() >> 63; }

  // k distinct values from [0, n), order irrelevant (partial Fisher-Yates).
  std::vector<int32_t> subset(int32_t n, int32_t k) {
    std::vector<int32_t> idx(n);
    for (int32_t i = 0; i < n; i++) idx[i] = i;
    for (int32_t i = 0; i < k; i++) {
      int32_t j = i + static_cast<int32_t>(below(static_cast<uint64_t>(n - i)));
      std::swap(idx[i], idx[j]);
    }
    idx.resize(k);
    return idx;
  }

 private:
  static uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
  uint64_t s_[4];
};

}  // namespace psat
