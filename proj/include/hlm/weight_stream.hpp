#pragma once

// Deterministic per-(edge, round) weight perturbation. Weights are produced
// by hashing a (seed, edge, round) counter instead of advancing generator
// state, so any worker may query any slot in any order and still see the
// same value. The generator kind picks the mixing function.

#include <compare>
#include <cstdint>
#include <span>
#include <string>

#include "hlm/hypergraph.hpp"

namespace hlm {

enum class GeneratorKind : std::uint8_t { xorshift, park_miller, splitmix };

enum class WeightMode : std::uint8_t {
  perturb_base,     // base weight plus noise drawn from [noise_low, noise_high)
  replace_uniform,  // fresh uniform weight in (0,1), base ignored
};

namespace detail {

inline std::uint64_t mix_splitmix(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

inline std::uint64_t mix_xorshift(std::uint64_t x) {
  x *= 0x9E3779B97F4A7C15ull;  // whiten the structured counter
  x ^= x >> 12;
  x ^= x << 25;
  x ^= x >> 27;
  return x * 0x2545F4914F6CDD1Dull;
}

// Minimal-standard 31-bit generator stepped twice on the folded counter.
inline std::uint64_t mix_park_miller(std::uint64_t x) {
  std::uint64_t s = x % 2147483646ull + 1ull;  // [1, 2^31 - 2]
  s = (s * 16807ull) % 2147483647ull;
  s = (s * 16807ull) % 2147483647ull;
  return s;
}

inline double to_unit_interval_64(std::uint64_t bits) {
  // (0,1): never exactly 0 or 1.
  return (static_cast<double>(bits >> 11) + 0.5) * 0x1.0p-53;
}

}  // namespace detail

struct WeightStream {
  std::uint64_t seed = 1;
  GeneratorKind kind = GeneratorKind::xorshift;
  WeightMode mode = WeightMode::perturb_base;
  double noise_low = 0.0;
  double noise_high = 100.0;

  // Uniform draw in (0,1), a pure function of (seed, kind, edge, round).
  double unit_noise(edge_id e, std::uint32_t round) const {
    const std::uint64_t key = counter(e, round);
    switch (kind) {
      case GeneratorKind::splitmix:
        return detail::to_unit_interval_64(detail::mix_splitmix(key));
      case GeneratorKind::xorshift:
        return detail::to_unit_interval_64(detail::mix_xorshift(key));
      case GeneratorKind::park_miller:
        return static_cast<double>(detail::mix_park_miller(key)) / 2147483647.0;
    }
    return 0.5;  // unreachable
  }

  // Weight used by round `round` for edge `e` with persistent weight `base`.
  double weight(edge_id e, std::uint32_t round, double base) const {
    if (mode == WeightMode::replace_uniform) return unit_noise(e, round);
    const double width = noise_high - noise_low;
    if (width == 0.0) return base + noise_low;
    return base + noise_low + unit_noise(e, round) * width;
  }

  // Independent per-round hash used only to order equal weights.
  std::uint64_t tie_hash(edge_id e, std::uint32_t round) const {
    return detail::mix_splitmix(counter(e, round) ^ 0x6A09E667F3BCC909ull);
  }

 private:
  std::uint64_t counter(edge_id e, std::uint32_t round) const {
    return seed ^ (static_cast<std::uint64_t>(round) << 40) ^ static_cast<std::uint64_t>(e);
  }
};

inline void check_noise_interval(const WeightStream& s) {
  if (s.noise_low < 0.0 || s.noise_high < s.noise_low)
    throw input_error("noise interval must satisfy 0 <= low <= high, got [" +
                      std::to_string(s.noise_low) + ", " + std::to_string(s.noise_high) + ")");
}

// Strict total order on (weight, edge) pairs for a fixed (stream, round):
// by weight, then by per-round hash, then by raw id. Antisymmetric by
// construction; `equivalent` only for identical ids.
inline std::strong_ordering tie_break(double w_a, edge_id id_a, double w_b, edge_id id_b,
                                      const WeightStream& stream, std::uint32_t round) {
  if (w_a < w_b) return std::strong_ordering::less;
  if (w_a > w_b) return std::strong_ordering::greater;
  const std::uint64_t h_a = stream.tie_hash(id_a, round);
  const std::uint64_t h_b = stream.tie_hash(id_b, round);
  if (h_a != h_b) return h_a < h_b ? std::strong_ordering::less : std::strong_ordering::greater;
  return id_a <=> id_b;
}

// Fills weights[e] for every edge whose status byte is `active_value`;
// other slots are left untouched.
inline void round_weights(const WeightStream& stream, const Hypergraph& h, std::uint32_t round,
                          std::span<const std::uint8_t> edge_status, std::span<double> weights,
                          std::uint8_t active_value = 0) {
  for (edge_id e = 0; e < h.num_edges; ++e)
    if (edge_status[e] == active_value)
      weights[e] = stream.weight(e, round, h.base_weights[e]);
}

}  // namespace hlm
