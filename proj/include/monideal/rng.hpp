#pragma once

#include <cstdint>
#include <random>

namespace monideal {

/// Deterministic random source for corpora and property tests.
///
/// The generator is std::mt19937_64 seeded directly with the 64-bit seed, and
/// uniform(lo, hi) is defined as lo + next() % (hi - lo + 1). Both are fully
/// specified, so a seed identifies the same stream on every platform and in
/// any reimplementation. (The slight modulo bias is irrelevant here;
/// reproducibility is the contract.)
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next() { return gen_(); }

  /// Uniform draw in [lo, hi], inclusive.
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    if (lo > hi) throw std::invalid_argument("uniform: empty range");
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(next() % span);
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace monideal
