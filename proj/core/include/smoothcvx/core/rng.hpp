#pragma once

#include <array>
#include <cstddef>
#include <cstdint>

namespace smoothcvx {

// Philox4x32-10 block function. Exposed for known-answer tests.
std::array<std::uint32_t, 4> philox4x32_10(std::array<std::uint32_t, 4> ctr,
                                           std::array<std::uint32_t, 2> key);

// Counter-based generator: output block i is philox(counter = (i, stream), key = seed).
// Two generators with equal (seed, stream) produce identical streams on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0);

  std::uint64_t next_u64();
  double uniform();  // [0, 1), 53 random bits
  double normal();   // standard normal via Box-Muller
  std::size_t index(std::size_t n);  // uniform over {0, ..., n-1}, unbiased

  // Independent generator on another stream with the same seed.
  Rng split(std::uint64_t stream) const { return Rng(seed_, stream); }

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream() const { return stream_; }
  std::uint64_t blocks_used() const { return block_; }

 private:
  void refill();

  std::uint64_t seed_;
  std::uint64_t stream_;
  std::uint64_t block_ = 0;
  std::array<std::uint32_t, 4> buf_{};
  int pos_ = 4;  // in 32-bit words; 4 means empty
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace smoothcvx
