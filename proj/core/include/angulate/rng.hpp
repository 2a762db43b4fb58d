#pragma once

#include <cstdint>
#include <random>

namespace angulate {

// Seeded 64-bit stream. The engine is std::mt19937_64, whose output sequence
// is fixed by the standard; the seed is derived from (master_seed,
// stream_index) with splitmix64:
//
//   seed = splitmix64(master_seed ^ splitmix64(stream_index + 0x9e3779b97f4a7c15))
//
// All derived draws (bounded integers, unit doubles) are computed here rather
// than through <random> distributions, so output is bit-identical across
// standard libraries.
class RngStream {
 public:
  RngStream(std::uint64_t master_seed, std::uint64_t stream_index);

  std::uint64_t master_seed() const noexcept { return master_seed_; }
  std::uint64_t stream_index() const noexcept { return stream_index_; }

  std::uint64_t next_u64() { return engine_(); }

  // Exactly uniform on [0, bound). bound must be positive.
  std::uint64_t uniform_below(std::uint64_t bound);

  // Uniform on [0, 1) with 53 random bits.
  double uniform01();

  // Independent stream keyed on this stream's identity (not its state), so
  // children can be created in any order.
  RngStream child(std::uint64_t index) const;

 private:
  std::uint64_t master_seed_;
  std::uint64_t stream_index_;
  std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x) noexcept;

}  // namespace angulate
