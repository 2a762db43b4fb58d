#include "angulate/rng.hpp"

#include "angulate/error.hpp"

namespace angulate {

std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

namespace {

std::uint64_t mix_seed(std::uint64_t master, std::uint64_t index) {
  return splitmix64(master ^ splitmix64(index + 0x9e3779b97f4a7c15ULL));
}

}  // namespace

RngStream::RngStream(std::uint64_t master_seed, std::uint64_t stream_index)
    : master_seed_(master_seed),
      stream_index_(stream_index),
      engine_(mix_seed(master_seed, stream_index)) {}

std::uint64_t RngStream::uniform_below(std::uint64_t bound) {
  if (bound == 0) throw ParameterError("uniform_below: bound must be positive");
  // Reject the low 2^64 mod bound values so every residue is equally likely.
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t r = engine_();
    if (r >= threshold) return r % bound;
  }
}

double RngStream::uniform01() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

RngStream RngStream::child(std::uint64_t index) const {
  return RngStream(mix_seed(master_seed_, stream_index_), index);
}

}  // namespace angulate
