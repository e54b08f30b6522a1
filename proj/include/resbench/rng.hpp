#pragma once

#include <cstdint>
#include <initializer_list>

namespace resbench {

// SplitMix64 output function; used to whiten seeds and derive substreams.
uint64_t mix64(uint64_t x);

// Hash a master seed together with a path of indices into the seed of an
// independent stream. Every sampled artifact in a run is keyed this way so
// any record can be replayed from (master seed, record identity) alone.
uint64_t derive_seed(uint64_t master, std::initializer_list<uint64_t> path);

// xoshiro256** seeded through SplitMix64. All draws are built on next() with
// fixed arithmetic, so sequences are identical across platforms and standard
// libraries (std::uniform_int_distribution would not be).
class Rng {
 public:
  explicit Rng(uint64_t seed);

  uint64_t next();
  uint64_t uniform_int(uint64_t n);  // uniform over [0, n), n >= 1
  double uniform();                  // uniform over [0, 1)
  bool bernoulli(double p);

 private:
  uint64_t s_[4];
};

}  // namespace resbench
