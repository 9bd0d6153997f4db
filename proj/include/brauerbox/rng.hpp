#pragma once

#include <cstdint>
#include <random>

namespace brauerbox {

// Seeded generator. Range reduction is done by hand so that a given seed
// produces the same stream on every standard library.
class Rng {
public:
  explicit Rng(std::uint64_t seed = 0) : engine_(seed ^ 0x9e3779b97f4a7c15ULL) {}

  std::uint64_t next() { return engine_(); }

  // uniform-ish in [0, n); n > 0
  std::uint64_t below(std::uint64_t n) { return engine_() % n; }

private:
  std::mt19937_64 engine_;
};

} // namespace brauerbox
