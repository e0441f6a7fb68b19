#pragma once

#include <gmpxx.h>

#include <cstdint>

namespace omega {

// splitmix64; deterministic across platforms and thread counts.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Independent stream for sample #index under a suite seed. Sample i is a
// pure function of (seed, i), so parallel scans see the same data.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t s = seed ^ (0xD1B54A32D192ED03ULL * (index + 1));
  return splitmix64(s);
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() { return splitmix64(state_); }

  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }

  // inclusive bounds
  long range(long lo, long hi) {
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

 private:
  std::uint64_t state_;
};

// Small random rational: numerator in [-num_mag, num_mag], denominator in
// [1, den_max]; exactly zero once in `zero_one_in` draws on average.
inline mpq_class random_rational(Rng& rng, long num_mag, long den_max, unsigned zero_one_in = 16) {
  if (zero_one_in != 0 && rng.below(zero_one_in) == 0) return mpq_class(0);
  long num = rng.range(-num_mag, num_mag);
  long den = rng.range(1, den_max);
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace omega
