#ifndef DURFEE_RNG_HPP
#define DURFEE_RNG_HPP

#include <cstdint>
#include <random>

namespace durfee {

uint64_t splitmix64(uint64_t x);

// Combine a user seed with an instance index into an independent stream seed.
uint64_t mix_seed(uint64_t seed, uint64_t index);

// mt19937_64 with hand-rolled bounded draws. uniform_int_distribution is
// implementation-defined, which would break bit-for-bit reproducibility of
// seeded runs across toolchains; the modulo bias is irrelevant at our ranges.
class DetRng {
 public:
  explicit DetRng(uint64_t seed) : eng_(seed) {}

  uint64_t next() { return eng_(); }

  // Inclusive range draw.
  long long range(long long lo, long long hi);

  // true with probability num/den.
  bool chance(uint64_t num, uint64_t den);

 private:
  std::mt19937_64 eng_;
};

}  // namespace durfee

#endif
