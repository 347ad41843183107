#include "durfee/rng.hpp"

#include <stdexcept>

namespace durfee {

uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

uint64_t mix_seed(uint64_t seed, uint64_t index) {
  return splitmix64(splitmix64(seed) ^ (0x517cc1b727220a95ULL * (index + 1)));
}

long long DetRng::range(long long lo, long long hi) {
  if (lo > hi) throw std::invalid_argument("DetRng::range: empty range");
  uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
  return lo + static_cast<long long>(next() % span);
}

bool DetRng::chance(uint64_t num, uint64_t den) { return next() % den < num; }

}  // namespace durfee
