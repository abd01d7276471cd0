#ifndef LEOFUSION_RNG_HPP
#define LEOFUSION_RNG_HPP

#include <cmath>
#include <cstdint>

namespace leofusion {

// splitmix64 step (Steele/Lea/Flood). Used both as a stream generator and
// as the seed-derivation hash, so substreams stay reproducible across
// platforms without depending on std:: distribution internals.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Derive a child seed from a parent seed and a stream tag.
inline std::uint64_t derive_seed(std::uint64_t parent, std::uint64_t tag) {
  std::uint64_t s = parent ^ (0x9e3779b97f4a7c15ULL * (tag + 1));
  std::uint64_t a = splitmix64(s);
  std::uint64_t b = splitmix64(s);
  return a ^ (b << 1);
}

// Small deterministic generator. Not std::mt19937_64 on purpose: the
// byte-identical-output contract must not hinge on library internals.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {
    // warm up so near-zero seeds decorrelate
    splitmix64(state_);
    splitmix64(state_);
  }

  std::uint64_t next_u64() { return splitmix64(state_); }

  // uniform in [0, 1)
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

  // exponential inter-arrival with the given rate (mean 1/rate)
  double exponential(double rate) {
    return -std::log1p(-next_double()) / rate;
  }

  // integer in [0, n)
  std::uint64_t next_below(std::uint64_t n) { return next_u64() % n; }

 private:
  std::uint64_t state_;
};

}  // namespace leofusion

#endif  // LEOFUSION_RNG_HPP
