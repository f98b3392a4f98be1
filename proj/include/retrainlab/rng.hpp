#pragma once

#include <cstdint>
#include <random>

namespace retrainlab {

// splitmix64 finalizer. Bijective on 64-bit words.
inline std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

// Substream derivation used by the trial runner:
//   substream = sm(sm(sm(master) ^ trial_index) ^ cell_index)
// with sm = splitmix64 above. Any reimplementation of this artifact must use
// the same chain to reproduce its runs.
inline std::uint64_t derive_substream(std::uint64_t master_seed,
                                      std::uint64_t trial_index,
                                      std::uint64_t cell_index) {
  return splitmix64(splitmix64(splitmix64(master_seed) ^ trial_index) ^ cell_index);
}

// Salt mixed into a trial's substream to seed its Monte Carlo test set, so the
// test draw never aliases the training draw.
inline constexpr std::uint64_t kTestSeedSalt = 0x5445535453455453ull;

// Deterministic double-precision RNG on top of mt19937_64.
//
// normal() is Box-Muller from two fresh uniforms with no pair caching, so the
// number of raw draws per variate is fixed and the per-row draw order
// documented in sample_dataset stays auditable.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  // [0, 1)
  double uniform01() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }

  // (0, 1]; safe under log()
  double uniform01_pos() {
    return static_cast<double>((gen_() >> 11) + 1) * 0x1.0p-53;
  }

  double normal() {
    const double u1 = uniform01_pos();
    const double u2 = uniform01();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace retrainlab
