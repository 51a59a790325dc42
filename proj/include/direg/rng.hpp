#pragma once

#include <cmath>
#include <cstdint>

#include <Eigen/Dense>

namespace direg::rng {

/// splitmix64 step. Also serves as the mixing function for seed derivation.
inline uint64_t splitmix64_next(uint64_t& state) {
  uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Seed material for a deterministic random stream. Children are derived by
/// hashing (value, tag), so replications, surfaces and pipeline stages can
/// each own an independent stream regardless of scheduling order.
struct Seed {
  uint64_t value = 0;

  Seed child(uint64_t tag) const {
    uint64_t s = value ^ (0xa0761d6478bd642fULL + tag * 0xe7037ed1a0b428dbULL);
    uint64_t h = splitmix64_next(s);
    h ^= splitmix64_next(s);
    return Seed{h};
  }
};

/// Deterministic pseudo-random stream (splitmix64 core, Box-Muller normals).
/// Not std::<random>-based so that output is reproducible bit-for-bit
/// independently of the standard library implementation.
class Stream {
 public:
  explicit Stream(Seed seed) : state_(seed.value) {}
  explicit Stream(uint64_t seed) : state_(seed) {}

  uint64_t next_u64() { return splitmix64_next(state_); }

  /// Uniform on (0, 1]; never returns 0 so log() below is safe.
  double uniform() {
    return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
  }

  /// Standard normal draw (Box-Muller, second value cached).
  double gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * M_PI * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

  void fill_gaussian(Eigen::Ref<Eigen::ArrayXd> out) {
    for (Eigen::Index i = 0; i < out.size(); ++i) out[i] = gaussian();
  }

 private:
  uint64_t state_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace direg::rng
