#ifndef SQBASIS_RNG_HPP
#define SQBASIS_RNG_HPP

#include <complex>
#include <cstdint>

namespace sqbasis {

/// Seeded splitmix64 generator. Hand-rolled so that streams are
/// bit-reproducible across platforms and standard libraries, which the
/// persisted outputs rely on.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  /// Independent stream for (seed, stream, trial), used to make per-trial
  /// sampling order-free and thread-safe.
  static Rng forTrial(std::uint64_t seed, std::uint64_t stream, std::uint64_t trial) {
    Rng mix(seed);
    mix.state_ ^= 0x9e3779b97f4a7c15ull * (stream + 1);
    mix.state_ ^= 0xbf58476d1ce4e5b9ull * (trial + 1);
    mix.nextUInt();
    return mix;
  }

  std::uint64_t nextUInt() {
    state_ += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(nextUInt() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Uniform integer in [lo, hi] inclusive.
  int uniformInt(int lo, int hi) {
    return lo + static_cast<int>(nextUInt() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  /// Uniform on the complex unit square [-1,1] x [-1,1].
  std::complex<double> complexInUnitSquare() {
    return {uniform(-1.0, 1.0), uniform(-1.0, 1.0)};
  }

private:
  std::uint64_t state_;
};

}  // namespace sqbasis

#endif  // SQBASIS_RNG_HPP
