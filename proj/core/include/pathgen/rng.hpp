#pragma once

#include <cassert>
#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <random>

namespace pathgen {

// Stream determinism contract: mt19937_64 output is bit-exact across
// conforming standard libraries, and every draw helper below consumes
// exactly one engine value. Results are therefore reproducible across
// platforms from the seed alone. The int/index mappers use a 128-bit
// multiply instead of std::uniform_int_distribution, whose draw count
// is implementation-defined.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform over [0, n); exactly one draw. Bias is at most n / 2^64.
  std::size_t next_index(std::size_t n) {
    assert(n > 0);
    return static_cast<std::size_t>(scale(next_u64(), n));
  }

  // Uniform over the inclusive integer range [lo, hi]; exactly one draw.
  std::int64_t next_int(std::int64_t lo, std::int64_t hi) {
    assert(lo <= hi);
    std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo);
    std::uint64_t u = next_u64();
    if (span == ~std::uint64_t{0}) {
      return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + u);
    }
    return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + scale(u, span + 1));
  }

  // Uniform over the half-open real range [lo, hi); exactly one draw.
  double next_real(double lo, double hi) {
    assert(lo <= hi);
    double u01 = static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    double v = lo + u01 * (hi - lo);
    if (v >= hi) v = std::nextafter(hi, lo);
    if (v < lo) v = lo;
    return v;
  }

 private:
  static std::uint64_t scale(std::uint64_t u, std::uint64_t n) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(u) * static_cast<unsigned __int128>(n)) >> 64);
  }

  std::mt19937_64 engine_;
};

// 64-bit finalizer mix; bijective, strong avalanche.
inline constexpr std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Pure derivation of a child seed from a base seed and a tag tuple.
// Used to give every (method, n, requested, trial) benchmark cell its own
// independent, reproducible stream: changing one tag changes the stream,
// adding trials never perturbs earlier trials.
inline constexpr std::uint64_t derive_seed(std::uint64_t base,
                                           std::initializer_list<std::uint64_t> tags) {
  std::uint64_t h = mix64(base);
  for (std::uint64_t t : tags) h = mix64(h ^ mix64(t));
  return h;
}

}  // namespace pathgen
