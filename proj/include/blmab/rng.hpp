#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

namespace blmab {

// splitmix64 step; used to mix seed material, not as the main generator.
inline std::uint64_t splitmix64(std::uint64_t& x) {
  x += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = x;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Stream tags keep the per-run substreams (traffic, utilization, policy, ...)
// decorrelated even though they share one master seed.
enum class Stream : std::uint64_t {
  scenario = 1,    // template/tenant generation
  traffic = 2,     // request arrivals
  utilization = 3, // per-round used PRBs
  policy = 4,      // policy-internal randomness (shuffles, exploration)
  training = 5,    // fictitious training draws
  bandit = 6,      // synthetic bandit rewards
};

// derive_seed(master, run, stream): one-way mix so that neighbouring run
// indices or streams do not produce correlated mt19937_64 states.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t run,
                                 Stream stream) {
  std::uint64_t x = master;
  (void)splitmix64(x);
  x ^= 0x517cc1b727220a95ULL * (run + 1);
  (void)splitmix64(x);
  x ^= 0x2545f4914f6cdd1dULL * static_cast<std::uint64_t>(stream);
  return splitmix64(x);
}

// Thin wrapper over mt19937_64 with hand-rolled transforms.  The standard
// distribution objects are implementation-defined, which would break
// bit-reproducibility of traces across toolchains; everything here is pinned
// to the raw 64-bit output stream.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  // Uniform in [0, 1) using the top 53 bits.
  double uniform01() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) {
    if (!(lo <= hi)) throw std::invalid_argument("uniform: lo > hi");
    return lo + (hi - lo) * uniform01();
  }

  // Inclusive integer range, unbiased via rejection.
  long long uniform_int(long long lo, long long hi) {
    if (lo > hi) throw std::invalid_argument("uniform_int: lo > hi");
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    if (span == 0) return static_cast<long long>(gen_());  // full range
    std::uint64_t limit = std::uint64_t(-1) - std::uint64_t(-1) % span;
    std::uint64_t v;
    do {
      v = gen_();
    } while (v >= limit);
    return lo + static_cast<long long>(v % span);
  }

  // Exponential with the given rate (mean 1/rate).
  double exponential_rate(double rate) {
    if (!(rate > 0)) throw std::invalid_argument("exponential: rate <= 0");
    return -std::log1p(-uniform01()) / rate;
  }

  // Exponential with the given mean.
  double exponential_mean(double mean) {
    if (!(mean > 0)) throw std::invalid_argument("exponential: mean <= 0");
    return -mean * std::log1p(-uniform01());
  }

  // Pareto (type I) with shape a and scale x_m: X = x_m * U^{-1/a}.
  double pareto(double shape, double scale) {
    if (!(shape > 0) || !(scale > 0))
      throw std::invalid_argument("pareto: shape and scale must be > 0");
    double u = 1.0 - uniform01();  // in (0, 1]
    return scale * std::pow(u, -1.0 / shape);
  }

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j =
          static_cast<std::size_t>(uniform_int(0, static_cast<long long>(i) - 1));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace blmab
