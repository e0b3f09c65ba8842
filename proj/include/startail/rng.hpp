#ifndef STARTAIL_RNG_HPP
#define STARTAIL_RNG_HPP

#include <cstdint>
#include <limits>

namespace startail {

/// SplitMix64 output function.
std::uint64_t mix64(std::uint64_t z);

/// Counter-based stream: the state is a pure function of (seed, stream,
/// index), so sample `index` draws the same variates no matter which worker
/// generates it. Successive calls walk a SplitMix64 sequence from that state;
/// the k-th draw is variable k of the sample.
class CounterRng {
 public:
  using result_type = std::uint64_t;

  CounterRng(std::uint64_t seed, std::uint64_t stream, std::uint64_t index);

  result_type operator()() {
    state_ += 0x9E3779B97F4A7C15ULL;
    return mix64(state_);
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

 private:
  std::uint64_t state_;
};

}  // namespace startail

#endif  // STARTAIL_RNG_HPP
