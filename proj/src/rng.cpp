#include "startail/rng.hpp"

namespace startail {

std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

CounterRng::CounterRng(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
  std::uint64_t s = mix64(seed + 0x9E3779B97F4A7C15ULL);
  s = mix64(s ^ (stream * 0xD1B54A32D192ED03ULL + 0x632BE59BD9B4E019ULL));
  s = mix64(s ^ (index * 0x8CB92BA72F3D8DD7ULL + 0x2545F4914F6CDD1DULL));
  state_ = s;
}

}  // namespace startail
