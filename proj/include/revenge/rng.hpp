#ifndef REVENGE_RNG_HPP
#define REVENGE_RNG_HPP

#include <cstdint>
#include <random>

namespace revenge {

// All sampling in the library draws from a 64-bit Mersenne Twister
// (std::mt19937_64). Bounded integers come from `uniform_below`, which does
// not depend on the standard library's distribution implementations, so a
// seed yields the same stream on every platform.
using Engine = std::mt19937_64;

/// Unbiased integer in [0, bound), bound >= 1 (rejection on the top range).
template<typename URBG>
std::uint64_t uniform_below(URBG &rng, std::uint64_t bound)
{
  static_assert(URBG::min() == 0 && URBG::max() == ~std::uint64_t{0},
                "uniform_below needs a full 64-bit generator");
  if (bound <= 1)
    return 0;
  std::uint64_t const limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  for (;;) {
    std::uint64_t x = rng();
    if (x < limit)
      return x % bound;
  }
}

inline Engine make_engine(std::uint64_t seed)
{
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32)};
  return Engine(seq);
}

/// Independent stream `stream` derived from `seed`; std::seed_seq is fully
/// specified by the standard, so streams are portable.
inline Engine make_stream(std::uint64_t seed, std::uint64_t stream)
{
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream),
                    static_cast<std::uint32_t>(stream >> 32), 0x5eedu};
  return Engine(seq);
}

} // namespace revenge

#endif // REVENGE_RNG_HPP
