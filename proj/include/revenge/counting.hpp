#ifndef REVENGE_COUNTING_HPP
#define REVENGE_COUNTING_HPP

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <thread>
#include <vector>

#include "revenge/cube.hpp"
#include "revenge/numeric.hpp"
#include "revenge/oracle.hpp"
#include "revenge/rng.hpp"

namespace revenge {

// Group orders of the 4x4x4 model, from closed formulas.

/// |T| = 2^24 24! 3^8 8! 24!
inline BigInt order_T()
{ return power(2, 24) * factorial(24) * power(3, 8) * factorial(8) * factorial(24); }

/// |T'| = 24! 3^8 8! 24!
inline BigInt order_T_prime()
{ return factorial(24) * power(3, 8) * factorial(8) * factorial(24); }

/// |L| = |T'| / 6: kernel of the surjection chi onto C3 x {+-1}.
inline BigInt order_L() { return order_T_prime() / 6; }

/// I = I_2^12 x S_4^6.
inline BigInt order_I() { return power(2, 12) * power(24, 6); }

/// I n L: trivial edges and corners, even block-preserving center perms.
inline BigInt order_I_cap_L() { return power(24, 6) / 2; }

/// I n T': no edge flips forces the identity edge perm, leaving S_4^6.
inline BigInt order_I_cap_T_prime() { return power(24, 6); }

/// #I\T/T' = (orbits of I_2 on C2^2)^12.
inline BigInt count_edge_classes()
{ return power(static_cast<unsigned>(oracle::i2_orbits().size()), 12); }

/// #I\T/L = #I\T/T' x (orbits of I_H on C3 x {+-1}).
inline BigInt count_marked_classes()
{
  return count_edge_classes() *
         static_cast<unsigned>(oracle::corner_sign_orbits(Mode::marked).size());
}

/// #(I n T')\T'/L = orbits of I n T' on C3 x {+-1}.
inline BigInt count_mechanical_classes()
{ return BigInt(oracle::corner_sign_orbits(Mode::mechanical).size()); }

inline BigInt count_classes(Mode mode)
{ return mode == Mode::marked ? count_marked_classes() : count_mechanical_classes(); }

/// #IL / #T with #IL = #I #L / #(I n L).
inline BigRational prob_marked_exact()
{
  return BigRational(order_I() * order_L(), order_I_cap_L() * order_T());
}

/// #(I n T')L / #T' with #(I n T' n L) = #(I n L).
inline BigRational prob_mechanical_exact()
{
  return BigRational(order_I_cap_T_prime() * order_L(),
                     order_I_cap_L() * order_T_prime());
}

inline BigRational prob_exact(Mode mode)
{ return mode == Mode::marked ? prob_marked_exact() : prob_mechanical_exact(); }

struct MonteCarloResult {
  std::uint64_t hits = 0;
  std::uint64_t samples = 0;
  BigRational estimate;
  double std_error = 0.0; // sqrt(p(1-p)/n) at the estimate
};

/// Samples per independently seeded stream.
inline constexpr std::uint64_t mc_stream_size = 1u << 16;

/// Hits among `count` samples of stream `stream`.
inline std::uint64_t mc_stream_hits(Mode mode, std::uint64_t seed,
                                    std::uint64_t stream, std::uint64_t count)
{
  Engine rng = make_stream(seed, stream);
  std::uint64_t hits = 0;
  for (std::uint64_t s = 0; s < count; ++s) {
    if (mode == Mode::marked)
      hits += in_IL(random_T(rng)) ? 1 : 0;
    else
      hits += solvable_mechanical(random_T_prime(rng)) ? 1 : 0;
  }
  return hits;
}

/**
 * Fraction of uniform random assemblies that are solvable. Samples are split
 * into streams of `mc_stream_size`; stream i is seeded from (seed, i), so the
 * result depends only on (mode, n, seed), never on `workers`.
 */
inline MonteCarloResult monte_carlo_prob(Mode mode, std::uint64_t n,
                                         std::uint64_t seed, unsigned workers = 0)
{
  if (n == 0)
    throw std::invalid_argument("monte_carlo_prob: sample count must be positive");
  if (workers == 0)
    workers = std::max(1u, std::thread::hardware_concurrency());
  std::uint64_t const streams = (n + mc_stream_size - 1) / mc_stream_size;
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, streams));

  std::vector<std::uint64_t> hits(streams, 0);
  std::atomic<std::uint64_t> next{0};
  auto work = [&] {
    for (std::uint64_t i = next++; i < streams; i = next++) {
      std::uint64_t const begin = i * mc_stream_size;
      std::uint64_t const count = std::min(mc_stream_size, n - begin);
      hits[i] = mc_stream_hits(mode, seed, i, count);
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w)
    pool.emplace_back(work);
  work();
  for (auto &t : pool)
    t.join();

  MonteCarloResult r;
  r.samples = n;
  for (auto h : hits)
    r.hits += h;
  r.estimate = BigRational(BigInt(r.hits), BigInt(n));
  double const p = static_cast<double>(r.hits) / static_cast<double>(n);
  r.std_error = std::sqrt(p * (1.0 - p) / static_cast<double>(n));
  return r;
}

} // namespace revenge

#endif // REVENGE_COUNTING_HPP
