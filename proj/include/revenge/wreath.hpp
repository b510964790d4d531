#ifndef REVENGE_WREATH_HPP
#define REVENGE_WREATH_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "revenge/perm.hpp"
#include "revenge/rng.hpp"

namespace revenge {

using TwistVector = std::vector<std::uint8_t>;

/**
 * An element (rho, sigma) of the wreath product C_K wr S_n.
 *
 * The twist rho_j is recorded at the destination position j. The group law is
 *
 *   (rho, sigma) (theta, tau) = (rho + sigma.theta, sigma tau),
 *   (sigma.theta)_j = theta_{sigma^-1(j)},
 *
 * and the same formula gives a left action on twist vectors:
 * (rho, sigma) . c = rho + sigma.c.
 */
template<unsigned K>
class Wreath {
  static_assert(K >= 2 && K <= 255, "twist modulus out of range");

public:
  static constexpr unsigned modulus = K;

  Wreath() = default;

  /// Throws std::invalid_argument on length mismatch or a residue >= K.
  Wreath(TwistVector twists, Perm perm)
  : twists_(std::move(twists)), perm_(std::move(perm))
  {
    if (twists_.size() != perm_.degree())
      throw std::invalid_argument("Wreath: twist vector length " +
                                  std::to_string(twists_.size()) +
                                  " does not match degree " +
                                  std::to_string(perm_.degree()));
    for (auto t : twists_)
      if (t >= K)
        throw std::invalid_argument("Wreath: twist residue out of range");
  }

  static Wreath identity(std::size_t n)
  { return Wreath(TwistVector(n, 0), Perm::identity(n)); }

  std::size_t degree() const noexcept { return perm_.degree(); }
  TwistVector const &twists() const noexcept { return twists_; }
  Perm const &perm() const noexcept { return perm_; }

  bool is_identity() const noexcept
  {
    for (auto t : twists_)
      if (t != 0)
        return false;
    return perm_.is_identity();
  }

  friend Wreath operator*(Wreath const &a, Wreath const &b)
  {
    check_degree(a, b.degree());
    Wreath r;
    r.perm_ = a.perm_ * b.perm_;
    r.twists_ = a.twists_;
    // (sigma.theta)_{sigma(i)} = theta_i
    for (std::size_t i = 0; i < b.twists_.size(); ++i) {
      auto &slot = r.twists_[a.perm_[i]];
      slot = static_cast<std::uint8_t>((slot + b.twists_[i]) % K);
    }
    return r;
  }

  /// (-(sigma^-1 . rho), sigma^-1).
  Wreath inverse() const
  {
    Wreath r;
    r.perm_ = perm_.inverse();
    r.twists_.resize(twists_.size());
    for (std::size_t j = 0; j < twists_.size(); ++j)
      r.twists_[j] = static_cast<std::uint8_t>((K - twists_[perm_[j]]) % K);
    return r;
  }

  /// rho + sigma.c
  TwistVector act(std::span<std::uint8_t const> c) const
  {
    if (c.size() != twists_.size())
      throw std::invalid_argument("Wreath::act: vector length mismatch");
    TwistVector out = twists_;
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i] >= K)
        throw std::invalid_argument("Wreath::act: residue out of range");
      auto &slot = out[perm_[i]];
      slot = static_cast<std::uint8_t>((slot + c[i]) % K);
    }
    return out;
  }

  unsigned twist_sum() const noexcept
  {
    unsigned s = 0;
    for (auto t : twists_)
      s += t;
    return s % K;
  }

  /// Faithful action on K*n points: (i, b) -> (sigma(i), b + rho_{sigma(i)}),
  /// with point (i, b) stored at i*K + b.
  Perm to_sticker_perm() const
  {
    std::vector<Perm::point_type> img(twists_.size() * K);
    for (std::size_t i = 0; i < twists_.size(); ++i) {
      std::size_t const dst = perm_[i];
      for (unsigned b = 0; b < K; ++b)
        img[i * K + b] =
            static_cast<Perm::point_type>(dst * K + (b + twists_[dst]) % K);
    }
    return Perm(std::move(img));
  }

  template<typename URBG>
  static Wreath random(std::size_t n, URBG &rng)
  {
    TwistVector t(n);
    for (auto &x : t)
      x = static_cast<std::uint8_t>(uniform_below(rng, K));
    return Wreath(std::move(t), random_perm(n, rng));
  }

  friend bool operator==(Wreath const &, Wreath const &) = default;
  friend auto operator<=>(Wreath const &, Wreath const &) = default;

private:
  static void check_degree(Wreath const &a, std::size_t n)
  {
    if (a.degree() != n)
      throw std::invalid_argument("Wreath: degree mismatch in composition");
  }

  TwistVector twists_;
  Perm perm_;
};

using EdgeWreath = Wreath<2>;
using CornerWreath = Wreath<3>;

template<unsigned K>
Wreath<K> w_compose(Wreath<K> const &a, Wreath<K> const &b) { return a * b; }

template<unsigned K>
Wreath<K> w_inverse(Wreath<K> const &a) { return a.inverse(); }

template<unsigned K>
TwistVector act_on_vector(Wreath<K> const &a, std::span<std::uint8_t const> c)
{ return a.act(c); }

} // namespace revenge

#endif // REVENGE_WREATH_HPP
