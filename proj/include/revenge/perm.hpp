#ifndef REVENGE_PERM_HPP
#define REVENGE_PERM_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "revenge/rng.hpp"

namespace revenge {

/// A bijection of {0, ..., n-1}, stored as its image table.
///
/// Composition is right-to-left: (p * q)(i) == p(q(i)), so q acts first.
class Perm {
public:
  using point_type = std::uint16_t;

  Perm() = default;

  /// Throws std::invalid_argument unless `images` is a bijection.
  explicit Perm(std::vector<point_type> images) : images_(std::move(images))
  {
    if (images_.size() > max_degree)
      throw std::invalid_argument("Perm: degree too large");
    std::vector<bool> seen(images_.size(), false);
    for (std::size_t i = 0; i < images_.size(); ++i) {
      point_type v = images_[i];
      if (v >= images_.size())
        throw std::invalid_argument("Perm: image " + std::to_string(v) +
                                    " out of range at position " +
                                    std::to_string(i));
      if (seen[v])
        throw std::invalid_argument("Perm: repeated image " +
                                    std::to_string(v));
      seen[v] = true;
    }
  }

  static Perm identity(std::size_t n)
  {
    Perm p;
    p.images_.resize(n);
    for (std::size_t i = 0; i < n; ++i)
      p.images_[i] = static_cast<point_type>(i);
    return p;
  }

  /// Builds a permutation of degree n from disjoint cycles, e.g. {{0, 1}, {2, 3, 4}}.
  static Perm from_cycles(std::size_t n,
                          std::initializer_list<std::initializer_list<std::size_t>> cycles)
  {
    std::vector<point_type> img(n);
    for (std::size_t i = 0; i < n; ++i)
      img[i] = static_cast<point_type>(i);
    for (auto const &cyc : cycles) {
      std::vector<std::size_t> c(cyc);
      for (std::size_t j = 0; j < c.size(); ++j) {
        if (c[j] >= n)
          throw std::invalid_argument("Perm::from_cycles: point out of range");
        img[c[j]] = static_cast<point_type>(c[(j + 1) % c.size()]);
      }
    }
    return Perm(std::move(img));
  }

  std::size_t degree() const noexcept { return images_.size(); }

  point_type operator()(std::size_t i) const noexcept { return images_[i]; }
  point_type operator[](std::size_t i) const noexcept { return images_[i]; }

  std::span<point_type const> images() const noexcept { return images_; }

  bool is_identity() const noexcept
  {
    for (std::size_t i = 0; i < images_.size(); ++i)
      if (images_[i] != i)
        return false;
    return true;
  }

  Perm inverse() const
  {
    Perm r;
    r.images_.resize(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i)
      r.images_[images_[i]] = static_cast<point_type>(i);
    return r;
  }

  /// Disjoint cycles including fixed points, each starting at its smallest point.
  std::vector<std::vector<std::size_t>> cycles() const
  {
    std::vector<std::vector<std::size_t>> out;
    std::vector<bool> seen(images_.size(), false);
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (seen[i])
        continue;
      std::vector<std::size_t> c;
      for (std::size_t j = i; !seen[j]; j = images_[j]) {
        seen[j] = true;
        c.push_back(j);
      }
      out.push_back(std::move(c));
    }
    return out;
  }

  /// Sorted cycle lengths (descending), fixed points included.
  std::vector<std::size_t> cycle_type() const
  {
    std::vector<std::size_t> t;
    for (auto const &c : cycles())
      t.push_back(c.size());
    std::sort(t.rbegin(), t.rend());
    return t;
  }

  /// +1 or -1, computed as (-1)^(n - #cycles).
  int sign() const
  {
    std::size_t ncycles = 0;
    std::vector<bool> seen(images_.size(), false);
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (seen[i])
        continue;
      ++ncycles;
      for (std::size_t j = i; !seen[j]; j = images_[j])
        seen[j] = true;
    }
    return ((images_.size() - ncycles) % 2 == 0) ? 1 : -1;
  }

  friend Perm operator*(Perm const &p, Perm const &q)
  {
    if (p.degree() != q.degree())
      throw std::invalid_argument("Perm: degree mismatch in composition");
    Perm r;
    r.images_.resize(p.images_.size());
    for (std::size_t i = 0; i < r.images_.size(); ++i)
      r.images_[i] = p.images_[q.images_[i]];
    return r;
  }

  friend bool operator==(Perm const &, Perm const &) = default;
  friend auto operator<=>(Perm const &, Perm const &) = default;

  std::string to_string() const
  {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < images_.size(); ++i)
      os << (i ? " " : "") << images_[i];
    os << ']';
    return os.str();
  }

  static constexpr std::size_t max_degree = 65535;

private:
  std::vector<point_type> images_;
};

inline Perm compose(Perm const &p, Perm const &q) { return p * q; }
inline Perm inverse(Perm const &p) { return p.inverse(); }
inline int sign(Perm const &p) { return p.sign(); }

/// Uniform permutation of degree n by Fisher-Yates over `uniform_below`.
template<typename URBG>
Perm random_perm(std::size_t n, URBG &rng)
{
  std::vector<Perm::point_type> img(n);
  for (std::size_t i = 0; i < n; ++i)
    img[i] = static_cast<Perm::point_type>(i);
  for (std::size_t i = n; i > 1; --i) {
    auto j = static_cast<std::size_t>(uniform_below(rng, i));
    std::swap(img[i - 1], img[j]);
  }
  return Perm(std::move(img));
}

} // namespace revenge

#endif // REVENGE_PERM_HPP
