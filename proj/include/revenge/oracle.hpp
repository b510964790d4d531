#ifndef REVENGE_ORACLE_HPP
#define REVENGE_ORACLE_HPP

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "revenge/cube.hpp"
#include "revenge/numeric.hpp"

// Brute-force ground truth: orbit tables of the small actions behind the
// double-coset counts, and full enumeration of scaled-down models of T, L, I.
namespace revenge::oracle {

/// Orbits of the group generated by `gens` on `points`, in order of first
/// appearance; `act(g, p)` must return a member of `points`.
template<typename Point, typename Gen, typename Act>
std::vector<std::vector<Point>> orbits(std::vector<Point> const &points,
                                       std::vector<Gen> const &gens, Act act)
{
  std::map<Point, bool> seen;
  for (auto const &p : points)
    seen.emplace(p, false);
  std::vector<std::vector<Point>> out;
  for (auto const &start : points) {
    if (seen.at(start))
      continue;
    std::vector<Point> orb{start};
    seen.at(start) = true;
    for (std::size_t i = 0; i < orb.size(); ++i)
      for (auto const &g : gens) {
        Point q = act(g, orb[i]);
        auto it = seen.find(q);
        if (it == seen.end())
          throw std::logic_error("orbits: action leaves the point set");
        if (!it->second) {
          it->second = true;
          orb.push_back(q);
        }
      }
    out.push_back(std::move(orb));
  }
  return out;
}

/// All elements of the group generated by `gens` (closure under `mul`).
template<typename Elem, typename Mul>
std::vector<Elem> closure(Elem const &identity, std::vector<Elem> const &gens, Mul mul)
{
  std::vector<Elem> elems{identity};
  std::map<Elem, bool> seen{{identity, true}};
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (auto const &g : gens) {
      Elem e = mul(elems[i], g);
      if (seen.emplace(e, true).second)
        elems.push_back(std::move(e));
    }
  return elems;
}

/// Orbit count by Burnside's lemma: average number of fixed points.
template<typename Point, typename Elem, typename Act>
BigRational burnside_count(std::vector<Point> const &points,
                           std::vector<Elem> const &group, Act act)
{
  BigInt fixed = 0;
  for (auto const &g : group)
    for (auto const &p : points)
      if (act(g, p) == p)
        ++fixed;
  return BigRational(fixed, BigInt(group.size()));
}

using PairFlips = std::array<std::uint8_t, 2>;

inline std::vector<PairFlips> pair_flip_points()
{ return {{0, 0}, {0, 1}, {1, 0}, {1, 1}}; }

/// I_2 = {((0,0), id), ((1,1), (0 1))} inside C2 wr S2.
inline std::vector<EdgeWreath> i2_elements()
{
  return {EdgeWreath::identity(2),
          EdgeWreath({1, 1}, Perm::from_cycles(2, {{0, 1}}))};
}

inline PairFlips i2_act(EdgeWreath const &g, PairFlips const &c)
{
  auto v = g.act(c);
  return {v[0], v[1]};
}

/// Orbits of I_2 on C2^2 under (rho, sigma).c = rho + sigma.c.
inline std::vector<std::vector<PairFlips>> i2_orbits()
{ return orbits(pair_flip_points(), i2_elements(), i2_act); }

/// Coordinate of t in H/H' = C3 x {+-1}: (corner twist sum, sign product).
using CornerSign = std::pair<unsigned, int>;

inline CornerSign corner_sign_coordinate(CubeElem const &t)
{ return {t.corners.twist_sum(), t.corners.perm().sign() * t.centers.sign()}; }

inline std::vector<CornerSign> corner_sign_points()
{
  std::vector<CornerSign> pts;
  for (int eps : {1, -1})
    for (unsigned th = 0; th < 3; ++th)
      pts.push_back({th, eps});
  return pts;
}

/// A representative element of T with the given corner/sign coordinate.
inline CubeElem corner_sign_representative(CornerSign p, Shape shape = revenge_shape)
{
  CubeElem t = CubeElem::identity(shape);
  TwistVector theta(shape.corners, 0);
  if (shape.corners > 0)
    theta[0] = static_cast<std::uint8_t>(p.first);
  t.corners = CornerWreath(std::move(theta), Perm::identity(shape.corners));
  if (p.second < 0) {
    if (shape.centers() >= 2)
      t.centers = Perm::from_cycles(shape.centers(), {{0, 1}});
    else
      t.corners = t.corners * CornerWreath(TwistVector(shape.corners, 0),
                                           Perm::from_cycles(shape.corners, {{0, 1}}));
  }
  return t;
}

/// Left action of the indistinguishable-piece group on C3 x {+-1}: the marked
/// mode uses all of I, the mechanical mode I n T'. Computed by multiplying real
/// group elements and reading off the coordinate of the product.
inline std::vector<std::vector<CornerSign>> corner_sign_orbits(Mode mode,
                                                               Shape shape = revenge_shape)
{
  std::vector<CubeElem> gens;
  for (auto &g : i_generators(shape))
    if (mode == Mode::marked || in_T_prime(g))
      gens.push_back(std::move(g));
  auto act = [shape](CubeElem const &i, CornerSign const &p) {
    return corner_sign_coordinate(i * corner_sign_representative(p, shape));
  };
  return orbits(corner_sign_points(), gens, act);
}

/// A scaled-down model: T, T', L, I defined by the same formulas on `shape`.
struct MiniModel {
  Shape shape{2, 2, 1};
  std::uint64_t cap = 10'000'000;
};

class ModelTooLarge : public std::length_error {
public:
  using std::length_error::length_error;
};

namespace detail {

inline std::uint64_t perm_rank(Perm const &p)
{
  std::uint64_t r = 0;
  std::size_t const n = p.degree();
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t smaller = 0;
    for (std::size_t j = i + 1; j < n; ++j)
      if (p[j] < p[i])
        ++smaller;
    r = r * (n - i) + smaller;
  }
  return r;
}

inline Perm perm_unrank(std::uint64_t r, std::size_t n)
{
  std::vector<std::uint64_t> digits(n);
  for (std::size_t i = n; i-- > 0;) {
    digits[i] = r % (n - i);
    r /= (n - i);
  }
  std::vector<Perm::point_type> pool(n), img(n);
  for (std::size_t i = 0; i < n; ++i)
    pool[i] = static_cast<Perm::point_type>(i);
  for (std::size_t i = 0; i < n; ++i) {
    img[i] = pool[digits[i]];
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(digits[i]));
  }
  return Perm(std::move(img));
}

inline int parity_by_inversions(Perm const &p)
{
  std::size_t inv = 0;
  for (std::size_t i = 0; i < p.degree(); ++i)
    for (std::size_t j = i + 1; j < p.degree(); ++j)
      if (p[i] > p[j])
        ++inv;
  return inv % 2 == 0 ? 1 : -1;
}

inline std::uint64_t small_factorial(std::size_t n)
{
  std::uint64_t r = 1;
  for (std::size_t i = 2; i <= n; ++i)
    r *= i;
  return r;
}

inline std::uint64_t small_power(std::uint64_t b, std::size_t e)
{
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < e; ++i)
    r *= b;
  return r;
}

/// Transposition (0 1) and the n-cycle: generators of S_n (empty for n < 2).
inline std::vector<Perm> symmetric_generators(std::size_t n)
{
  if (n < 2)
    return {};
  std::vector<Perm::point_type> cyc(n);
  for (std::size_t i = 0; i < n; ++i)
    cyc[i] = static_cast<Perm::point_type>((i + 1) % n);
  return {Perm::from_cycles(n, {{0, 1}}), Perm(std::move(cyc))};
}

} // namespace detail

/**
 * Exhaustive enumeration of a mini model. Elements of mini-T are addressed by
 * a mixed-radix rank (edge flips, edge perm, corner twists, corner perm,
 * center perm). Mini-I is built as the closure of its generators and mini-L by
 * filtering mini-T with its defining conditions, so neither depends on the
 * closed-form predicates under test.
 */
class MiniOracle {
public:
  explicit MiniOracle(MiniModel model) : model_(model)
  {
    Shape const s = model_.shape;
    BigInt total = power(2, static_cast<unsigned>(s.edges())) *
                   factorial(static_cast<unsigned>(s.edges())) *
                   power(3, static_cast<unsigned>(s.corners)) *
                   factorial(static_cast<unsigned>(s.corners)) *
                   factorial(static_cast<unsigned>(s.centers()));
    if (total > model_.cap)
      throw ModelTooLarge("mini model has " + total.str() +
                          " elements, above the enumeration cap " +
                          std::to_string(model_.cap));
    size_ = static_cast<std::uint64_t>(total);

    radix_ = {detail::small_power(2, s.edges()), detail::small_factorial(s.edges()),
              detail::small_power(3, s.corners), detail::small_factorial(s.corners),
              detail::small_factorial(s.centers())};

    i_ = closure(CubeElem::identity(s), i_generators(s),
                 [](CubeElem const &a, CubeElem const &b) { return a * b; });
    for (std::uint64_t r = 0; r < size_; ++r) {
      CubeElem t = unrank(r);
      if (in_mini_L(t))
        l_.push_back(std::move(t));
    }
  }

  MiniModel const &model() const noexcept { return model_; }
  Shape shape() const noexcept { return model_.shape; }
  std::uint64_t size() const noexcept { return size_; }
  std::vector<CubeElem> const &I() const noexcept { return i_; }
  std::vector<CubeElem> const &L() const noexcept { return l_; }

  std::uint64_t rank(CubeElem const &t) const
  {
    std::uint64_t flips = 0;
    for (auto b : t.edges.twists())
      flips = flips * 2 + b;
    std::uint64_t twists = 0;
    for (auto b : t.corners.twists())
      twists = twists * 3 + b;
    std::array<std::uint64_t, 5> const digits{
        flips, detail::perm_rank(t.edges.perm()), twists,
        detail::perm_rank(t.corners.perm()), detail::perm_rank(t.centers)};
    std::uint64_t r = 0;
    for (std::size_t i = 0; i < 5; ++i)
      r = r * radix_[i] + digits[i];
    return r;
  }

  CubeElem unrank(std::uint64_t r) const
  {
    Shape const s = model_.shape;
    std::array<std::uint64_t, 5> d{};
    for (std::size_t i = 5; i-- > 0;) {
      d[i] = r % radix_[i];
      r /= radix_[i];
    }
    TwistVector flips(s.edges()), twists(s.corners);
    for (std::size_t i = s.edges(); i-- > 0;) {
      flips[i] = static_cast<std::uint8_t>(d[0] % 2);
      d[0] /= 2;
    }
    for (std::size_t i = s.corners; i-- > 0;) {
      twists[i] = static_cast<std::uint8_t>(d[2] % 3);
      d[2] /= 3;
    }
    return {EdgeWreath(std::move(flips), detail::perm_unrank(d[1], s.edges())),
            CornerWreath(std::move(twists), detail::perm_unrank(d[3], s.corners)),
            detail::perm_unrank(d[4], s.centers())};
  }

  /// Defining conditions of L, evaluated directly.
  static bool in_mini_L(CubeElem const &t)
  {
    for (auto b : t.edges.twists())
      if (b != 0)
        return false;
    unsigned sum = 0;
    for (auto b : t.corners.twists())
      sum += b;
    return sum % 3 == 0 && detail::parity_by_inversions(t.corners.perm()) ==
                               detail::parity_by_inversions(t.centers);
  }

  static bool in_mini_T_prime(CubeElem const &t)
  {
    for (auto b : t.edges.twists())
      if (b != 0)
        return false;
    return true;
  }

  /// A small generating set of mini-L, chosen greedily from its elements.
  std::vector<CubeElem> L_generators() const
  {
    std::vector<CubeElem> gens;
    std::vector<bool> in_span(size_, false);
    std::size_t spanned = 0;
    for (auto const &l : l_) {
      if (spanned == l_.size())
        break;
      if (in_span[rank(l)])
        continue;
      gens.push_back(l);
      std::fill(in_span.begin(), in_span.end(), false);
      auto const group = closure(CubeElem::identity(shape()), gens,
                                 [](CubeElem const &a, CubeElem const &b) { return a * b; });
      for (auto const &g : group)
        in_span[rank(g)] = true;
      spanned = group.size();
    }
    return gens;
  }

  /// Number of double cosets I\T/L (marked) or (I n T')\T'/L (mechanical),
  /// by breadth-first search under left I- and right L-multiplication.
  std::uint64_t double_coset_count(Mode mode) const
  {
    std::vector<CubeElem> left;
    for (auto const &g : i_generators(shape()))
      if (mode == Mode::marked || in_mini_T_prime(g))
        left.push_back(g);
    auto const right = L_generators();
    return count_orbits(left, right, mode == Mode::mechanical);
  }

  /// Number of double cosets I\T/T'.
  std::uint64_t edge_coset_count() const
  {
    Shape const s = shape();
    std::vector<CubeElem> right;
    for (auto const &p : detail::symmetric_generators(s.edges())) {
      CubeElem g = CubeElem::identity(s);
      g.edges = EdgeWreath(TwistVector(s.edges(), 0), p);
      right.push_back(std::move(g));
    }
    for (auto const &p : detail::symmetric_generators(s.corners)) {
      CubeElem g = CubeElem::identity(s);
      g.corners = CornerWreath(TwistVector(s.corners, 0), p);
      right.push_back(std::move(g));
    }
    if (s.corners > 0) {
      CubeElem g = CubeElem::identity(s);
      TwistVector th(s.corners, 0);
      th[0] = 1;
      g.corners = CornerWreath(std::move(th), Perm::identity(s.corners));
      right.push_back(std::move(g));
    }
    for (auto const &p : detail::symmetric_generators(s.centers())) {
      CubeElem g = CubeElem::identity(s);
      g.centers = p;
      right.push_back(std::move(g));
    }
    return count_orbits(i_generators(s), right, false);
  }

  /// Exhaustive search: t in IL iff some i in mini-I has i^-1 t in mini-L.
  bool in_IL(CubeElem const &t) const
  {
    for (auto const &i : i_)
      if (in_mini_L(i.inverse() * t))
        return true;
    return false;
  }

  /// Membership table of the product set I L (or (I n T') L), indexed by rank.
  std::vector<bool> il_table(Mode mode) const
  {
    std::vector<bool> table(size_, false);
    for (auto const &i : i_) {
      if (mode == Mode::mechanical && !in_mini_T_prime(i))
        continue;
      for (auto const &l : l_)
        table[rank(i * l)] = true;
    }
    return table;
  }

  /// |IL| / |T| (marked) or |(I n T')L| / |T'| (mechanical), by enumeration.
  BigRational probability(Mode mode) const
  {
    auto const table = il_table(mode);
    std::uint64_t hits = 0, total = 0;
    for (std::uint64_t r = 0; r < size_; ++r) {
      if (mode == Mode::mechanical && !in_mini_T_prime(unrank(r)))
        continue;
      ++total;
      if (table[r])
        ++hits;
    }
    return BigRational(BigInt(hits), BigInt(total));
  }

  /// Double-coset count by Burnside's lemma on I x L acting by t -> i t l^-1:
  /// (1 / |I||L|) * sum_t #{i in I : t^-1 i t in L}.
  BigRational double_coset_count_burnside() const
  {
    BigInt fixed = 0;
    for (std::uint64_t r = 0; r < size_; ++r) {
      CubeElem const t = unrank(r);
      CubeElem const tinv = t.inverse();
      for (auto const &i : i_)
        if (in_mini_L(tinv * i * t))
          ++fixed;
    }
    return BigRational(fixed, BigInt(i_.size()) * BigInt(l_.size()));
  }

private:
  std::uint64_t count_orbits(std::vector<CubeElem> const &left,
                             std::vector<CubeElem> const &right,
                             bool restrict_to_T_prime) const
  {
    std::vector<bool> seen(size_, false);
    std::uint64_t count = 0;
    std::vector<std::uint64_t> queue;
    for (std::uint64_t r = 0; r < size_; ++r) {
      if (seen[r])
        continue;
      CubeElem const start = unrank(r);
      if (restrict_to_T_prime && !in_mini_T_prime(start))
        continue;
      ++count;
      seen[r] = true;
      queue.assign(1, r);
      while (!queue.empty()) {
        CubeElem const t = unrank(queue.back());
        queue.pop_back();
        auto visit = [&](CubeElem const &u) {
          auto const q = rank(u);
          if (!seen[q]) {
            seen[q] = true;
            queue.push_back(q);
          }
        };
        for (auto const &g : left)
          visit(g * t);
        for (auto const &h : right)
          visit(t * h);
      }
    }
    return count;
  }

  MiniModel model_;
  std::uint64_t size_ = 0;
  std::array<std::uint64_t, 5> radix_{};
  std::vector<CubeElem> i_;
  std::vector<CubeElem> l_;
};

inline std::uint64_t mini_double_coset_count(MiniModel const &model,
                                             Mode mode = Mode::marked)
{ return MiniOracle(model).double_coset_count(mode); }

inline bool mini_in_IL(MiniModel const &model, CubeElem const &t)
{ return MiniOracle(model).in_IL(t); }

inline BigRational mini_probability(MiniModel const &model, Mode mode = Mode::marked)
{ return MiniOracle(model).probability(mode); }

} // namespace revenge::oracle

#endif // REVENGE_ORACLE_HPP
