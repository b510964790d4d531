#ifndef REVENGE_SIMS_HPP
#define REVENGE_SIMS_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "revenge/cube_elem.hpp"
#include "revenge/numeric.hpp"
#include "revenge/perm.hpp"

namespace revenge {

/// Faithful permutation representation of T on stickers: edge stickers first
/// (2 per piece), then corner stickers (3 per piece), then centers. For the
/// 4x4x4 shape this is points 0-47, 48-71 and 72-95.
inline Perm embed(CubeElem const &t)
{
  Perm const e = t.edges.to_sticker_perm();
  Perm const c = t.corners.to_sticker_perm();
  std::size_t const off_c = e.degree();
  std::size_t const off_z = off_c + c.degree();
  std::vector<Perm::point_type> img(off_z + t.centers.degree());
  for (std::size_t i = 0; i < e.degree(); ++i)
    img[i] = e[i];
  for (std::size_t i = 0; i < c.degree(); ++i)
    img[off_c + i] = static_cast<Perm::point_type>(off_c + c[i]);
  for (std::size_t i = 0; i < t.centers.degree(); ++i)
    img[off_z + i] = static_cast<Perm::point_type>(off_z + t.centers[i]);
  return Perm(std::move(img));
}

/**
 * Base and strong generating set of a permutation group.
 *
 * Level i stores its base point b_i, the generators S_i (all fixing
 * b_0..b_{i-1}), the basic orbit of b_i under <S_i>, and for every orbit point
 * a coset representative u with u(b_i) = point, plus its inverse.
 */
class StrongGenSet {
public:
  struct Level {
    std::size_t base_point = 0;
    std::vector<Perm> gens;
    std::vector<std::size_t> orbit;
    std::vector<std::ptrdiff_t> orbit_index; // -1 outside the orbit
    std::vector<Perm> reps;
    std::vector<Perm> rep_inverses;
  };

  explicit StrongGenSet(std::size_t degree) : degree_(degree) {}

  std::size_t degree() const noexcept { return degree_; }
  std::vector<Level> const &levels() const noexcept { return levels_; }

  std::vector<std::size_t> base() const
  {
    std::vector<std::size_t> b;
    for (auto const &l : levels_)
      b.push_back(l.base_point);
    return b;
  }

  /// Product of basic orbit lengths.
  BigInt order() const
  {
    BigInt r = 1;
    for (auto const &l : levels_)
      r *= l.orbit.size();
    return r;
  }

  /// Sifts `p` through the chain; returns the residue and the level where
  /// sifting stopped (levels().size() when it passed every level).
  std::pair<Perm, std::size_t> strip(Perm const &p) const
  {
    check_degree(p);
    std::vector<Perm::point_type> cur(p.images().begin(), p.images().end());
    std::vector<Perm::point_type> tmp(cur.size());
    for (std::size_t i = 0; i < levels_.size(); ++i) {
      Level const &l = levels_[i];
      auto const idx = l.orbit_index[cur[l.base_point]];
      if (idx < 0)
        return {Perm(std::move(cur)), i};
      auto const ui = l.rep_inverses[static_cast<std::size_t>(idx)].images();
      for (std::size_t x = 0; x < cur.size(); ++x)
        tmp[x] = ui[cur[x]];
      cur.swap(tmp);
    }
    return {Perm(std::move(cur)), levels_.size()};
  }

  bool contains(Perm const &p) const
  {
    auto [residue, level] = strip(p);
    return level == levels_.size() && residue.is_identity();
  }

  friend StrongGenSet build_bsgs(std::vector<Perm> const &gens);

private:
  void check_degree(Perm const &p) const
  {
    if (p.degree() != degree_)
      throw std::invalid_argument("StrongGenSet: permutation degree mismatch");
  }

  void push_level(std::size_t base_point)
  {
    Level l;
    l.base_point = base_point;
    l.orbit_index.assign(degree_, -1);
    l.orbit.push_back(base_point);
    l.orbit_index[base_point] = 0;
    l.reps.push_back(Perm::identity(degree_));
    l.rep_inverses.push_back(Perm::identity(degree_));
    levels_.push_back(std::move(l));
  }

  /// Closes the basic orbit of level i under its current generators.
  void extend_orbit(std::size_t i)
  {
    Level &l = levels_[i];
    for (std::size_t k = 0; k < l.orbit.size(); ++k)
      for (auto const &g : l.gens) {
        std::size_t const img = g[l.orbit[k]];
        if (l.orbit_index[img] >= 0)
          continue;
        l.orbit_index[img] = static_cast<std::ptrdiff_t>(l.orbit.size());
        l.orbit.push_back(img);
        Perm u = g * l.reps[k];
        l.rep_inverses.push_back(u.inverse());
        l.reps.push_back(std::move(u));
      }
  }

  static std::optional<std::size_t> first_moved_point(Perm const &p)
  {
    for (std::size_t x = 0; x < p.degree(); ++x)
      if (p[x] != x)
        return x;
    return std::nullopt;
  }

  std::size_t degree_;
  std::vector<Level> levels_;
};

/**
 * Deterministic Schreier-Sims. New base points are the smallest point moved by
 * the element that needs one, so the base follows the natural point order.
 *
 * Works level by level from the bottom: every Schreier generator
 * u_gamma^-1 x u_beta of level i is sifted through levels below i; a
 * non-trivial residue becomes a new strong generator of the levels it fixes
 * and processing resumes at the deepest affected level.
 */
inline StrongGenSet build_bsgs(std::vector<Perm> const &gens)
{
  if (gens.empty())
    throw std::invalid_argument("build_bsgs: empty generator set");
  std::size_t const n = gens.front().degree();
  StrongGenSet s(n);

  std::vector<Perm> nontrivial;
  for (auto const &g : gens) {
    if (g.degree() != n)
      throw std::invalid_argument("build_bsgs: generators of different degrees");
    if (!g.is_identity())
      nontrivial.push_back(g);
  }

  // Initial base: every generator must move some base point.
  for (auto const &g : nontrivial) {
    bool moves_base = false;
    for (auto const &l : s.levels_)
      if (g[l.base_point] != l.base_point)
        moves_base = true;
    if (!moves_base)
      s.push_level(*StrongGenSet::first_moved_point(g));
  }
  for (std::size_t i = 0; i < s.levels_.size(); ++i) {
    for (auto const &g : nontrivial) {
      bool fixes_prefix = true;
      for (std::size_t j = 0; j < i; ++j)
        if (g[s.levels_[j].base_point] != s.levels_[j].base_point)
          fixes_prefix = false;
      if (fixes_prefix)
        s.levels_[i].gens.push_back(g);
    }
    s.extend_orbit(i);
  }

  // checked[i][k]: number of generators of level i already paired with orbit
  // point k. Orbits and generator lists only grow, and a Schreier generator
  // that sifted once keeps sifting, so the counters stay valid.
  std::vector<std::vector<std::size_t>> checked(s.levels_.size());

  std::ptrdiff_t i = static_cast<std::ptrdiff_t>(s.levels_.size()) - 1;
  while (i >= 0) {
    auto const lvl = static_cast<std::size_t>(i);
    bool added = false;
    for (std::size_t k = 0; k < s.levels_[lvl].orbit.size() && !added; ++k) {
      if (checked[lvl].size() <= k)
        checked[lvl].resize(k + 1, 0);
      while (checked[lvl][k] < s.levels_[lvl].gens.size()) {
        auto &level = s.levels_[lvl];
        Perm const &x = level.gens[checked[lvl][k]];
        std::size_t const gamma = x[level.orbit[k]];
        auto const gi = static_cast<std::size_t>(level.orbit_index[gamma]);
        Perm const schreier = level.rep_inverses[gi] * x * level.reps[k];

        // Sift through the levels below lvl only; schreier fixes b_0..b_lvl.
        std::vector<Perm::point_type> cur(schreier.images().begin(),
                                          schreier.images().end());
        std::vector<Perm::point_type> tmp(n);
        std::size_t j = lvl + 1;
        for (; j < s.levels_.size(); ++j) {
          auto const &l = s.levels_[j];
          auto const idx = l.orbit_index[cur[l.base_point]];
          if (idx < 0)
            break;
          auto const ui = l.rep_inverses[static_cast<std::size_t>(idx)].images();
          for (std::size_t p = 0; p < n; ++p)
            tmp[p] = ui[cur[p]];
          cur.swap(tmp);
        }
        Perm h(std::move(cur));
        if (j == s.levels_.size() && h.is_identity()) {
          ++checked[lvl][k];
          continue;
        }
        if (j == s.levels_.size()) {
          s.push_level(*StrongGenSet::first_moved_point(h));
          checked.emplace_back();
        }
        for (std::size_t l = lvl + 1; l <= j; ++l) {
          s.levels_[l].gens.push_back(h);
          s.extend_orbit(l);
        }
        i = static_cast<std::ptrdiff_t>(j);
        added = true;
        break;
      }
    }
    if (!added)
      --i;
  }
  return s;
}

} // namespace revenge

#endif // REVENGE_SIMS_HPP
