#ifndef REVENGE_GEOMETRY_HPP
#define REVENGE_GEOMETRY_HPP

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "revenge/cube_elem.hpp"

// Geometric model of the 4x4x4 puzzle.
//
// Cubie centres sit at integer points of {-3,-1,1,3}^3 on the surface shell;
// a sticker is a (cubie, outward unit normal) pair. A move rotates every cubie
// of one slab (fixed coordinate along one axis) by a quarter turn. The moves
// named after the positive end of an axis (F, MF, R, MR, U, MU) turn clockwise
// when seen from the positive side; the others (B, MB, L, ML, D, MD) turn
// clockwise when seen from the negative side.
//
// Piece numbering:
//   edges   0..23  pairs {2k, 2k+1} share both colours (same cube edge)
//   corners 0..7   by sign triple (x, y, z), lexicographic
//   centers 0..23  blocks {4k..4k+3} share a face: +x, -x, +y, -y, +z, -z
//
// Markings: an edge wing at 3*n1 + 3*n2 + d (n1, n2 the sticker normals, d the
// unit offset along the third axis) marks the sticker n1 with
// (n1 x n2) . d > 0. The triple product is invariant under rotations, so every
// slab move carries marked stickers to marked stickers; the two wings of a
// pair have opposite d and hence marked stickers of different colours. A
// corner marks its x-face sticker; its sticker labels 0, 1, 2 run
// counter-clockwise seen from outside the cube.
namespace revenge::geometry {

using Vec3 = std::array<int, 3>;

inline Vec3 cross(Vec3 const &a, Vec3 const &b)
{
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
          a[0] * b[1] - a[1] * b[0]};
}

inline int dot(Vec3 const &a, Vec3 const &b)
{ return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

inline Vec3 unit(int axis, int sgn)
{
  Vec3 v{0, 0, 0};
  v[axis] = sgn;
  return v;
}

/// Face index of a unit normal: 2*axis + (negative ? 1 : 0).
inline int face_of(Vec3 const &n)
{
  for (int a = 0; a < 3; ++a)
    if (n[a] != 0)
      return 2 * a + (n[a] < 0 ? 1 : 0);
  throw std::invalid_argument("face_of: zero vector");
}

/// One slab and the direction of its quarter-turn (+1: +90 degrees about the
/// positive axis, right-handed; -1: -90 degrees).
struct Slab {
  int axis;
  int level;
  int quarter;
};

inline Slab slab_of(Move m)
{
  static constexpr int axis_of_group[3] = {2, 0, 1}; // B..F: z, L..R: x, D..U: y
  static constexpr int levels[4] = {-3, -1, 1, 3};
  auto const i = static_cast<int>(m);
  int const level = levels[i % 4];
  return {axis_of_group[i / 4], level, level < 0 ? 1 : -1};
}

inline Vec3 rotate(Vec3 const &v, int axis, int quarter)
{
  int const b = (axis + 1) % 3;
  int const c = (axis + 2) % 3;
  Vec3 r = v;
  if (quarter > 0) {
    r[b] = -v[c];
    r[c] = v[b];
  } else {
    r[b] = v[c];
    r[c] = -v[b];
  }
  return r;
}

struct Layout {
  std::array<Vec3, 24> edge_pos;
  std::array<std::array<Vec3, 2>, 24> edge_normals; // [0] is the marked sticker
  std::array<Vec3, 8> corner_pos;
  std::array<std::array<Vec3, 3>, 8> corner_normals; // label order, [0] marked
  std::array<Vec3, 24> center_pos;
  std::array<Vec3, 24> center_normal;
};

namespace detail {

inline Layout build_layout()
{
  Layout lay{};

  std::size_t e = 0;
  constexpr std::pair<int, int> axis_pairs[3] = {{0, 1}, {0, 2}, {1, 2}};
  for (auto [a, b] : axis_pairs) {
    int const c = 3 - a - b;
    for (int sa : {-1, 1})
      for (int sb : {-1, 1})
        for (int sc : {-1, 1}) {
          Vec3 pos{0, 0, 0};
          pos[a] = 3 * sa;
          pos[b] = 3 * sb;
          pos[c] = sc;
          Vec3 const n1 = unit(a, sa), n2 = unit(b, sb), d = unit(c, sc);
          lay.edge_pos[e] = pos;
          if (dot(cross(n1, n2), d) > 0)
            lay.edge_normals[e] = {n1, n2};
          else
            lay.edge_normals[e] = {n2, n1};
          ++e;
        }
  }

  std::size_t k = 0;
  for (int sx : {-1, 1})
    for (int sy : {-1, 1})
      for (int sz : {-1, 1}) {
        Vec3 const out{sx, sy, sz};
        lay.corner_pos[k] = {3 * sx, 3 * sy, 3 * sz};
        std::array<Vec3, 3> const faces{unit(0, sx), unit(1, sy), unit(2, sz)};
        auto &lab = lay.corner_normals[k];
        lab[0] = faces[0];
        for (int step = 1; step < 3; ++step)
          for (auto const &f : faces)
            if (dot(cross(lab[step - 1], f), out) > 0)
              lab[step] = f;
        ++k;
      }

  std::size_t z = 0;
  for (int axis = 0; axis < 3; ++axis)
    for (int sgn : {1, -1}) {
      int const b = (axis + 1) % 3, c = (axis + 2) % 3;
      for (int u : {-1, 1})
        for (int v : {-1, 1}) {
          Vec3 pos{0, 0, 0};
          pos[axis] = 3 * sgn;
          pos[b] = u;
          pos[c] = v;
          lay.center_pos[z] = pos;
          lay.center_normal[z] = unit(axis, sgn);
          ++z;
        }
    }
  return lay;
}

template<std::size_t N>
std::size_t index_of(std::array<Vec3, N> const &table, Vec3 const &p)
{
  for (std::size_t i = 0; i < N; ++i)
    if (table[i] == p)
      return i;
  throw std::logic_error("geometry: position not in piece table");
}

template<std::size_t N, std::size_t M>
std::size_t label_of(std::array<std::array<Vec3, M>, N> const &normals,
                     std::size_t piece, Vec3 const &n)
{
  for (std::size_t b = 0; b < M; ++b)
    if (normals[piece][b] == n)
      return b;
  throw std::logic_error("geometry: normal not on piece");
}

} // namespace detail

inline Layout const &layout()
{
  static Layout const lay = detail::build_layout();
  return lay;
}

/// The quarter-turn of one slab, read off the geometric model and expressed in
/// wreath coordinates relative to the markings.
inline CubeElem slab_turn(Move m)
{
  Layout const &lay = layout();
  Slab const s = slab_of(m);

  std::vector<Perm::point_type> eperm(24), cperm(8), zperm(24);
  TwistVector etw(24, 0), ctw(8, 0);

  for (std::size_t i = 0; i < 24; ++i) {
    if (lay.edge_pos[i][s.axis] != s.level) {
      eperm[i] = static_cast<Perm::point_type>(i);
      continue;
    }
    std::size_t const j =
        detail::index_of(lay.edge_pos, rotate(lay.edge_pos[i], s.axis, s.quarter));
    eperm[i] = static_cast<Perm::point_type>(j);
    etw[j] = static_cast<std::uint8_t>(detail::label_of(
        lay.edge_normals, j, rotate(lay.edge_normals[i][0], s.axis, s.quarter)));
  }
  for (std::size_t i = 0; i < 8; ++i) {
    if (lay.corner_pos[i][s.axis] != s.level) {
      cperm[i] = static_cast<Perm::point_type>(i);
      continue;
    }
    std::size_t const j = detail::index_of(
        lay.corner_pos, rotate(lay.corner_pos[i], s.axis, s.quarter));
    cperm[i] = static_cast<Perm::point_type>(j);
    ctw[j] = static_cast<std::uint8_t>(detail::label_of(
        lay.corner_normals, j, rotate(lay.corner_normals[i][0], s.axis, s.quarter)));
  }
  for (std::size_t i = 0; i < 24; ++i) {
    if (lay.center_pos[i][s.axis] != s.level) {
      zperm[i] = static_cast<Perm::point_type>(i);
      continue;
    }
    zperm[i] = static_cast<Perm::point_type>(detail::index_of(
        lay.center_pos, rotate(lay.center_pos[i], s.axis, s.quarter)));
  }
  return {EdgeWreath(std::move(etw), Perm(std::move(eperm))),
          CornerWreath(std::move(ctw), Perm(std::move(cperm))),
          Perm(std::move(zperm))};
}

/// A sticker: cubie centre and outward normal.
struct Sticker {
  Vec3 cubie;
  Vec3 normal;
  friend auto operator<=>(Sticker const &, Sticker const &) = default;
};

/// All 96 stickers in flat order: edge i label b at 2i+b, corner j label b at
/// 48+3j+b, center c at 72+c.
inline std::vector<Sticker> const &stickers()
{
  static std::vector<Sticker> const all = [] {
    Layout const &lay = layout();
    std::vector<Sticker> v;
    v.reserve(96);
    for (std::size_t i = 0; i < 24; ++i)
      for (auto const &n : lay.edge_normals[i])
        v.push_back({lay.edge_pos[i], n});
    for (std::size_t i = 0; i < 8; ++i)
      for (auto const &n : lay.corner_normals[i])
        v.push_back({lay.corner_pos[i], n});
    for (std::size_t i = 0; i < 24; ++i)
      v.push_back({lay.center_pos[i], lay.center_normal[i]});
    return v;
  }();
  return all;
}

/// The permutation of the 96 stickers under a move, computed by rotating
/// sticker geometry directly (no wreath coordinates involved).
inline Perm sticker_permutation(Move m)
{
  auto const &all = stickers();
  std::map<Sticker, std::size_t> where;
  for (std::size_t i = 0; i < all.size(); ++i)
    where.emplace(all[i], i);
  Slab const s = slab_of(m);
  std::vector<Perm::point_type> img(all.size());
  for (std::size_t i = 0; i < all.size(); ++i) {
    Sticker st = all[i];
    if (st.cubie[s.axis] == s.level)
      st = {rotate(st.cubie, s.axis, s.quarter), rotate(st.normal, s.axis, s.quarter)};
    img[i] = static_cast<Perm::point_type>(where.at(st));
  }
  return Perm(std::move(img));
}

/// Checks of the piece numbering and markings against the solved colouring
/// (sticker colour = face of its normal). Returns a list of violations.
inline std::vector<std::string> validate_layout()
{
  Layout const &lay = layout();
  std::vector<std::string> errs;

  std::vector<Vec3> seen;
  for (auto const &p : lay.edge_pos)
    seen.push_back(p);
  for (auto const &p : lay.corner_pos)
    seen.push_back(p);
  for (auto const &p : lay.center_pos)
    seen.push_back(p);
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
    errs.push_back("duplicate cubie position");
  if (seen.size() != 56)
    errs.push_back("expected 56 pieces");

  for (std::size_t k = 0; k < 12; ++k) {
    auto colours = [&](std::size_t i) {
      std::array<int, 2> c{face_of(lay.edge_normals[i][0]),
                           face_of(lay.edge_normals[i][1])};
      std::sort(c.begin(), c.end());
      return c;
    };
    if (colours(2 * k) != colours(2 * k + 1))
      errs.push_back("edge pair " + std::to_string(k) + " not indistinguishable");
    if (face_of(lay.edge_normals[2 * k][0]) ==
        face_of(lay.edge_normals[2 * k + 1][0]))
      errs.push_back("edge pair " + std::to_string(k) +
                     " marked stickers share a colour");
  }
  for (std::size_t b = 0; b < 6; ++b)
    for (std::size_t j = 1; j < 4; ++j)
      if (lay.center_normal[4 * b + j] != lay.center_normal[4 * b])
        errs.push_back("center block " + std::to_string(b) + " mixes colours");
  for (std::size_t i = 0; i < 8; ++i) {
    Vec3 const out{lay.corner_pos[i][0] / 3, lay.corner_pos[i][1] / 3,
                   lay.corner_pos[i][2] / 3};
    auto const &lab = lay.corner_normals[i];
    for (int b = 0; b < 3; ++b)
      if (dot(cross(lab[b], lab[(b + 1) % 3]), out) <= 0)
        errs.push_back("corner " + std::to_string(i) + " labels not cyclic");
  }
  return errs;
}

} // namespace revenge::geometry

#endif // REVENGE_GEOMETRY_HPP
