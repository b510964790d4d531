#ifndef REVENGE_CUBE_ELEM_HPP
#define REVENGE_CUBE_ELEM_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "revenge/perm.hpp"
#include "revenge/wreath.hpp"

namespace revenge {

/// Piece counts of a puzzle model: edges come in indistinguishable pairs
/// {2k, 2k+1}, centers in same-colour blocks {4k, ..., 4k+3}.
struct Shape {
  std::size_t pairs = 12;
  std::size_t corners = 8;
  std::size_t blocks = 6;

  std::size_t edges() const noexcept { return 2 * pairs; }
  std::size_t centers() const noexcept { return 4 * blocks; }

  friend bool operator==(Shape const &, Shape const &) = default;
};

inline constexpr Shape revenge_shape{12, 8, 6};

/**
 * An element of T = (C2 wr S_edges) x (C3 wr S_corners) x S_centers.
 *
 * A state of the puzzle is stored as the element carrying the solved state to
 * it, so the identity doubles as the solved state.
 */
struct CubeElem {
  EdgeWreath edges;
  CornerWreath corners;
  Perm centers;

  static CubeElem identity(Shape s = revenge_shape)
  {
    return {EdgeWreath::identity(s.edges()),
            CornerWreath::identity(s.corners),
            Perm::identity(s.centers())};
  }

  /// Infers the shape from component degrees; throws if they do not fit one.
  Shape shape() const
  {
    if (edges.degree() % 2 != 0 || centers.degree() % 4 != 0)
      throw std::invalid_argument(
          "CubeElem: edge count must be even and center count a multiple of 4");
    return {edges.degree() / 2, corners.degree(), centers.degree() / 4};
  }

  bool is_identity() const noexcept
  { return edges.is_identity() && corners.is_identity() && centers.is_identity(); }

  CubeElem inverse() const
  { return {edges.inverse(), corners.inverse(), centers.inverse()}; }

  friend CubeElem operator*(CubeElem const &a, CubeElem const &b)
  { return {a.edges * b.edges, a.corners * b.corners, a.centers * b.centers}; }

  friend bool operator==(CubeElem const &, CubeElem const &) = default;
  friend auto operator<=>(CubeElem const &, CubeElem const &) = default;
};

// Slice quarter-turns. Each letter group names the four slabs along one
// axis, listed from the negative end to the positive end.
enum class Move { B, MB, MF, F, L, ML, MR, R, D, MD, MU, U };

inline constexpr std::array<Move, 12> all_moves{
    Move::B, Move::MB, Move::MF, Move::F, Move::L,  Move::ML,
    Move::MR, Move::R, Move::D,  Move::MD, Move::MU, Move::U};

inline constexpr std::array<std::string_view, 12> move_names{
    "B", "MB", "MF", "F", "L", "ML", "MR", "R", "D", "MD", "MU", "U"};

inline std::string_view to_string(Move m)
{ return move_names[static_cast<std::size_t>(m)]; }

inline std::optional<Move> parse_move(std::string_view s)
{
  for (std::size_t i = 0; i < move_names.size(); ++i)
    if (move_names[i] == s)
      return all_moves[i];
  return std::nullopt;
}

} // namespace revenge

#endif // REVENGE_CUBE_ELEM_HPP
