#ifndef REVENGE_CUBE_HPP
#define REVENGE_CUBE_HPP

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "revenge/cube_elem.hpp"
#include "revenge/geometry.hpp"
#include "revenge/rng.hpp"

namespace revenge {

/// marked: any assembly, edges may be flipped; mechanical: assemblies in T'.
enum class Mode { marked, mechanical };

inline std::array<CubeElem, 12> const &generators()
{
  static std::array<CubeElem, 12> const gens = [] {
    std::array<CubeElem, 12> g;
    for (std::size_t i = 0; i < all_moves.size(); ++i)
      g[i] = geometry::slab_turn(all_moves[i]);
    return g;
  }();
  return gens;
}

inline CubeElem const &generator(Move m)
{ return generators()[static_cast<std::size_t>(m)]; }

/// Right-multiplies `start` by the generators of `word`, in order.
inline CubeElem apply_word(std::span<Move const> word, CubeElem start)
{
  for (Move m : word)
    start = start * generator(m);
  return start;
}

/// Edge marking preserved: every edge twist is zero.
inline bool in_T_prime(CubeElem const &t)
{
  for (auto b : t.edges.twists())
    if (b != 0)
      return false;
  return true;
}

/// Value of the characteristic morphism on T'.
struct Character {
  unsigned twist; // corner twist sum mod 3
  int sign;       // sign(corner perm) * sign(center perm)
  friend bool operator==(Character const &, Character const &) = default;
};

inline Character chi(CubeElem const &t)
{
  if (!in_T_prime(t))
    throw std::domain_error("chi: element has edge flips (not in T')");
  return {t.corners.twist_sum(), t.corners.perm().sign() * t.centers.sign()};
}

/// Licit group: the kernel of chi inside T'.
inline bool in_L(CubeElem const &t)
{ return in_T_prime(t) && chi(t) == Character{0, 1}; }

/// Indistinguishable-piece group: pair-preserving edge permutations whose
/// flips mark exactly the swapped pairs, trivial corners, block-preserving
/// center permutations.
inline bool in_I(CubeElem const &t)
{
  Shape const s = t.shape();
  if (!t.corners.is_identity())
    return false;
  auto const &sigma = t.edges.perm();
  auto const &rho = t.edges.twists();
  for (std::size_t k = 0; k < s.pairs; ++k) {
    std::size_t const a = 2 * k, b = a + 1;
    bool const fixed = sigma[a] == a && sigma[b] == b;
    bool const swapped = sigma[a] == b && sigma[b] == a;
    if (fixed) {
      if (rho[a] != 0 || rho[b] != 0)
        return false;
    } else if (swapped) {
      if (rho[a] != 1 || rho[b] != 1)
        return false;
    } else {
      return false;
    }
  }
  auto const &phi = t.centers;
  for (std::size_t i = 0; i < phi.degree(); ++i)
    if (phi[i] / 4 != i / 4)
      return false;
  return true;
}

/// Solvable in the marked model (t lies in I L): every edge pair carries equal
/// flips and the corner twists sum to zero. Permutations and signs are free.
inline bool in_IL(CubeElem const &t)
{
  Shape const s = t.shape();
  auto const &rho = t.edges.twists();
  for (std::size_t k = 0; k < s.pairs; ++k)
    if (rho[2 * k] != rho[2 * k + 1])
      return false;
  return t.corners.twist_sum() == 0;
}

inline bool solvable_mechanical(CubeElem const &t)
{
  if (!in_T_prime(t))
    throw std::domain_error("solvable_mechanical: state is not mechanically admissible");
  return t.corners.twist_sum() == 0;
}

/// Complete invariant of the double coset I t L.
struct InvariantClass {
  std::vector<std::uint8_t> pair_classes; // 0: (0,0)|(1,1), 1: (0,1), 2: (1,0)
  unsigned twist = 0;

  friend bool operator==(InvariantClass const &, InvariantClass const &) = default;
  friend auto operator<=>(InvariantClass const &, InvariantClass const &) = default;
};

inline std::uint8_t pair_label(std::uint8_t first, std::uint8_t second)
{
  if (first == second)
    return 0;
  return first == 0 ? 1 : 2;
}

inline InvariantClass invariant_marked(CubeElem const &t)
{
  Shape const s = t.shape();
  InvariantClass c;
  c.pair_classes.resize(s.pairs);
  auto const &rho = t.edges.twists();
  for (std::size_t k = 0; k < s.pairs; ++k)
    c.pair_classes[k] = pair_label(rho[2 * k], rho[2 * k + 1]);
  c.twist = t.corners.twist_sum();
  return c;
}

inline unsigned invariant_mechanical(CubeElem const &t)
{
  if (!in_T_prime(t))
    throw std::domain_error("invariant_mechanical: state is not mechanically admissible");
  return t.corners.twist_sum();
}

/// Identity permutations, corner twists (twist, 0, ...), and per-pair flips
/// (0,0), (0,1) or (1,0) for labels 0, 1, 2.
inline CubeElem canonical_representative(InvariantClass const &c,
                                         Shape shape = revenge_shape)
{
  if (c.pair_classes.size() != shape.pairs)
    throw std::invalid_argument("canonical_representative: wrong number of pair labels");
  if (c.twist > 2 || (c.twist != 0 && shape.corners == 0))
    throw std::invalid_argument("canonical_representative: twist out of range");
  TwistVector rho(shape.edges(), 0);
  for (std::size_t k = 0; k < shape.pairs; ++k) {
    switch (c.pair_classes[k]) {
    case 0: break;
    case 1: rho[2 * k + 1] = 1; break;
    case 2: rho[2 * k] = 1; break;
    default:
      throw std::invalid_argument("canonical_representative: pair label out of range");
    }
  }
  TwistVector theta(shape.corners, 0);
  if (shape.corners > 0)
    theta[0] = static_cast<std::uint8_t>(c.twist);
  return {EdgeWreath(std::move(rho), Perm::identity(shape.edges())),
          CornerWreath(std::move(theta), Perm::identity(shape.corners)),
          Perm::identity(shape.centers())};
}

/// Uniform element of T.
template<typename URBG>
CubeElem random_T(URBG &rng, Shape shape = revenge_shape)
{
  auto edges = EdgeWreath::random(shape.edges(), rng);
  auto corners = CornerWreath::random(shape.corners, rng);
  auto centers = random_perm(shape.centers(), rng);
  return {std::move(edges), std::move(corners), std::move(centers)};
}

/// Uniform element of T' (mechanically admissible: no edge flips).
template<typename URBG>
CubeElem random_T_prime(URBG &rng, Shape shape = revenge_shape)
{
  EdgeWreath edges(TwistVector(shape.edges(), 0), random_perm(shape.edges(), rng));
  auto corners = CornerWreath::random(shape.corners, rng);
  auto centers = random_perm(shape.centers(), rng);
  return {std::move(edges), std::move(corners), std::move(centers)};
}

/// Generators of I: each pair swapped with both flips set; per block, the
/// transposition (4k 4k+1) and the 4-cycle (4k 4k+1 4k+2 4k+3).
inline std::vector<CubeElem> i_generators(Shape shape = revenge_shape)
{
  std::vector<CubeElem> gens;
  for (std::size_t k = 0; k < shape.pairs; ++k) {
    CubeElem g = CubeElem::identity(shape);
    TwistVector rho(shape.edges(), 0);
    rho[2 * k] = rho[2 * k + 1] = 1;
    g.edges = EdgeWreath(std::move(rho),
                         Perm::from_cycles(shape.edges(), {{2 * k, 2 * k + 1}}));
    gens.push_back(std::move(g));
  }
  for (std::size_t b = 0; b < shape.blocks; ++b) {
    std::size_t const o = 4 * b;
    CubeElem g = CubeElem::identity(shape);
    g.centers = Perm::from_cycles(shape.centers(), {{o, o + 1}});
    gens.push_back(g);
    g.centers = Perm::from_cycles(shape.centers(), {{o, o + 1, o + 2, o + 3}});
    gens.push_back(std::move(g));
  }
  return gens;
}

/// Uniform-ish element of L as a random word of `length` generators.
template<typename URBG>
CubeElem random_licit_word(URBG &rng, std::size_t length)
{
  CubeElem t = CubeElem::identity();
  for (std::size_t i = 0; i < length; ++i)
    t = t * generators()[uniform_below(rng, generators().size())];
  return t;
}

/// Random element of I: a random word in the I generators.
template<typename URBG>
CubeElem random_I(URBG &rng, Shape shape = revenge_shape, std::size_t length = 64)
{
  auto const gens = i_generators(shape);
  CubeElem t = CubeElem::identity(shape);
  if (gens.empty())
    return t;
  for (std::size_t i = 0; i < length; ++i)
    t = t * gens[uniform_below(rng, gens.size())];
  return t;
}

} // namespace revenge

#endif // REVENGE_CUBE_HPP
