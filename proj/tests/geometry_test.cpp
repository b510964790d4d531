#include "doctest.h"

#include <set>

#include "revenge/cube.hpp"
#include "revenge/geometry.hpp"
#include "revenge/sims.hpp"

namespace revenge {
namespace {

using geometry::Vec3;

TEST_CASE("Geometry.LayoutValidates")
{
  auto const errs = geometry::validate_layout();
  INFO((errs.empty() ? "" : errs.front()));
  CHECK(errs.empty());
}

TEST_CASE("Geometry.PairsShareACubeEdgeAndBlocksAFace")
{
  auto const &lay = geometry::layout();
  for (std::size_t k = 0; k < 12; ++k) {
    Vec3 const a = lay.edge_pos[2 * k], b = lay.edge_pos[2 * k + 1];
    int differing = 0;
    for (int ax = 0; ax < 3; ++ax)
      if (a[ax] != b[ax]) {
        ++differing;
        CHECK_EQ(a[ax], -b[ax]);
        CHECK_EQ(std::abs(a[ax]), 1);
      }
    CHECK_EQ(differing, 1);
  }
  for (std::size_t b = 0; b < 6; ++b)
    for (std::size_t j = 0; j < 4; ++j)
      CHECK_EQ(geometry::face_of(lay.center_normal[4 * b + j]), static_cast<int>(b));
}

TEST_CASE("Geometry.NinetySixStickersTileSixFaces")
{
  auto const &st = geometry::stickers();
  REQUIRE_EQ(st.size(), 96u);
  std::set<Vec3> points;
  std::array<int, 6> per_face{};
  for (auto const &s : st) {
    Vec3 p = s.cubie;
    for (int a = 0; a < 3; ++a)
      p[a] += s.normal[a];
    points.insert(p);
    ++per_face[geometry::face_of(s.normal)];
  }
  CHECK_EQ(points.size(), 96u);
  for (int f : per_face)
    CHECK_EQ(f, 16);
}

TEST_CASE("Geometry.SlabNamesAndDirection")
{
  auto const u = geometry::slab_of(Move::U);
  CHECK_EQ(u.axis, 1);
  CHECK_EQ(u.level, 3);
  auto const ml = geometry::slab_of(Move::ML);
  CHECK_EQ(ml.axis, 0);
  CHECK_EQ(ml.level, -1);
  // U clockwise from above sends the front-right-top corner to front-left-top.
  CHECK_EQ(geometry::rotate({3, 3, 3}, u.axis, u.quarter), (Vec3{-3, 3, 3}));
  // F clockwise from the front sends up to right.
  auto const f = geometry::slab_of(Move::F);
  CHECK_EQ(geometry::rotate({0, 3, 3}, f.axis, f.quarter), (Vec3{3, 0, 3}));
  // D clockwise from below sends front to right.
  auto const d = geometry::slab_of(Move::D);
  CHECK_EQ(geometry::rotate({0, -3, 3}, d.axis, d.quarter), (Vec3{3, -3, 0}));
}

TEST_CASE("Geometry.WreathCoordinatesMatchStickerModel")
{
  for (Move m : all_moves) {
    INFO(to_string(m));
    CHECK_EQ(embed(generator(m)), geometry::sticker_permutation(m));
  }
}

TEST_CASE("Geometry.MovesPreserveEdgeMarking")
{
  for (Move m : all_moves) {
    INFO(to_string(m));
    CHECK(in_T_prime(generator(m)));
  }
}

TEST_CASE("Geometry.OuterAndInnerSliceCycleShapes")
{
  for (Move m : {Move::B, Move::F, Move::L, Move::R, Move::D, Move::U}) {
    CubeElem const &g = generator(m);
    CHECK_EQ(g.corners.perm().cycle_type(), (std::vector<std::size_t>{4, 1, 1, 1, 1}));
    CHECK_EQ(g.corners.perm().sign(), -1);
    CHECK_EQ(g.centers.cycle_type()[0], 4u);
    CHECK_EQ(g.centers.cycle_type()[1], 1u);
    CHECK_EQ(g.centers.sign(), -1);
    CHECK_EQ(g.corners.perm().sign() * g.centers.sign(), 1);
    CHECK_EQ(g.edges.perm().cycle_type()[1], 4u); // two 4-cycles of wings
  }
  for (Move m : {Move::MB, Move::MF, Move::ML, Move::MR, Move::MD, Move::MU}) {
    CubeElem const &g = generator(m);
    CHECK(g.corners.is_identity());
    auto const ct = g.centers.cycle_type();
    CHECK_EQ(ct[0], 4u);
    CHECK_EQ(ct[1], 4u);
    CHECK_EQ(ct[2], 1u);
    CHECK_EQ(g.centers.sign(), 1);
    CHECK_EQ(g.edges.perm().cycle_type()[0], 4u);
    CHECK_EQ(g.edges.perm().cycle_type()[1], 1u);
  }
}

TEST_CASE("Geometry.GeneratorsAreDistinct")
{
  std::set<CubeElem> gens(generators().begin(), generators().end());
  CHECK_EQ(gens.size(), 12u);
}

TEST_CASE("Geometry.AllFourSlabsTogetherRotateTheWholeCube")
{
  // R MR ML L turns every cubie; corner twists must still sum to zero.
  CubeElem const whole = generator(Move::R) * generator(Move::MR) *
                         generator(Move::ML).inverse() * generator(Move::L).inverse();
  CHECK(in_L(whole));
  for (std::size_t i = 0; i < 8; ++i)
    CHECK_NE(whole.corners.perm()[i], i);
}

} // namespace
} // namespace revenge
