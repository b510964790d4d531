#include "doctest.h"

#include <array>
#include <cmath>
#include <map>

#include "revenge/perm.hpp"
#include "revenge/rng.hpp"

namespace revenge {
namespace {

// Independent sign oracle: parity of the inversion count.
int inversion_sign(Perm const &p)
{
  int inv = 0;
  for (std::size_t i = 0; i < p.degree(); ++i)
    for (std::size_t j = i + 1; j < p.degree(); ++j)
      inv += p[i] > p[j];
  return inv % 2 ? -1 : 1;
}

TEST_CASE("Perm.Identity")
{
  CHECK_EQ(Perm::identity(3), Perm({0, 1, 2}));
  CHECK_EQ(Perm::identity(1), Perm({0}));
  CHECK_EQ(Perm::identity(24).sign(), 1);
  CHECK(Perm::identity(7).is_identity());
}

TEST_CASE("Perm.RejectsNonBijections")
{
  CHECK_THROWS_AS(Perm({0, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Perm({0, 3, 1}), std::invalid_argument);
}

TEST_CASE("Perm.ComposeAppliesRightFactorFirst")
{
  Perm const p = Perm::from_cycles(3, {{0, 1}});
  Perm const q = Perm::from_cycles(3, {{1, 2}});
  // p(q(0)) = p(0) = 1, p(q(1)) = p(2) = 2, p(q(2)) = p(1) = 0
  CHECK_EQ(compose(p, q), Perm({1, 2, 0}));
  CHECK_EQ(compose(p, q), Perm::from_cycles(3, {{0, 1, 2}}));
  CHECK_EQ(compose(p, Perm::identity(3)), p);
  CHECK_EQ(compose(p, inverse(p)), Perm::identity(3));
  CHECK_THROWS_AS(compose(p, Perm::identity(4)), std::invalid_argument);
}

TEST_CASE("Perm.Inverse")
{
  CHECK_EQ(Perm::identity(5).inverse(), Perm::identity(5));
  Perm const t = Perm::from_cycles(5, {{1, 3}});
  CHECK_EQ(t.inverse(), t);
  CHECK_EQ(Perm::from_cycles(4, {{0, 1, 2, 3}}).inverse(),
            Perm::from_cycles(4, {{0, 3, 2, 1}}));
}

TEST_CASE("Perm.Sign")
{
  CHECK_EQ(Perm::from_cycles(6, {{2, 5}}).sign(), -1);
  Perm const c4 = Perm::from_cycles(4, {{0, 1, 2, 3}});
  CHECK_EQ(c4.sign(), -1);
  CHECK_EQ(inversion_sign(c4), -1);
  Perm const two = Perm::from_cycles(8, {{0, 1, 2, 3}, {4, 5, 6, 7}});
  CHECK_EQ(two.sign(), 1);
  CHECK_EQ(Perm::from_cycles(8, {{0, 1, 2, 3}}).sign() *
                Perm::from_cycles(8, {{4, 5, 6, 7}}).sign(),
            1);
}

TEST_CASE("Perm.CycleStructure")
{
  Perm const p = Perm::from_cycles(7, {{0, 2, 4}, {1, 5}});
  auto const cyc = p.cycles();
  REQUIRE_EQ(cyc.size(), 4u);
  CHECK_EQ(cyc[0], (std::vector<std::size_t>{0, 2, 4}));
  CHECK_EQ(cyc[1], (std::vector<std::size_t>{1, 5}));
  CHECK_EQ(p.cycle_type(), (std::vector<std::size_t>{3, 2, 1, 1}));
}

TEST_CASE("Perm.RandomProperties")
{
  Engine rng = make_engine(11);
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t const n = 1 + uniform_below(rng, 30);
    Perm const p = random_perm(n, rng), q = random_perm(n, rng), r = random_perm(n, rng);
    CHECK_EQ((p * q).sign(), p.sign() * q.sign());
    CHECK_EQ(p.sign(), inversion_sign(p));
    CHECK((p.inverse() * p).is_identity());
    CHECK_EQ((p * q) * r, p * (q * r));
  }
}

TEST_CASE("Perm.RandomIsDeterministicPerSeed")
{
  Engine a = make_engine(2024), b = make_engine(2024);
  CHECK_EQ(random_perm(24, a), random_perm(24, b));
  Engine c = make_engine(0);
  CHECK_EQ(random_perm(1, c), Perm({0}));
  Engine pin = make_engine(7);
  CHECK_EQ(random_perm(8, pin).to_string(), "[2 4 6 3 5 0 7 1]");
}

TEST_CASE("Perm.RandomIsUniformOnS3")
{
  // Each of the 6 permutations should appear n/6 times, within 5 sigma.
  constexpr int n = 100000;
  Engine rng = make_engine(99);
  std::map<Perm, int> counts;
  for (int i = 0; i < n; ++i)
    ++counts[random_perm(3, rng)];
  REQUIRE_EQ(counts.size(), 6u);
  double const p = 1.0 / 6.0;
  double const sigma = std::sqrt(n * p * (1 - p));
  double chi2 = 0;
  for (auto const &[perm, c] : counts) {
    INFO(perm.to_string());
    CHECK_LT(std::abs(c - n * p), 5 * sigma);
    chi2 += (c - n * p) * (c - n * p) / (n * p);
  }
  // 5 degrees of freedom; 20.5 is the 0.999 quantile.
  CHECK_LT(chi2, 20.5);
}

} // namespace
} // namespace revenge
