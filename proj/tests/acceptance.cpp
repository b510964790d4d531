// Acceptance run: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "revenge/revenge.hpp"

namespace {

using namespace revenge;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool passed;
  std::string detail;
};

double seconds_since(Clock::time_point t0)
{ return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string run_cli(std::vector<std::string> args, int &code)
{
  std::istringstream in;
  std::ostringstream out, err;
  code = cli::run(std::move(args), in, out, err);
  return out.str();
}

Outcome ac1()
{
  auto const t0 = Clock::now();
  int code = 0;
  std::string const out = run_cli({"count", "--mode", "marked"}, code);
  double const s = seconds_since(t0);
  bool const ok = code == 0 && out == "1594323\n" && count_marked_classes() == power(3, 13) &&
                  s < 1.0;
  return {ok, "count --mode marked = " + out.substr(0, out.size() - 1) + " in " +
                  std::to_string(s) + " s"};
}

Outcome ac2()
{
  auto const t0 = Clock::now();
  int code = 0;
  std::string const out = run_cli({"count", "--mode", "mechanical"}, code);
  double const s = seconds_since(t0);
  return {code == 0 && out == "3\n" && s < 1.0,
          "count --mode mechanical = " + out.substr(0, out.size() - 1) + " in " +
              std::to_string(s) + " s"};
}

Outcome ac3()
{
  auto const t0 = Clock::now();
  int c1 = 0, c2 = 0;
  std::string const m = run_cli({"prob", "--exact", "--mode", "marked"}, c1);
  std::string const k = run_cli({"prob", "--exact", "--mode", "mechanical"}, c2);
  double const s = seconds_since(t0);
  return {c1 == 0 && c2 == 0 && m == "1/12288\n" && k == "1/3\n" && s < 1.0,
          "marked " + m.substr(0, m.size() - 1) + ", mechanical " + k.substr(0, k.size() - 1) +
              " in " + std::to_string(s) + " s"};
}

Outcome ac4()
{
  BigInt const n = count_edge_classes();
  return {n == power(3, 12), "#I\\T/T' = " + n.str()};
}

Outcome ac5(StrongGenSet &out)
{
  auto const t0 = Clock::now();
  std::vector<Perm> gens;
  for (auto const &g : generators())
    gens.push_back(embed(g));
  out = build_bsgs(gens);
  double const s = seconds_since(t0);
  BigInt const want = factorial(24) * power(3, 8) * factorial(8) * factorial(24) / 6;
  return {out.order() == want && s < 60.0,
          "order " + out.order().str() + " (" + std::to_string(out.levels().size()) +
              " levels) in " + std::to_string(s) + " s"};
}

Outcome ac6(StrongGenSet const &bsgs)
{
  Engine rng = make_engine(606);
  std::size_t in = 0, out = 0;
  for (int k = 0; k < 2000; ++k) {
    CubeElem const t = random_T_prime(rng);
    bool const sifted = bsgs.contains(embed(t));
    if (sifted != in_L(t))
      return {false, "disagreement on sample " + std::to_string(k)};
    ++(sifted ? in : out);
  }
  // Elements of L built as words must sift too.
  for (int k = 0; k < 200; ++k) {
    if (!bsgs.contains(embed(random_licit_word(rng, 40))))
      return {false, "generator word failed to sift"};
    ++in;
  }
  return {in >= 200 && out >= 1000,
          "2200 elements agree (" + std::to_string(in) + " in L, " + std::to_string(out) +
              " outside)"};
}

Outcome ac7()
{
  oracle::MiniOracle const o(oracle::MiniModel{{2, 2, 1}});
  std::uint64_t const cosets = o.double_coset_count(Mode::marked);
  auto const table = o.il_table(Mode::marked);
  std::uint64_t mismatches = 0;
  for (std::uint64_t r = 0; r < o.size(); ++r)
    mismatches += table[r] != in_IL(o.unrank(r));
  BigRational const p = o.probability(Mode::marked);
  return {cosets == 27 && o.size() == 165888 && mismatches == 0 && p == BigRational(1, 12),
          std::to_string(cosets) + " double cosets, " + std::to_string(mismatches) +
              " in_IL mismatches over " + std::to_string(o.size()) + " elements, probability " +
              to_string(p)};
}

Outcome ac8()
{
  auto within = [](MonteCarloResult const &r, double p) {
    double const est = static_cast<double>(r.hits) / static_cast<double>(r.samples);
    double const sigma = std::sqrt(p * (1 - p) / static_cast<double>(r.samples));
    return std::abs(est - p) < 3 * sigma;
  };
  auto const mech = monte_carlo_prob(Mode::mechanical, 1'000'000, 8);
  auto const marked = monte_carlo_prob(Mode::marked, 10'000'000, 8);
  bool const close = within(mech, 1.0 / 3) && within(marked, 1.0 / 12288);
  auto const again = monte_carlo_prob(Mode::mechanical, 1'000'000, 8);
  auto const a1 = monte_carlo_prob(Mode::marked, 1'000'000, 88, 1);
  auto const a4 = monte_carlo_prob(Mode::marked, 1'000'000, 88, 4);
  auto const b1 = monte_carlo_prob(Mode::mechanical, 300'000, 89, 1);
  auto const b3 = monte_carlo_prob(Mode::mechanical, 300'000, 89, 3);
  bool const det = again.hits == mech.hits && a1.hits == a4.hits && b1.hits == b3.hits;
  return {close && det, "mechanical " + std::to_string(mech.hits) + "/10^6, marked " +
                            std::to_string(marked.hits) + "/10^7; " +
                            (det ? "deterministic" : "NOT deterministic") +
                            " across runs and worker counts"};
}

Outcome ac9()
{
  Engine rng = make_engine(909);
  std::size_t checks = 0;
  // Wreath group and action laws.
  for (int k = 0; k < 300; ++k) {
    auto const a = EdgeWreath::random(24, rng), b = EdgeWreath::random(24, rng),
               c = EdgeWreath::random(24, rng);
    if ((a * b) * c != a * (b * c) || !(a * a.inverse()).is_identity())
      return {false, "C2 wreath group law"};
    auto const x = CornerWreath::random(8, rng), y = CornerWreath::random(8, rng),
               z = CornerWreath::random(8, rng);
    if ((x * y) * z != x * (y * z) || !(x.inverse() * x).is_identity())
      return {false, "C3 wreath group law"};
    TwistVector v(24);
    for (auto &e : v)
      e = static_cast<std::uint8_t>(uniform_below(rng, 2));
    if ((a * b).act(v) != a.act(b.act(v)) || EdgeWreath::identity(24).act(v) != v)
      return {false, "C2 wreath action law"};
    TwistVector w(8);
    for (auto &e : w)
      e = static_cast<std::uint8_t>(uniform_below(rng, 3));
    if ((x * y).act(w) != x.act(y.act(w)))
      return {false, "C3 wreath action law"};
    checks += 6;
  }
  // chi is a homomorphism on T'.
  for (int k = 0; k < 1000; ++k) {
    CubeElem const a = random_T_prime(rng), b = random_T_prime(rng);
    Character const ca = chi(a), cb = chi(b), cab = chi(a * b);
    if (cab.twist != (ca.twist + cb.twist) % 3 || cab.sign != ca.sign * cb.sign)
      return {false, "chi homomorphism"};
    ++checks;
  }
  // Invariant constant on I t L.
  for (int k = 0; k < 1000; ++k) {
    CubeElem const t = random_T(rng);
    if (invariant_marked(random_I(rng) * t * random_licit_word(rng, 25)) !=
        invariant_marked(t))
      return {false, "invariant_marked not constant on a double coset"};
    ++checks;
  }
  auto const orbs = oracle::i2_orbits();
  bool const table = orbs.size() == 3 &&
                     orbs[0] == std::vector<oracle::PairFlips>{{0, 0}, {1, 1}} &&
                     orbs[1] == std::vector<oracle::PairFlips>{{0, 1}} &&
                     orbs[2] == std::vector<oracle::PairFlips>{{1, 0}};
  if (!table)
    return {false, "I2 orbit table"};
  return {true, std::to_string(checks) +
                    " property checks; I2 orbits {(0,0),(1,1)} {(0,1)} {(1,0)}"};
}

Outcome ac10()
{
  BigRational const inv_marked(BigInt(1), count_marked_classes());
  BigRational const inv_mech(BigInt(1), count_mechanical_classes());
  bool const ok = inv_marked != prob_marked_exact() && inv_mech == prob_mechanical_exact();
  return {ok, "1/" + count_marked_classes().str() + " != " + to_string(prob_marked_exact()) +
                  ", 1/" + count_mechanical_classes().str() +
                  " == " + to_string(prob_mechanical_exact())};
}

} // namespace

int main()
{
  StrongGenSet bsgs(96);
  std::vector<std::pair<std::string, std::function<Outcome()>>> const criteria{
      {"AC1 marked class count", ac1},
      {"AC2 mechanical class count", ac2},
      {"AC3 exact probabilities", ac3},
      {"AC4 edge class count", ac4},
      {"AC5 Schreier-Sims order", [&] { return ac5(bsgs); }},
      {"AC6 sifting vs kernel of chi", [&] { return ac6(bsgs); }},
      {"AC7 miniature brute force", ac7},
      {"AC8 Monte-Carlo", ac8},
      {"AC9 property suites", ac9},
      {"AC10 unequal double coset sizes", ac10},
  };
  int failed = 0;
  for (auto const &[name, check] : criteria) {
    Outcome o{false, ""};
    try {
      o = check();
    } catch (std::exception const &e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::cout << (o.passed ? "PASS " : "FAIL ") << name << ": " << o.detail << std::endl;
    failed += o.passed ? 0 : 1;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " failed")
            << std::endl;
  return failed == 0 ? 0 : 1;
}
