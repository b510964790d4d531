#ifndef REVENGE_VERIFY_HPP
#define REVENGE_VERIFY_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "revenge/counting.hpp"
#include "revenge/cube.hpp"
#include "revenge/geometry.hpp"
#include "revenge/oracle.hpp"
#include "revenge/sims.hpp"

namespace revenge {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

enum class VerifyLevel { quick, full };

namespace detail {

inline CheckResult check_layout()
{
  auto errs = geometry::validate_layout();
  return {"layout", errs.empty(),
          errs.empty() ? "pairs, blocks and markings consistent with solved colouring"
                       : errs.front()};
}

inline CheckResult check_generators()
{
  for (Move m : all_moves) {
    CubeElem const &g = generator(m);
    std::string const name(to_string(m));
    if (!(g * g * g * g).is_identity() || g.is_identity())
      return {"generators", false, name + " does not have order 4"};
    if (!in_T_prime(g))
      return {"generators", false, name + " flips an edge marking"};
    if (!in_L(g))
      return {"generators", false, name + " is outside ker(chi)"};
    if (embed(g) != geometry::sticker_permutation(m))
      return {"generators", false, name + " disagrees with the sticker model"};
  }
  return {"generators", true, "12 slice turns: order 4, in T', in ker(chi), match sticker model"};
}

inline CheckResult check_chi_homomorphism(std::uint64_t seed, std::size_t samples)
{
  Engine rng = make_stream(seed, 1);
  for (std::size_t s = 0; s < samples; ++s) {
    CubeElem const a = random_T_prime(rng), b = random_T_prime(rng);
    Character const ca = chi(a), cb = chi(b), cab = chi(a * b);
    if (cab != Character{(ca.twist + cb.twist) % 3, ca.sign * cb.sign})
      return {"chi-homomorphism", false, "failed on sample " + std::to_string(s)};
  }
  return {"chi-homomorphism", true, std::to_string(samples) + " random pairs in T'"};
}

inline CheckResult check_words_in_L(std::uint64_t seed, std::size_t samples)
{
  Engine rng = make_stream(seed, 2);
  for (std::size_t s = 0; s < samples; ++s)
    if (!in_L(random_licit_word(rng, 1 + uniform_below(rng, 60))))
      return {"words-in-L", false, "random word outside ker(chi)"};
  return {"words-in-L", true, std::to_string(samples) + " random generator words"};
}

inline CheckResult check_sims(std::uint64_t seed, std::size_t samples)
{
  std::vector<Perm> gens;
  for (auto const &g : generators())
    gens.push_back(embed(g));
  StrongGenSet const bsgs = build_bsgs(gens);
  if (bsgs.order() != order_L())
    return {"schreier-sims", false,
            "order " + bsgs.order().str() + " != " + order_L().str()};
  Engine rng = make_stream(seed, 3);
  std::size_t in = 0;
  for (std::size_t s = 0; s < samples; ++s) {
    CubeElem const t = random_T_prime(rng);
    bool const sifted = bsgs.contains(embed(t));
    if (sifted != in_L(t))
      return {"schreier-sims", false, "sifting disagrees with chi on sample " +
                                          std::to_string(s)};
    in += sifted ? 1 : 0;
  }
  return {"schreier-sims", true,
          "order " + bsgs.order().str() + " = |T'|/6; sifting agrees with chi on " +
              std::to_string(samples) + " samples (" + std::to_string(in) + " in L)"};
}

inline CheckResult check_counts()
{
  bool ok = count_marked_classes() == power(3, 13) &&
            count_mechanical_classes() == 3 && count_edge_classes() == power(3, 12) &&
            prob_marked_exact() == BigRational(1, 12288) &&
            prob_mechanical_exact() == BigRational(1, 3);
  return {"counts", ok,
          "classes " + count_marked_classes().str() + " / " +
              count_mechanical_classes().str() + ", probabilities " +
              to_string(prob_marked_exact()) + " / " + to_string(prob_mechanical_exact())};
}

inline CheckResult check_i2_orbits()
{
  auto const orbs = oracle::i2_orbits();
  bool const ok = orbs.size() == 3 && orbs[0].size() == 2 &&
                  orbs[0][0] == oracle::PairFlips{0, 0} &&
                  orbs[0][1] == oracle::PairFlips{1, 1} &&
                  orbs[1] == std::vector<oracle::PairFlips>{{0, 1}} &&
                  orbs[2] == std::vector<oracle::PairFlips>{{1, 0}};
  return {"i2-orbits", ok, std::to_string(orbs.size()) + " orbits on C2^2"};
}

inline CheckResult check_mini(Shape shape)
{
  oracle::MiniOracle const o(oracle::MiniModel{shape});
  std::string const tag = "mini(" + std::to_string(shape.pairs) + "," +
                          std::to_string(shape.corners) + "," +
                          std::to_string(shape.blocks) + ")";
  std::uint64_t const want = oracle::detail::small_power(3, shape.pairs + 1);
  std::uint64_t const got = o.double_coset_count(Mode::marked);
  if (got != want)
    return {tag, false, "double cosets " + std::to_string(got)};
  if (o.double_coset_count(Mode::mechanical) != 3)
    return {tag, false, "mechanical double cosets != 3"};
  auto const table = o.il_table(Mode::marked);
  for (std::uint64_t r = 0; r < o.size(); ++r)
    if (table[r] != in_IL(o.unrank(r)))
      return {tag, false, "closed-form in_IL disagrees at rank " + std::to_string(r)};
  BigRational const p = o.probability(Mode::marked);
  BigRational const want_p(1, 3 * oracle::detail::small_power(2, shape.pairs));
  if (p != want_p)
    return {tag, false, "probability " + to_string(p)};
  if (o.probability(Mode::mechanical) != BigRational(1, 3))
    return {tag, false, "mechanical probability != 1/3"};
  return {tag, true,
          std::to_string(got) + " double cosets, in_IL exhaustive on " +
              std::to_string(o.size()) + " elements, probability " + to_string(p)};
}

} // namespace detail

/// The verification suite behind `revenge verify`: one result per check.
inline std::vector<CheckResult> run_verification(VerifyLevel level, std::uint64_t seed)
{
  bool const full = level == VerifyLevel::full;
  std::vector<CheckResult> out;
  out.push_back(detail::check_layout());
  out.push_back(detail::check_generators());
  out.push_back(detail::check_chi_homomorphism(seed, full ? 1000 : 100));
  out.push_back(detail::check_words_in_L(seed, full ? 500 : 50));
  out.push_back(detail::check_sims(seed, full ? 2000 : 200));
  out.push_back(detail::check_counts());
  out.push_back(detail::check_i2_orbits());
  out.push_back(detail::check_mini({1, 1, 1}));
  if (full)
    out.push_back(detail::check_mini({2, 2, 1}));
  return out;
}

} // namespace revenge

#endif // REVENGE_VERIFY_HPP
