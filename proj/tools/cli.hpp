#ifndef REVENGE_TOOLS_CLI_HPP
#define REVENGE_TOOLS_CLI_HPP

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "revenge/revenge.hpp"

namespace revenge::cli {

// Exit codes.
inline constexpr int exit_ok = 0;
inline constexpr int exit_unsolvable = 1;
inline constexpr int exit_invalid = 2;
inline constexpr int exit_verify_failed = 3;

inline std::map<std::string, Mode> const mode_names{{"marked", Mode::marked},
                                                   {"mechanical", Mode::mechanical}};

inline std::string format_decimal(double v)
{
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::scientific, 6);
  return std::string(buf, end);
}

class InputError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Reads a state file; "-" means `in`.
inline CubeElem load_state(std::string const &path, std::istream &in)
{
  if (path == "-")
    return parse_state(in);
  std::ifstream f(path);
  if (!f)
    throw InputError("cannot open '" + path + "'");
  return parse_state(f);
}

/**
 * Runs the command line `args` (without the program name). Output goes to
 * `out`, diagnostics to `err`; the return value is the process exit code.
 */
inline int run(std::vector<std::string> args, std::istream &in, std::ostream &out,
               std::ostream &err)
{
  CLI::App app{"Rubik's Revenge state space: class counts, solvability "
               "probabilities, invariants and group verification",
               "revenge"};
  app.require_subcommand(1);

  Mode mode = Mode::marked;
  auto add_mode = [&](CLI::App *sub) {
    sub->add_option("--mode", mode, "marked (any assembly) or mechanical (no edge flips)")
        ->transform(CLI::CheckedTransformer(mode_names, CLI::ignore_case))
        ->default_str("marked");
  };
  std::uint64_t seed = 1;
  auto add_seed = [&](CLI::App *sub) {
    sub->add_option("--seed", seed, "RNG seed")->envname("REVENGE_SEED")->default_str("1");
  };

  auto *count = app.add_subcommand("count", "number of inequivalent classes");
  add_mode(count);

  auto *prob = app.add_subcommand("prob", "probability that a random assembly is solvable");
  add_mode(prob);
  bool exact = false;
  std::uint64_t mc = 0;
  unsigned workers = 0;
  auto *exact_flag = prob->add_flag("--exact", exact, "exact rational value");
  auto *mc_opt = prob->add_option("--mc", mc, "Monte-Carlo estimate from N samples")
                     ->check(CLI::PositiveNumber);
  exact_flag->excludes(mc_opt);
  add_seed(prob);
  prob->add_option("--workers", workers, "worker threads (0: all cores)");

  std::string file;
  auto *solvable = app.add_subcommand("solvable", "decide whether a state file is solvable");
  solvable->add_option("file", file, "state file, '-' for stdin")->required();
  add_mode(solvable);

  auto *invariant = app.add_subcommand("invariant", "class invariant of a state file");
  invariant->add_option("file", file, "state file, '-' for stdin")->required();
  add_mode(invariant);

  std::string class_string;
  auto *canonical =
      app.add_subcommand("canonical", "canonical state file of a class string");
  canonical->add_option("class", class_string,
                        "marked: 12 digits ':' digit (e.g. 000000000000:0); mechanical: one digit")
      ->required();
  add_mode(canonical);

  auto *random = app.add_subcommand("random-assembly", "uniformly random assembly as a state file");
  add_mode(random);
  add_seed(random);

  std::string level = "full";
  auto *verify = app.add_subcommand("verify", "run the verification suite");
  verify->add_option("--level", level, "quick or full")
      ->check(CLI::IsMember({"quick", "full"}))
      ->default_str("full");
  add_seed(verify);

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (CLI::ParseError const &e) {
    int const code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_invalid;
  }

  try {
    if (count->parsed()) {
      out << count_classes(mode) << '\n';
      return exit_ok;
    }

    if (prob->parsed()) {
      if (mc > 0) {
        auto const r = monte_carlo_prob(mode, mc, seed, workers);
        out << "estimate: " << to_string(r.estimate) << '\n'
            << "stderr: " << format_decimal(r.std_error) << '\n';
      } else {
        out << to_string(prob_exact(mode)) << '\n';
      }
      return exit_ok;
    }

    if (solvable->parsed()) {
      CubeElem const t = load_state(file, in);
      if (mode == Mode::mechanical) {
        if (!in_T_prime(t)) {
          out << "not mechanically admissible\n";
          return exit_invalid;
        }
        if (solvable_mechanical(t)) {
          out << "solvable\n";
          return exit_ok;
        }
        out << "unsolvable: " << invariant_mechanical(t) << '\n';
        return exit_unsolvable;
      }
      if (in_IL(t)) {
        out << "solvable\n";
        return exit_ok;
      }
      out << "unsolvable: " << format_class(invariant_marked(t)) << '\n';
      return exit_unsolvable;
    }

    if (invariant->parsed()) {
      CubeElem const t = load_state(file, in);
      if (mode == Mode::mechanical) {
        if (!in_T_prime(t)) {
          out << "not mechanically admissible\n";
          return exit_invalid;
        }
        out << invariant_mechanical(t) << '\n';
      } else {
        out << format_class(invariant_marked(t)) << '\n';
      }
      return exit_ok;
    }

    if (canonical->parsed()) {
      InvariantClass c;
      if (mode == Mode::mechanical) {
        if (class_string.size() != 1 || class_string[0] < '0' || class_string[0] > '2')
          throw InputError("mechanical class must be a single digit in {0,1,2}");
        c.pair_classes.assign(12, 0);
        c.twist = static_cast<unsigned>(class_string[0] - '0');
      } else {
        c = parse_class(class_string);
      }
      out << format_state(canonical_representative(c));
      return exit_ok;
    }

    if (random->parsed()) {
      Engine rng = make_engine(seed);
      out << format_state(mode == Mode::marked ? random_T(rng) : random_T_prime(rng));
      return exit_ok;
    }

    if (verify->parsed()) {
      auto const results =
          run_verification(level == "quick" ? VerifyLevel::quick : VerifyLevel::full, seed);
      bool all = true;
      for (auto const &r : results) {
        out << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.detail << '\n';
        all = all && r.passed;
      }
      return all ? exit_ok : exit_verify_failed;
    }
  } catch (ParseError const &e) {
    err << "error: " << e.what() << '\n';
    return exit_invalid;
  } catch (InputError const &e) {
    err << "error: " << e.what() << '\n';
    return exit_invalid;
  } catch (std::invalid_argument const &e) {
    err << "error: " << e.what() << '\n';
    return exit_invalid;
  }
  return exit_invalid;
}

} // namespace revenge::cli

#endif // REVENGE_TOOLS_CLI_HPP
