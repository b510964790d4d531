#ifndef REVENGE_STATE_IO_HPP
#define REVENGE_STATE_IO_HPP

#include <array>
#include <charconv>
#include <cstddef>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "revenge/cube.hpp"

// State file: five lines, 0-based values separated by single spaces.
//
//   edges_flip: 24 values in {0,1}
//   edges_perm: 24 images
//   corners_twist: 8 values in {0,1,2}
//   corners_perm: 8 images
//   centers_perm: 24 images
namespace revenge {

/// Parse failure; `line` and `token` are 1-based (token 0: the line itself).
class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t line, std::size_t token, std::string const &what)
  : std::runtime_error("line " + std::to_string(line) +
                       (token ? ", token " + std::to_string(token) : "") + ": " +
                       what),
    line_(line), token_(token)
  {}

  std::size_t line() const noexcept { return line_; }
  std::size_t token() const noexcept { return token_; }

private:
  std::size_t line_;
  std::size_t token_;
};

namespace detail {

struct FieldSpec {
  std::string_view key;
  std::size_t count;
  unsigned bound; // values must be < bound
};

inline constexpr std::array<FieldSpec, 5> state_fields{{
    {"edges_flip:", 24, 2},
    {"edges_perm:", 24, 24},
    {"corners_twist:", 8, 3},
    {"corners_perm:", 8, 8},
    {"centers_perm:", 24, 24},
}};

inline std::vector<std::string_view> split_ws(std::string_view s)
{
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t'))
      ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t')
      ++j;
    if (j > i)
      out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

inline std::vector<Perm::point_type> parse_field(std::string_view line,
                                                 std::size_t lineno,
                                                 FieldSpec const &f)
{
  if (!line.empty() && line.back() == '\r')
    line.remove_suffix(1);
  auto tokens = split_ws(line);
  if (tokens.empty() || tokens[0] != f.key)
    throw ParseError(lineno, 1, "expected '" + std::string(f.key) + "'");
  if (tokens.size() - 1 != f.count)
    throw ParseError(lineno, 0,
                     "expected " + std::to_string(f.count) + " values, found " +
                         std::to_string(tokens.size() - 1));
  std::vector<Perm::point_type> vals;
  vals.reserve(f.count);
  for (std::size_t t = 1; t < tokens.size(); ++t) {
    unsigned v = 0;
    auto const tok = tokens[t];
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
      throw ParseError(lineno, t + 1, "not a non-negative integer: '" +
                                          std::string(tok) + "'");
    if (v >= f.bound)
      throw ParseError(lineno, t + 1,
                       "value " + std::to_string(v) + " out of range [0," +
                           std::to_string(f.bound) + ")");
    vals.push_back(static_cast<Perm::point_type>(v));
  }
  return vals;
}

inline Perm checked_perm(std::vector<Perm::point_type> images, std::size_t lineno)
{
  std::vector<std::size_t> first(images.size(), 0);
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (first[images[i]] != 0)
      throw ParseError(lineno, i + 2,
                       "not a permutation: image " + std::to_string(images[i]) +
                           " repeated (first at token " +
                           std::to_string(first[images[i]] + 1) + ")");
    first[images[i]] = i + 1;
  }
  return Perm(std::move(images));
}

inline TwistVector to_twists(std::vector<Perm::point_type> const &v)
{ return TwistVector(v.begin(), v.end()); }

} // namespace detail

inline CubeElem parse_state(std::istream &in)
{
  std::array<std::vector<Perm::point_type>, 5> vals;
  std::string line;
  std::size_t lineno = 0;
  for (std::size_t f = 0; f < 5; ++f) {
    if (!std::getline(in, line))
      throw ParseError(lineno + 1, 0, "unexpected end of input, expected '" +
                                          std::string(detail::state_fields[f].key) +
                                          "'");
    ++lineno;
    vals[f] = detail::parse_field(line, lineno, detail::state_fields[f]);
  }
  while (std::getline(in, line)) {
    ++lineno;
    if (!detail::split_ws(line).empty() && line != "\r")
      throw ParseError(lineno, 1, "unexpected trailing content");
  }
  return {EdgeWreath(detail::to_twists(vals[0]), detail::checked_perm(vals[1], 2)),
          CornerWreath(detail::to_twists(vals[2]), detail::checked_perm(vals[3], 4)),
          detail::checked_perm(vals[4], 5)};
}

inline CubeElem parse_state(std::string_view text)
{
  std::istringstream in{std::string(text)};
  return parse_state(in);
}

inline std::string format_state(CubeElem const &t)
{
  if (!(t.shape() == revenge_shape))
    throw std::invalid_argument("format_state: only the 4x4x4 shape has a file format");
  std::ostringstream os;
  auto row = [&](std::string_view key, auto const &range) {
    os << key;
    for (auto v : range)
      os << ' ' << static_cast<unsigned>(v);
    os << '\n';
  };
  row("edges_flip:", t.edges.twists());
  row("edges_perm:", t.edges.perm().images());
  row("corners_twist:", t.corners.twists());
  row("corners_perm:", t.corners.perm().images());
  row("centers_perm:", t.centers.images());
  return os.str();
}

/// "ddd...d:d": one digit per pair, then the corner twist.
inline std::string format_class(InvariantClass const &c)
{
  std::string s;
  for (auto l : c.pair_classes)
    s += static_cast<char>('0' + l);
  s += ':';
  s += static_cast<char>('0' + c.twist);
  return s;
}

inline InvariantClass parse_class(std::string_view s, std::size_t pairs = 12)
{
  if (s.size() != pairs + 2 || s[pairs] != ':')
    throw std::invalid_argument("class string must be " + std::to_string(pairs) +
                                " digits, ':' and one digit");
  InvariantClass c;
  for (std::size_t k = 0; k < pairs; ++k) {
    if (s[k] < '0' || s[k] > '2')
      throw std::invalid_argument("class string: pair label at position " +
                                  std::to_string(k + 1) + " not in {0,1,2}");
    c.pair_classes.push_back(static_cast<std::uint8_t>(s[k] - '0'));
  }
  char const tw = s[pairs + 1];
  if (tw < '0' || tw > '2')
    throw std::invalid_argument("class string: twist digit not in {0,1,2}");
  c.twist = static_cast<unsigned>(tw - '0');
  return c;
}

} // namespace revenge

#endif // REVENGE_STATE_IO_HPP
