#ifndef REVENGE_NUMERIC_HPP
#define REVENGE_NUMERIC_HPP

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace revenge {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline BigInt factorial(unsigned n)
{
  BigInt r = 1;
  for (unsigned i = 2; i <= n; ++i)
    r *= i;
  return r;
}

inline BigInt power(unsigned base, unsigned exp)
{
  BigInt r = 1;
  for (unsigned i = 0; i < exp; ++i)
    r *= base;
  return r;
}

inline std::string to_string(BigInt const &v) { return v.str(); }

/// "numerator/denominator" in lowest terms; integers keep the "/1".
inline std::string to_string(BigRational const &q)
{
  return boost::multiprecision::numerator(q).str() + "/" +
         boost::multiprecision::denominator(q).str();
}

} // namespace revenge

#endif // REVENGE_NUMERIC_HPP
