#pragma once
// Exact rational scalars. All arithmetic in the library is exact; there is
// no floating point anywhere in the pipeline.

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace tropic {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int num(const Rat& r) { return numerator(r); }
inline Int den(const Rat& r) { return denominator(r); }

inline int sign(const Rat& r) { return r.sign(); }
inline int sign(const Int& n) { return n.sign(); }

Rat parse_rat(const std::string& s);     // "p/q" or "p"
std::string rat_str(const Rat& r);       // "p/q", or "p" when q == 1
std::string rat_str(const Int& n);

Int gcd_int(Int a, Int b);

// floor(a/b) for exact integers, b != 0
Int floor_div(const Int& a, const Int& b);

struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace tropic
