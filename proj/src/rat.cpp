#include "tropic/rat.hpp"

namespace tropic {

Rat parse_rat(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(s));
    Int p(s.substr(0, slash));
    Int q(s.substr(slash + 1));
    if (q == 0) throw parse_error("rational with zero denominator: " + s);
    if (q < 0) {
      p = -p;
      q = -q;
    }
    return Rat(p, q);
  } catch (const std::exception&) {
    throw parse_error("cannot parse rational: " + s);
  }
}

std::string rat_str(const Rat& r) {
  if (den(r) == 1) return num(r).str();
  return num(r).str() + "/" + den(r).str();
}

std::string rat_str(const Int& n) { return n.str(); }

Int gcd_int(Int a, Int b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  if ((a % b) != 0 && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace tropic
