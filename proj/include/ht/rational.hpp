#pragma once
#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace ht {

// Every scalar in the computation path is an exact rational. mpq_class keeps
// values canonical: gcd(num, den) = 1, den > 0, zero is 0/1.
using Rat = mpq_class;
using Int = mpz_class;

inline std::string rat_str(const Rat& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline Rat rat_parse(const std::string& s) {
  auto slash = s.find('/');
  Rat q;
  if (slash == std::string::npos)
    q = Rat(Int(s));
  else
    q = Rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  q.canonicalize();
  return q;
}

inline int sgn(const Rat& q) { return mpq_sgn(q.get_mpq_t()); }

}  // namespace ht
