#ifndef PREAB_SCALAR_HPP
#define PREAB_SCALAR_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace preab {

/// Exact rational coefficient, always kept in lowest terms.
using Scalar = mpq_class;

inline Scalar parse_scalar(const std::string& text) {
  std::string s;
  for (char c : text)
    if (c != ' ') s += c;
  if (s.empty()) throw std::invalid_argument("empty coefficient");
  if (s[0] == '+') s.erase(0, 1);
  Scalar q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad coefficient '" + text + "'");
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
  q.canonicalize();
  return q;
}

inline std::string to_string(const Scalar& q) { return q.get_str(); }

// (-1)^e for any integer e
constexpr int sign_of(long e) { return (e % 2 != 0) ? -1 : 1; }

}  // namespace preab

#endif  // PREAB_SCALAR_HPP
