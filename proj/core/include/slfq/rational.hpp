#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cctype>
#include <optional>
#include <string>

namespace slfq {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

namespace detail {
inline bool is_int_token(const std::string& t) {
  if (t.empty()) return false;
  std::size_t i = (t[0] == '-') ? 1 : 0;
  if (i == t.size()) return false;
  for (; i < t.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
  return true;
}
}  // namespace detail

// Accepts "p" or "p/q" with an optional leading '-' on either part.
// Rejects q == 0, whitespace, '+', and anything else.
inline std::optional<Rat> parse_rat(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) {
    if (!detail::is_int_token(s)) return std::nullopt;
    return Rat(Int(s));
  }
  std::string num = s.substr(0, slash);
  std::string den = s.substr(slash + 1);
  if (!detail::is_int_token(num) || !detail::is_int_token(den)) return std::nullopt;
  Int p(num), q(den);
  if (q == 0) return std::nullopt;
  if (q < 0) {
    p = -p;
    q = -q;
  }
  return Rat(p, q);
}

// "p" when the denominator is 1, otherwise "p/q" in lowest terms with the
// sign on the numerator.
inline std::string format_rat(const Rat& r) {
  Int num = boost::multiprecision::numerator(r);
  Int den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace slfq
