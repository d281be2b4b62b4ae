#include "homlie/rational.hpp"

#include <cctype>

#include "homlie/errors.hpp"

namespace homlie {

Rational rat(long num, long den) {
  if (den == 0) throw PreconditionError("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational rat_parse(std::string_view s) {
  // Accepted grammar: -?digits or -?digits/digits with positive denominator.
  auto fail = [&] { throw ParseError("malformed rational \"" + std::string(s) + "\""); };
  if (s.empty()) fail();
  std::size_t pos = 0;
  if (s[pos] == '-') ++pos;
  std::size_t num_digits = 0;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
    ++pos;
    ++num_digits;
  }
  if (num_digits == 0) fail();
  if (pos < s.size()) {
    if (s[pos] != '/') fail();
    ++pos;
    std::size_t den_start = pos;
    std::size_t den_digits = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      ++pos;
      ++den_digits;
    }
    if (den_digits == 0 || pos != s.size()) fail();
    // all-zero denominator text like "1/0" or "1/000"
    bool den_zero = true;
    for (std::size_t i = den_start; i < s.size(); ++i)
      if (s[i] != '0') den_zero = false;
    if (den_zero) fail();
  }
  Rational q;
  if (mpq_set_str(q.get_mpq_t(), std::string(s).c_str(), 10) != 0) fail();
  q.canonicalize();
  return q;
}

std::string rat_str(const Rational& q) { return q.get_str(); }

}  // namespace homlie
