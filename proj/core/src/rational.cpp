#include "threading/rational.hpp"

#include <cctype>
#include <cstdlib>
#include <stdexcept>

namespace threading {

Rational parse_decimal(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty number");
  std::size_t pos = 0;
  long long integer_part = 0;
  bool any_digit = false;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
    integer_part = integer_part * 10 + (text[pos] - '0');
    if (integer_part < 0) throw std::invalid_argument("number out of range: " + text);
    ++pos;
    any_digit = true;
  }
  long long num = integer_part;
  long long den = 1;
  if (pos < text.size() && text[pos] == '.') {
    ++pos;
    bool frac_digit = false;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      if (den > 1000000000000000LL) throw std::invalid_argument("too many fractional digits: " + text);
      num = num * 10 + (text[pos] - '0');
      den *= 10;
      ++pos;
      frac_digit = true;
    }
    if (!frac_digit) throw std::invalid_argument("malformed decimal: " + text);
    any_digit = true;
  }
  if (!any_digit || pos != text.size()) throw std::invalid_argument("malformed number: " + text);
  return Rational(num, den);
}

std::string to_fraction_string(const Rational& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::string to_decimal_string(const Rational& r, int digits) {
  long long num = r.numerator();
  long long den = r.denominator();
  std::string sign;
  if (num < 0) {
    sign = "-";
    num = -num;
  }
  std::string out = sign + std::to_string(num / den);
  if (digits <= 0) return out;
  out += '.';
  long long rem = num % den;
  for (int i = 0; i < digits; ++i) {
    rem *= 10;
    out += static_cast<char>('0' + rem / den);
    rem %= den;
  }
  return out;
}

}  // namespace threading
