#include "pcp/rational.hpp"

#include <cctype>
#include <string>

#include "pcp/errors.hpp"

namespace pcp {

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

BigInt pow10(std::size_t k) {
  BigInt r = 1;
  for (std::size_t i = 0; i < k; ++i) r *= 10;
  return r;
}

// Strip leading zeros first: cpp_int's string constructor would read them as
// an octal prefix.
BigInt from_digits(const std::string& s) {
  std::size_t i = 0;
  while (i + 1 < s.size() && s[i] == '0') ++i;
  return BigInt(s.substr(i));
}

}  // namespace

Rational parse_weight(const std::string& text) {
  auto slash = text.find('/');
  if (slash != std::string::npos) {
    std::string num = text.substr(0, slash);
    std::string den = text.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
      throw InputError("bad weight '" + text + "': expected <digits>/<digits>");
    }
    BigInt d = from_digits(den);
    if (d == 0) throw InputError("bad weight '" + text + "': zero denominator");
    return Rational(from_digits(num), d);
  }
  auto dot = text.find('.');
  if (dot == std::string::npos) {
    if (!all_digits(text)) {
      throw InputError("bad weight '" + text + "': expected a non-negative decimal or p/q");
    }
    return Rational(from_digits(text));
  }
  std::string whole = text.substr(0, dot);
  std::string frac = text.substr(dot + 1);
  if (!all_digits(whole) || !all_digits(frac)) {
    throw InputError("bad weight '" + text + "': expected a non-negative decimal or p/q");
  }
  BigInt scale = pow10(frac.size());
  BigInt scaled = from_digits(whole) * scale + from_digits(frac);
  return Rational(scaled, scale);
}

std::string format_rational(const Rational& value) {
  BigInt num = numerator(value);
  BigInt den = denominator(value);
  std::string sign;
  if (num < 0) {
    sign = "-";
    num = -num;
  }
  if (den == 1) return sign + num.str();

  // Terminating decimal iff the denominator is 2^a * 5^b.
  BigInt rest = den;
  std::size_t twos = 0, fives = 0;
  while (rest % 2 == 0) {
    rest /= 2;
    ++twos;
  }
  while (rest % 5 == 0) {
    rest /= 5;
    ++fives;
  }
  if (rest != 1) return sign + num.str() + "/" + den.str();

  std::size_t digits = twos > fives ? twos : fives;
  BigInt scaled = num * pow10(digits) / den;
  std::string text = scaled.str();
  if (text.size() <= digits) text.insert(0, digits + 1 - text.size(), '0');
  text.insert(text.size() - digits, ".");
  return sign + text;
}

}  // namespace pcp
