#include "invstep/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace invstep {

namespace {

BigInt parse_integer(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty integer literal");
  std::size_t i = 0;
  if (s[0] == '+' || s[0] == '-') i = 1;
  if (i == s.size()) throw std::invalid_argument("bad integer literal: " + s);
  for (std::size_t k = i; k < s.size(); ++k)
    if (!std::isdigit(static_cast<unsigned char>(s[k])))
      throw std::invalid_argument("bad integer literal: " + s);
  return BigInt(s);
}

}  // namespace

Rational parse_rational(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    BigInt num = parse_integer(s.substr(0, slash));
    BigInt den = parse_integer(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator: " + s);
    return Rational(num, den);
  }
  auto dot = s.find('.');
  if (dot != std::string::npos) {
    std::string head = s.substr(0, dot);
    std::string tail = s.substr(dot + 1);
    if (tail.empty()) throw std::invalid_argument("bad decimal literal: " + s);
    bool negative = !head.empty() && head[0] == '-';
    if (head == "-" || head == "+" || head.empty()) head += "0";
    BigInt ip = parse_integer(head);
    BigInt fp = parse_integer(tail);
    BigInt scale = 1;
    for (std::size_t k = 0; k < tail.size(); ++k) scale *= 10;
    BigInt num = boost::multiprecision::abs(ip) * scale + fp;
    if (negative) num = -num;
    return Rational(num, scale);
  }
  return Rational(parse_integer(s));
}

std::string fraction_string(const Rational& x) {
  if (denominator(x) == 1) return numerator(x).str();
  return numerator(x).str() + "/" + denominator(x).str();
}

std::string decimal_string(const Rational& x, int sig_digits) {
  if (sig_digits < 1) sig_digits = 1;
  if (x == 0) return "0";
  bool neg = x < 0;
  Rational a = neg ? Rational(-x) : x;

  // Decimal exponent e with 10^e <= a < 10^(e+1).
  int e = 0;
  Rational t = a;
  while (t >= 10) { t /= 10; ++e; }
  while (t < 1) { t *= 10; --e; }

  // Round a * 10^(sig_digits-1-e) to the nearest integer.
  int shift = sig_digits - 1 - e;
  Rational scaled = a;
  for (int k = 0; k < shift; ++k) scaled *= 10;
  for (int k = 0; k < -shift; ++k) scaled /= 10;
  BigInt digits = BigInt((2 * numerator(scaled) + denominator(scaled)) /
                         (2 * denominator(scaled)));
  std::string d = digits.str();
  if (static_cast<int>(d.size()) > sig_digits) {  // rounding carried over
    ++e;
    d.pop_back();
  }

  auto trim = [](std::string s) {  // drop trailing zeros after the point
    if (s.find('.') == std::string::npos) return s;
    while (s.back() == '0') s.pop_back();
    if (s.back() == '.') s.pop_back();
    return s;
  };

  std::string out;
  if (e >= sig_digits - 1 && e <= 18) {
    out = d + std::string(e - sig_digits + 1, '0');
  } else if (e >= 0 && e < sig_digits - 1) {
    out = trim(d.substr(0, e + 1) + "." + d.substr(e + 1));
  } else if (e < 0 && e >= -4) {
    out = trim("0." + std::string(-e - 1, '0') + d);
  } else {
    out = trim(d.substr(0, 1) + "." + d.substr(1)) + "e" + std::to_string(e);
  }
  return neg ? "-" + out : out;
}

Rational pow_rational(const Rational& base, unsigned exp) {
  Rational result = 1;
  Rational b = base;
  while (exp > 0) {
    if (exp & 1u) result *= b;
    b *= b;
    exp >>= 1u;
  }
  return result;
}

bool rational_sqrt(const Rational& x, Rational& out) {
  if (x < 0) return false;
  BigInt n = numerator(x), d = denominator(x);
  BigInt rn = boost::multiprecision::sqrt(n);
  BigInt rd = boost::multiprecision::sqrt(d);
  if (rn * rn != n || rd * rd != d) return false;
  out = Rational(rn, rd);
  return true;
}

}  // namespace invstep
