#include "rational.hpp"

#include <cctype>
#include <sstream>

#include "error.hpp"

namespace permlat {

namespace {

bool parse_integer(const std::string& s, BigInt& out) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (s[0] == '-' || s[0] == '+') i = 1;
  if (i == s.size()) return false;
  for (std::size_t k = i; k < s.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(s[k]))) return false;
  }
  out = BigInt(s);
  return true;
}

}  // namespace

Rational parse_rational(const std::string& token) {
  const auto slash = token.find('/');
  BigInt num, den = 1;
  if (slash == std::string::npos) {
    if (!parse_integer(token, num)) {
      throw Error::parse("expected rational, got '" + token + "'");
    }
  } else {
    if (!parse_integer(token.substr(0, slash), num) ||
        !parse_integer(token.substr(slash + 1), den) || den == 0) {
      throw Error::parse("expected rational, got '" + token + "'");
    }
  }
  return Rational(num, den);
}

std::string rational_str(const Rational& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

std::string point_str(const std::vector<Rational>& point) {
  std::string out;
  for (std::size_t i = 0; i < point.size(); ++i) {
    if (i) out += ' ';
    out += rational_str(point[i]);
  }
  return out;
}

BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  if (q * b != a && ((a < 0) != (b < 0))) --q;
  return q;
}

BigInt floor_rational(const Rational& r) {
  return floor_div(numerator(r), denominator(r));
}

BigInt ceil_rational(const Rational& r) {
  return -floor_div(-numerator(r), denominator(r));
}

}  // namespace permlat
