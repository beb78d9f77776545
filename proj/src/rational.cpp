#include "tl3d/rational.hpp"

#include <stdexcept>

#include "tl3d/errors.hpp"

namespace tl3d {

std::string to_string(const BigInt& n) { return n.str(); }

std::string to_string(const Rational& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) {
    s += "/";
    s += denominator(r).str();
  }
  return s;
}

Rational rational_from_string(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      return Rational(BigInt(text));
    }
    BigInt num(text.substr(0, slash));
    BigInt den(text.substr(slash + 1));
    if (den == 0) {
      throw ParseError("zero denominator in rational: " + text);
    }
    return Rational(num, den);
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception&) {
    throw ParseError("malformed rational: " + text);
  }
}

}  // namespace tl3d
