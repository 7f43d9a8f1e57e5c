#include "flipchain/rational.hpp"

#include <string>

#include "flipchain/errors.hpp"

namespace flipchain {

Rational::Rational(const BigInt& numerator, const BigInt& denominator) {
  if (denominator == 0) throw InvalidInput("rational with zero denominator");
  // Boost rejects a negative denominator, so move the sign to the numerator.
  value_ = denominator < 0 ? Storage(-numerator, -denominator) : Storage(numerator, denominator);
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.value_ == 0) throw InvalidInput("division of a rational by zero");
  value_ /= rhs.value_;
  return *this;
}

Rational Rational::parse(std::string_view text) {
  auto parse_int = [&](std::string_view part) {
    if (part.empty()) throw InvalidInput("malformed rational: '" + std::string(text) + "'");
    std::size_t start = (part.front() == '-' || part.front() == '+') ? 1 : 0;
    if (start == part.size()) throw InvalidInput("malformed rational: '" + std::string(text) + "'");
    for (std::size_t i = start; i < part.size(); ++i) {
      if (part[i] < '0' || part[i] > '9') {
        throw InvalidInput("malformed rational: '" + std::string(text) + "'");
      }
    }
    std::string digits(part.front() == '+' ? part.substr(1) : part);
    return BigInt(digits);
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

std::string Rational::to_string() const {
  if (is_integer()) return numerator().str();
  return numerator().str() + "/" + denominator().str();
}

Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }

Rational midpoint(const Rational& a, const Rational& b) { return (a + b) / Rational(2); }

}  // namespace flipchain
