#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "flipchain/rational.hpp"

namespace flipchain {

// Exact Laurent polynomial in t with arbitrary-precision integer
// coefficients. Terms are kept sorted by exponent with no zero coefficients,
// so two equal polynomials always have identical term lists.
class LaurentPoly {
 public:
  using Exponent = std::int64_t;
  using Term = std::pair<Exponent, BigInt>;

  LaurentPoly() = default;
  LaurentPoly(std::int64_t constant);  // NOLINT(google-explicit-constructor)
  explicit LaurentPoly(std::vector<Term> terms);
  LaurentPoly(std::initializer_list<std::pair<Exponent, std::int64_t>> terms);

  static LaurentPoly monomial(BigInt coefficient, Exponent exponent);
  // t^exponent
  static LaurentPoly t_pow(Exponent exponent) { return monomial(1, exponent); }
  // Dense constructor: coefficients[k] is the coefficient of t^(lowest + k).
  static LaurentPoly from_coefficients(const std::vector<std::int64_t>& coefficients, Exponent lowest = 0);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_polynomial() const { return terms_.empty() || terms_.front().first >= 0; }
  std::optional<Exponent> min_exponent() const;
  std::optional<Exponent> max_exponent() const;
  BigInt coeff(Exponent exponent) const;

  // Coefficients b_0..b_deg of a genuine polynomial (zeros included).
  std::vector<BigInt> dense_coefficients() const;

  // Symmetric about the midpoint of its exponent range. For a polynomial
  // with nonzero constant term this is Poincare-duality palindromicity.
  bool is_palindromic() const;
  bool has_nonnegative_coefficients() const;

  BigInt evaluate(const BigInt& t) const;  // requires is_polynomial()

  std::string to_string() const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const LaurentPoly& rhs);

  friend LaurentPoly operator+(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs += rhs; }
  friend LaurentPoly operator-(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs -= rhs; }
  friend LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  // Multiply by t^shift.
  LaurentPoly shifted(Exponent shift) const;

 private:
  void normalize();

  std::vector<Term> terms_;
};

LaurentPoly pow(const LaurentPoly& base, unsigned exponent);

// Exact quotient q with q * den == num. Throws NotDivisible when no such
// Laurent polynomial exists and InvalidInput when den is zero.
LaurentPoly div_exact(const LaurentPoly& num, const LaurentPoly& den);

}  // namespace flipchain
