#include "flipchain/laurent_poly.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "flipchain/errors.hpp"

namespace flipchain {

LaurentPoly::LaurentPoly(std::int64_t constant) {
  if (constant != 0) terms_.emplace_back(0, BigInt(constant));
}

LaurentPoly::LaurentPoly(std::vector<Term> terms) : terms_(std::move(terms)) { normalize(); }

LaurentPoly::LaurentPoly(std::initializer_list<std::pair<Exponent, std::int64_t>> terms) {
  terms_.reserve(terms.size());
  for (const auto& [e, c] : terms) terms_.emplace_back(e, BigInt(c));
  normalize();
}

LaurentPoly LaurentPoly::monomial(BigInt coefficient, Exponent exponent) {
  LaurentPoly p;
  if (coefficient != 0) p.terms_.emplace_back(exponent, std::move(coefficient));
  return p;
}

LaurentPoly LaurentPoly::from_coefficients(const std::vector<std::int64_t>& coefficients, Exponent lowest) {
  LaurentPoly p;
  for (std::size_t k = 0; k < coefficients.size(); ++k) {
    if (coefficients[k] != 0) {
      p.terms_.emplace_back(lowest + static_cast<Exponent>(k), BigInt(coefficients[k]));
    }
  }
  return p;
}

void LaurentPoly::normalize() {
  std::stable_sort(terms_.begin(), terms_.end(),
                   [](const Term& a, const Term& b) { return a.first < b.first; });
  std::vector<Term> merged;
  merged.reserve(terms_.size());
  for (auto& term : terms_) {
    if (!merged.empty() && merged.back().first == term.first) {
      merged.back().second += term.second;
    } else {
      merged.push_back(std::move(term));
    }
  }
  std::erase_if(merged, [](const Term& t) { return t.second == 0; });
  terms_ = std::move(merged);
}

std::optional<LaurentPoly::Exponent> LaurentPoly::min_exponent() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.front().first;
}

std::optional<LaurentPoly::Exponent> LaurentPoly::max_exponent() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.back().first;
}

BigInt LaurentPoly::coeff(Exponent exponent) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exponent,
                             [](const Term& t, Exponent e) { return t.first < e; });
  if (it != terms_.end() && it->first == exponent) return it->second;
  return 0;
}

std::vector<BigInt> LaurentPoly::dense_coefficients() const {
  if (!is_polynomial()) throw InvalidInput("dense coefficients of a polynomial with negative exponents");
  if (terms_.empty()) return {};
  std::vector<BigInt> out(static_cast<std::size_t>(terms_.back().first) + 1);
  for (const auto& [e, c] : terms_) out[static_cast<std::size_t>(e)] = c;
  return out;
}

bool LaurentPoly::is_palindromic() const {
  if (terms_.empty()) return true;
  const Exponent lo = terms_.front().first;
  const Exponent hi = terms_.back().first;
  for (const auto& [e, c] : terms_) {
    if (coeff(lo + hi - e) != c) return false;
  }
  return true;
}

bool LaurentPoly::has_nonnegative_coefficients() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.second > 0; });
}

BigInt LaurentPoly::evaluate(const BigInt& t) const {
  if (!is_polynomial()) throw InvalidInput("cannot evaluate a Laurent polynomial with negative exponents");
  BigInt acc = 0;
  Exponent current = terms_.empty() ? 0 : terms_.back().first;
  // Horner over the sparse terms, highest exponent first.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    while (current > it->first) {
      acc *= t;
      --current;
    }
    acc += it->second;
  }
  while (current > 0) {
    acc *= t;
    --current;
  }
  return acc;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    BigInt magnitude = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      out << magnitude;
      continue;
    }
    if (magnitude != 1) out << magnitude << '*';
    out << 't';
    if (e != 1) out << '^' << e;
  }
  return out.str();
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out = *this;
  for (auto& term : out.terms_) term.second = -term.second;
  return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  std::vector<Term> merged;
  merged.reserve(terms_.size() + rhs.terms_.size());
  auto a = terms_.begin();
  auto b = rhs.terms_.begin();
  while (a != terms_.end() || b != rhs.terms_.end()) {
    if (b == rhs.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      merged.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->first < a->first) {
      merged.push_back(*b++);
    } else {
      BigInt sum = a->second + b->second;
      if (sum != 0) merged.emplace_back(a->first, std::move(sum));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) { return *this += -rhs; }

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) {
  *this = *this * rhs;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs) {
  using Exponent = LaurentPoly::Exponent;
  if (lhs.is_zero() || rhs.is_zero()) return {};
  const Exponent lo = lhs.terms_.front().first + rhs.terms_.front().first;
  const Exponent hi = lhs.terms_.back().first + rhs.terms_.back().first;
  const auto pairs = static_cast<Exponent>(lhs.terms_.size() * rhs.terms_.size());
  LaurentPoly out;
  if (hi - lo + 1 <= 8 * pairs + 64) {
    std::vector<BigInt> dense(static_cast<std::size_t>(hi - lo + 1));
    for (const auto& [ea, ca] : lhs.terms_) {
      for (const auto& [eb, cb] : rhs.terms_) {
        dense[static_cast<std::size_t>(ea + eb - lo)] += ca * cb;
      }
    }
    for (std::size_t k = 0; k < dense.size(); ++k) {
      if (dense[k] != 0) out.terms_.emplace_back(lo + static_cast<Exponent>(k), std::move(dense[k]));
    }
    return out;
  }
  std::map<Exponent, BigInt> sparse;
  for (const auto& [ea, ca] : lhs.terms_) {
    for (const auto& [eb, cb] : rhs.terms_) sparse[ea + eb] += ca * cb;
  }
  for (auto& [e, c] : sparse) {
    if (c != 0) out.terms_.emplace_back(e, std::move(c));
  }
  return out;
}

LaurentPoly LaurentPoly::shifted(Exponent shift) const {
  LaurentPoly out = *this;
  for (auto& term : out.terms_) term.first += shift;
  return out;
}

LaurentPoly pow(const LaurentPoly& base, unsigned exponent) {
  LaurentPoly result = 1;
  LaurentPoly square = base;
  while (exponent > 0) {
    if (exponent & 1U) result *= square;
    exponent >>= 1U;
    if (exponent > 0) square *= square;
  }
  return result;
}

LaurentPoly div_exact(const LaurentPoly& num, const LaurentPoly& den) {
  using Exponent = LaurentPoly::Exponent;
  if (den.is_zero()) throw InvalidInput("exact division by the zero polynomial");
  if (num.is_zero()) return {};

  // Strip the monomial units t^a, t^b so both operands have a nonzero
  // constant term, then run integer long division from the top.
  const Exponent num_low = *num.min_exponent();
  const Exponent den_low = *den.min_exponent();
  const std::vector<BigInt> n = num.shifted(-num_low).dense_coefficients();
  const std::vector<BigInt> d = den.shifted(-den_low).dense_coefficients();
  auto fail = [&] {
    return NotDivisible("(" + num.to_string() + ") is not divisible by (" + den.to_string() + ")");
  };
  if (n.size() < d.size()) throw fail();

  const std::size_t m = d.size() - 1;
  const BigInt& lead = d.back();
  std::vector<BigInt> rem = n;
  std::vector<BigInt> quotient(n.size() - m);
  for (std::size_t k = quotient.size(); k-- > 0;) {
    const BigInt& top = rem[k + m];
    if (top == 0) continue;
    if (top % lead != 0) throw fail();
    BigInt q = top / lead;
    for (std::size_t j = 0; j <= m; ++j) rem[k + j] -= q * d[j];
    quotient[k] = std::move(q);
  }
  if (std::any_of(rem.begin(), rem.end(), [](const BigInt& c) { return c != 0; })) throw fail();

  std::vector<LaurentPoly::Term> terms;
  for (std::size_t k = 0; k < quotient.size(); ++k) {
    if (quotient[k] != 0) terms.emplace_back(static_cast<Exponent>(k) + num_low - den_low, std::move(quotient[k]));
  }
  return LaurentPoly(std::move(terms));
}

}  // namespace flipchain
