#include "flipchain/bi_series.hpp"

#include <algorithm>
#include <string>

#include "flipchain/errors.hpp"

namespace flipchain {

TruncatedBiSeries::TruncatedBiSeries(std::size_t order) : coeffs_(order + 1) {}

TruncatedBiSeries::TruncatedBiSeries(std::size_t order, std::vector<LaurentPoly> coefficients)
    : coeffs_(std::move(coefficients)) {
  coeffs_.resize(order + 1);
}

TruncatedBiSeries TruncatedBiSeries::constant(std::size_t order, LaurentPoly c) {
  TruncatedBiSeries s(order);
  s.coeffs_[0] = std::move(c);
  return s;
}

TruncatedBiSeries TruncatedBiSeries::truncated(std::size_t order) const {
  return TruncatedBiSeries(order, std::vector<LaurentPoly>(
                                      coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(
                                                                             std::min(order, this->order()) + 1)));
}

TruncatedBiSeries& TruncatedBiSeries::operator+=(const TruncatedBiSeries& rhs) {
  coeffs_.resize(std::min(coeffs_.size(), rhs.coeffs_.size()));
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  return *this;
}

TruncatedBiSeries& TruncatedBiSeries::operator-=(const TruncatedBiSeries& rhs) {
  coeffs_.resize(std::min(coeffs_.size(), rhs.coeffs_.size()));
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  return *this;
}

TruncatedBiSeries& TruncatedBiSeries::operator*=(const LaurentPoly& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

TruncatedBiSeries operator+(const TruncatedBiSeries& lhs, const TruncatedBiSeries& rhs) {
  TruncatedBiSeries out = lhs;
  return out += rhs;
}

TruncatedBiSeries operator-(const TruncatedBiSeries& lhs, const TruncatedBiSeries& rhs) {
  TruncatedBiSeries out = lhs;
  return out -= rhs;
}

TruncatedBiSeries operator*(const TruncatedBiSeries& lhs, const TruncatedBiSeries& rhs) {
  const std::size_t order = std::min(lhs.order(), rhs.order());
  TruncatedBiSeries out(order);
  for (std::size_t a = 0; a <= order; ++a) {
    if (lhs.coeffs_[a].is_zero()) continue;
    for (std::size_t b = 0; a + b <= order; ++b) {
      if (rhs.coeffs_[b].is_zero()) continue;
      out.coeffs_[a + b] += lhs.coeffs_[a] * rhs.coeffs_[b];
    }
  }
  return out;
}

TruncatedBiSeries pow(const TruncatedBiSeries& base, unsigned exponent) {
  TruncatedBiSeries result = TruncatedBiSeries::constant(base.order(), 1);
  TruncatedBiSeries square = base;
  while (exponent > 0) {
    if (exponent & 1U) result = result * square;
    exponent >>= 1U;
    if (exponent > 0) square = square * square;
  }
  return result;
}

LaurentPoly coeff_x(const TruncatedBiSeries& s, std::size_t n) {
  if (n > s.order()) {
    throw OrderExceeded("coefficient of x^" + std::to_string(n) + " requested from a series truncated at x^" +
                        std::to_string(s.order()));
  }
  return s[n];
}

namespace {

struct KernelExpander {
  std::size_t order;

  TruncatedBiSeries operator()(const InverseOneMinusXTk& kernel) const {
    std::vector<LaurentPoly> coeffs;
    coeffs.reserve(order + 1);
    for (std::size_t n = 0; n <= order; ++n) {
      coeffs.push_back(LaurentPoly::t_pow(kernel.k * static_cast<std::int64_t>(n)));
    }
    return {order, std::move(coeffs)};
  }

  TruncatedBiSeries operator()(const InverseT2MinusX&) const {
    std::vector<LaurentPoly> coeffs;
    coeffs.reserve(order + 1);
    for (std::size_t n = 0; n <= order; ++n) {
      coeffs.push_back(LaurentPoly::t_pow(-2 * static_cast<std::int64_t>(n) - 2));
    }
    return {order, std::move(coeffs)};
  }
};

}  // namespace

TruncatedBiSeries geom_kernel(const GeomKernel& kind, std::size_t order) {
  return std::visit(KernelExpander{order}, kind);
}

TruncatedBiSeries binomial_series(const LaurentPoly& a, const LaurentPoly& b, unsigned n, std::size_t order) {
  std::vector<LaurentPoly> coeffs;
  const std::size_t top = std::min<std::size_t>(n, order);
  coeffs.reserve(top + 1);
  BigInt binom = 1;
  for (std::size_t k = 0; k <= top; ++k) {
    coeffs.push_back(LaurentPoly::monomial(binom, 0) * pow(a, n - static_cast<unsigned>(k)) *
                     pow(b, static_cast<unsigned>(k)));
    binom = binom * (n - k) / (k + 1);
  }
  return {order, std::move(coeffs)};
}

}  // namespace flipchain
