#pragma once

#include <cstddef>
#include <cstdint>
#include <variant>
#include <vector>

#include "flipchain/laurent_poly.hpp"

namespace flipchain {

// Power series in x truncated after x^order, with LaurentPoly coefficients
// in t. Products only ever read coefficients up to the common order, so
// every stored coefficient is exact.
class TruncatedBiSeries {
 public:
  explicit TruncatedBiSeries(std::size_t order);
  // coefficients[k] is the coefficient of x^k; missing entries are zero and
  // entries past `order` are dropped.
  TruncatedBiSeries(std::size_t order, std::vector<LaurentPoly> coefficients);

  // The constant series c (c * x^0).
  static TruncatedBiSeries constant(std::size_t order, LaurentPoly c);

  std::size_t order() const { return coeffs_.size() - 1; }
  const std::vector<LaurentPoly>& coefficients() const { return coeffs_; }
  const LaurentPoly& operator[](std::size_t k) const { return coeffs_.at(k); }

  TruncatedBiSeries truncated(std::size_t order) const;

  TruncatedBiSeries& operator+=(const TruncatedBiSeries& rhs);
  TruncatedBiSeries& operator-=(const TruncatedBiSeries& rhs);
  TruncatedBiSeries& operator*=(const LaurentPoly& scalar);

  // Sums and products are truncated at the smaller of the two orders.
  friend TruncatedBiSeries operator+(const TruncatedBiSeries& lhs, const TruncatedBiSeries& rhs);
  friend TruncatedBiSeries operator-(const TruncatedBiSeries& lhs, const TruncatedBiSeries& rhs);
  friend TruncatedBiSeries operator*(const TruncatedBiSeries& lhs, const TruncatedBiSeries& rhs);
  friend TruncatedBiSeries operator*(TruncatedBiSeries lhs, const LaurentPoly& scalar) { return lhs *= scalar; }
  friend TruncatedBiSeries operator*(const LaurentPoly& scalar, TruncatedBiSeries rhs) { return rhs *= scalar; }
  friend bool operator==(const TruncatedBiSeries&, const TruncatedBiSeries&) = default;

 private:
  std::vector<LaurentPoly> coeffs_;
};

TruncatedBiSeries pow(const TruncatedBiSeries& base, unsigned exponent);

// Exact coefficient of x^n. Throws OrderExceeded when n > s.order().
LaurentPoly coeff_x(const TruncatedBiSeries& s, std::size_t n);

// 1 / (1 - x t^k) = sum_n x^n t^(k n)
struct InverseOneMinusXTk {
  std::int64_t k = 0;
};
// 1 / (t^2 - x) = sum_n x^n t^(-2n-2), expanded in x with Laurent
// coefficients in t.
struct InverseT2MinusX {};

using GeomKernel = std::variant<InverseOneMinusXTk, InverseT2MinusX>;

TruncatedBiSeries geom_kernel(const GeomKernel& kind, std::size_t order);

// (a + b x)^n truncated at `order`, by the binomial theorem.
TruncatedBiSeries binomial_series(const LaurentPoly& a, const LaurentPoly& b, unsigned n, std::size_t order);

}  // namespace flipchain
