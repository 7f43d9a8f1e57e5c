#include "flipchain/betti.hpp"

#include <string>

#include "flipchain/bi_series.hpp"
#include "flipchain/chambers.hpp"
#include "flipchain/errors.hpp"

namespace flipchain {
namespace {

void require_type(std::int64_t d, int g) {
  if (d >= 0) throw InvalidInput("degree must be negative, got d = " + std::to_string(d));
  if (g < 2) throw InvalidInput("genus must be at least 2, got g = " + std::to_string(g));
}

void require_flip_index(std::int64_t j, std::int64_t d) {
  if (j < chamber_index_min(d) || j > chamber_index_max(d)) {
    throw OutOfRange("index " + std::to_string(j) + " outside [" + std::to_string(chamber_index_min(d)) + ", " +
                     std::to_string(chamber_index_max(d)) + "] for d = " + std::to_string(d));
  }
}

std::string where(std::int64_t i, std::int64_t d, int g) {
  return "(i=" + std::to_string(i) + ", d=" + std::to_string(d) + ", g=" + std::to_string(g) + ")";
}

const LaurentPoly& one_minus_t2() {
  static const LaurentPoly p{{0, 1}, {2, -1}};
  return p;
}

// (1-t^{2n}) / (1-t^2) by exact division, n >= 0.
LaurentPoly projective_quotient(std::int64_t n) {
  return div_exact(LaurentPoly(1) - LaurentPoly::t_pow(2 * n), one_minus_t2());
}

// (1+t^3)^{2g} - t^{2g}(1+t)^{2g}
LaurentPoly fixed_determinant_numerator(int g) {
  const auto e = static_cast<unsigned>(2 * g);
  return pow(LaurentPoly{{0, 1}, {3, 1}}, e) - pow(LaurentPoly{{0, 1}, {1, 1}}, e).shifted(2 * g);
}

}  // namespace

LaurentPoly projective_space_poincare(std::int64_t n) {
  if (n < -1) throw InvalidInput("projective space of dimension " + std::to_string(n));
  LaurentPoly p;
  for (std::int64_t k = 0; k <= n; ++k) p += LaurentPoly::t_pow(2 * k);
  return p;
}

LaurentPoly sym_product_poincare(std::int64_t n, int g) {
  if (n < 0) throw InvalidInput("symmetric power must be nonnegative, got " + std::to_string(n));
  if (g < 0) throw InvalidInput("genus must be nonnegative, got " + std::to_string(g));
  const auto order = static_cast<std::size_t>(n);
  const auto series = binomial_series(1, LaurentPoly::t_pow(1), static_cast<unsigned>(2 * g), order) *
                      geom_kernel(InverseOneMinusXTk{0}, order) * geom_kernel(InverseOneMinusXTk{2}, order);
  return coeff_x(series, order);
}

LaurentPoly jacobian_poincare(int g) { return pow(LaurentPoly{{0, 1}, {1, 1}}, static_cast<unsigned>(2 * g)); }

LaurentPoly flip_locus_poincare(std::int64_t j, std::int64_t d, int g, FlipSide side) {
  require_type(d, g);
  require_flip_index(j, d);
  const std::int64_t rank = side == FlipSide::Minus ? rank_w_minus(j, d, g) : rank_w_plus(j, d);
  if (rank < 0) throw NegativeExponentSurvived("negative bundle rank at " + where(j, d, g));
  return projective_space_poincare(rank - 1) * jacobian_poincare(g) * sym_product_poincare(-d - j - 1, g);
}

LaurentPoly flip_difference_formula(std::int64_t j, std::int64_t d, int g) {
  require_type(d, g);
  require_flip_index(j, d);
  const LaurentPoly numerator = LaurentPoly::t_pow(2 * d + 2 * g + 4 * j + 2) - LaurentPoly::t_pow(-2 * d - 2 * j - 2);
  return div_exact(numerator, one_minus_t2()) * jacobian_poincare(g) * sym_product_poincare(-d - j - 1, g);
}

LaurentPoly flip_difference_bundle(std::int64_t j, std::int64_t d, int g) {
  return flip_locus_poincare(j, d, g, FlipSide::Plus) - flip_locus_poincare(j, d, g, FlipSide::Minus);
}

LaurentPoly flip_difference(std::int64_t j, std::int64_t d, int g) {
  LaurentPoly formula = flip_difference_formula(j, d, g);
  const LaurentPoly bundle = flip_difference_bundle(j, d, g);
  if (formula != bundle) {
    throw NotDivisible("flip difference routes disagree at " + where(j, d, g) + ": formula " + formula.to_string() +
                       " vs bundle " + bundle.to_string());
  }
  return formula;
}

LaurentPoly terminal_poincare(std::int64_t d, int g) {
  require_type(d, g);
  return jacobian_poincare(g) * projective_quotient(-d + g - 1);
}

LaurentPoly fm_poincare_recursive(std::int64_t i, std::int64_t d, int g) {
  require_type(d, g);
  require_flip_index(i, d);
  LaurentPoly sum;
  for (std::int64_t j = i; j <= -d - 1; ++j) sum -= flip_difference(j, d, g);
  if (!sum.is_polynomial()) {
    throw NegativeExponentSurvived("recursive P_t(FM^i) has negative exponents at " + where(i, d, g));
  }
  return sum;
}

LaurentPoly fm_poincare_closed(std::int64_t i, std::int64_t d, int g) {
  require_type(d, g);
  require_flip_index(i, d);
  const auto order = static_cast<std::size_t>(-d - i - 1);
  const TruncatedBiSeries bracket =
      LaurentPoly::t_pow(2 * d + 2 * g + 4 * i + 2) * geom_kernel(InverseOneMinusXTk{4}, order) -
      LaurentPoly::t_pow(-2 * d - 2 * i) * geom_kernel(InverseT2MinusX{}, order);
  const TruncatedBiSeries macdonald = binomial_series(1, LaurentPoly::t_pow(1), static_cast<unsigned>(2 * g), order) *
                                      geom_kernel(InverseOneMinusXTk{0}, order) *
                                      geom_kernel(InverseOneMinusXTk{2}, order);
  const LaurentPoly extracted = coeff_x(bracket * macdonald, order);
  LaurentPoly result = div_exact(-(jacobian_poincare(g) * extracted), one_minus_t2());
  if (!result.is_polynomial()) {
    throw NegativeExponentSurvived("closed P_t(FM^i) has negative exponents at " + where(i, d, g));
  }
  return result;
}

LaurentPoly u2d_poincare(int g) {
  if (g < 2) throw InvalidInput("genus must be at least 2, got g = " + std::to_string(g));
  const LaurentPoly den = one_minus_t2() * LaurentPoly{{0, 1}, {4, -1}};
  return div_exact(jacobian_poincare(g) * fixed_determinant_numerator(g), den);
}

LaurentPoly u2d_from_bundle(int g, std::int64_t d) {
  require_type(d, g);
  if (d % 2 == 0) throw PreconditionFailed("via-bundle route needs odd d, got d = " + std::to_string(d));
  if (-d <= 4 * g - 4) {
    throw PreconditionFailed("via-bundle route needs -d > 4g-4, got d = " + std::to_string(d) +
                             ", g = " + std::to_string(g));
  }
  const LaurentPoly fm = fm_poincare_recursive(chamber_index_min(d), d, g);
  return div_exact(one_minus_t2() * fm, LaurentPoly(1) - LaurentPoly::t_pow(2 * (-d - 2 * g + 2)));
}

LaurentPoly mcon_poincare(int g) {
  if (g < 2) throw InvalidInput("genus must be at least 2, got g = " + std::to_string(g));
  return div_exact(jacobian_poincare(g) * fixed_determinant_numerator(g), one_minus_t2() * one_minus_t2());
}

LaurentPoly blowup_correction(int g, std::int64_t c) {
  if (c < 1) throw InvalidInput("blow-up center codimension must be positive, got " + std::to_string(c));
  return jacobian_poincare(g) * sym_product_poincare(1, g) * (projective_space_poincare(c - 1) - LaurentPoly(1));
}

BlowupCheck blowup_consistency(std::int64_t d, int g) {
  require_type(d, g);
  if (d > -3) throw PreconditionFailed("blow-up check needs d <= -3, got d = " + std::to_string(d));
  BlowupCheck check;
  check.codim = -d + g - 3;
  check.predicted = terminal_poincare(d, g) + blowup_correction(g, check.codim);
  check.actual = fm_poincare_recursive(-d - 2, d, g);
  check.diff = check.actual - check.predicted;
  return check;
}

bool BettiReport::consistent() const { return failures().empty(); }

std::vector<std::string> BettiReport::failures() const {
  std::vector<std::string> out;
  const std::int64_t expected_degree = 2 * moduli_dim;
  for (const auto& c : chambers) {
    const std::string at = where(c.i, d, g);
    if (!c.agree) out.push_back("two-route equality " + at);
    if (c.degree != expected_degree) out.push_back("degree 2(-d+2g-2) " + at);
    if (!c.palindromic) out.push_back("palindromic " + at);
    if (!c.nonneg) out.push_back("nonnegative coefficients " + at);
    if (!c.constant_one) out.push_back("constant term 1 " + at);
  }
  if (u2d && u2d->agree.has_value() && !*u2d->agree) {
    out.push_back("U(2,d) via-bundle route (d=" + std::to_string(d) + ", g=" + std::to_string(g) + ")");
  }
  if (mcon_agree.has_value() && !*mcon_agree) out.push_back("M_con = U(2,d)(1+t^2) (g=" + std::to_string(g) + ")");
  if (blowup_check.has_value() && !*blowup_check) {
    out.push_back("blow-up consistency (d=" + std::to_string(d) + ", g=" + std::to_string(g) + ")");
  }
  return out;
}

BettiReport build_betti_report(std::int64_t d, int g, std::optional<std::int64_t> chamber) {
  require_type(d, g);
  if (chamber) require_flip_index(*chamber, d);
  BettiReport r;
  r.d = d;
  r.g = g;
  r.moduli_dim = moduli_dim(d, g);
  r.terminal = terminal_poincare(d, g);

  const std::int64_t lo = chamber.value_or(chamber_index_min(d));
  const std::int64_t hi = chamber.value_or(chamber_index_max(d));
  // Telescoping from the terminal chamber downwards reuses the partial sums.
  LaurentPoly running;
  std::vector<ChamberBetti> entries;
  for (std::int64_t j = chamber_index_max(d); j >= lo; --j) {
    running -= flip_difference(j, d, g);
    if (j > hi) continue;
    if (!running.is_polynomial()) {
      throw NegativeExponentSurvived("recursive P_t(FM^i) has negative exponents at " + where(j, d, g));
    }
    ChamberBetti c;
    c.i = j;
    c.recursive = running;
    c.closed = fm_poincare_closed(j, d, g);
    c.agree = c.recursive == c.closed;
    c.degree = c.recursive.max_exponent().value_or(-1);
    c.palindromic = c.recursive.is_palindromic();
    c.nonneg = c.recursive.has_nonnegative_coefficients();
    c.constant_one = c.recursive.coeff(0) == 1;
    entries.push_back(std::move(c));
  }
  r.chambers.assign(entries.rbegin(), entries.rend());

  if (d % 2 != 0) {
    U2dEntry u;
    u.closed = u2d_poincare(g);
    if (-d > 4 * g - 4) {
      u.via_bundle = u2d_from_bundle(g, d);
      u.agree = *u.via_bundle == u.closed;
    }
    r.mcon = mcon_poincare(g);
    r.mcon_agree = *r.mcon == u.closed * LaurentPoly{{0, 1}, {2, 1}};
    r.u2d = std::move(u);
  }
  if (d <= -3) r.blowup_check = blowup_consistency(d, g).holds();
  return r;
}

}  // namespace flipchain
