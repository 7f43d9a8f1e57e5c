#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "flipchain/laurent_poly.hpp"

namespace flipchain {

// P_t(P^n) = 1 + t^2 + ... + t^{2n}; P_t(P^{-1}) = 0 (empty space).
LaurentPoly projective_space_poincare(std::int64_t n);

// Macdonald: P_t(S^n X) = Coeff_{x^n} (1+xt)^{2g} / ((1-x)(1-xt^2)).
LaurentPoly sym_product_poincare(std::int64_t n, int g);

// P_t(Pic X) = (1+t)^{2g}
LaurentPoly jacobian_poincare(int g);

enum class FlipSide { Minus, Plus };

// P_t(P W_j^{+/-}) as a projective bundle over Pic^{j+1} X x S^{-d-j-1} X.
// Valid for chamber_index_min(d) <= j <= -d - 1.
LaurentPoly flip_locus_poincare(std::int64_t j, std::int64_t d, int g, FlipSide side);

// (t^{2d+2g+4j+2} - t^{-2d-2j-2}) / (1-t^2) * (1+t)^{2g} * P_t(S^{-d-j-1} X)
LaurentPoly flip_difference_formula(std::int64_t j, std::int64_t d, int g);
// P_t(P W_j^+) - P_t(P W_j^-)
LaurentPoly flip_difference_bundle(std::int64_t j, std::int64_t d, int g);
// Both routes; throws NotDivisible when they disagree.
LaurentPoly flip_difference(std::int64_t j, std::int64_t d, int g);

// (1+t)^{2g} (1 - t^{-2d+2g-2}) / (1 - t^2): P_t(FM^{-d-1}).
LaurentPoly terminal_poincare(std::int64_t d, int g);

// P_t(FM^i) = -sum_{j=i}^{-d-1} flip_difference(j).
LaurentPoly fm_poincare_recursive(std::int64_t i, std::int64_t d, int g);

// P_t(FM^i) from the single coefficient extraction
//   -(1+t)^{2g}/(1-t^2) Coeff_{x^{-d-i-1}}
//      (t^{2d+2g+4i+2}/(1-xt^4) - t^{-2d-2i}/(t^2-x)) (1+xt)^{2g}/((1-x)(1-xt^2)).
LaurentPoly fm_poincare_closed(std::int64_t i, std::int64_t d, int g);

// (1+t)^{2g} ((1+t^3)^{2g} - t^{2g}(1+t)^{2g}) / ((1-t^2)(1-t^4)), odd degree.
LaurentPoly u2d_poincare(int g);

// (1-t^2) / (1-t^{2(-d-2g+2)}) * P_t(FM^{i_min}); requires d odd and -d > 4g-4.
LaurentPoly u2d_from_bundle(int g, std::int64_t d);

// (1+t)^{2g} ((1+t^3)^{2g} - t^{2g}(1+t)^{2g}) / (1-t^2)^2, odd degree.
LaurentPoly mcon_poincare(int g);

// P_t(Pic X x X) (P_t(P^{c-1}) - 1): what blowing up Pic X x X with normal
// rank c adds to the Poincare polynomial. Zero for c = 1.
LaurentPoly blowup_correction(int g, std::int64_t c);

struct BlowupCheck {
  std::int64_t codim = 0;  // c = -d + g - 3
  LaurentPoly predicted;   // terminal + blowup_correction
  LaurentPoly actual;      // fm_poincare_recursive(-d-2)
  LaurentPoly diff;        // actual - predicted
  bool holds() const { return diff.is_zero(); }
};

// Requires d <= -3 so that the terminal flip exists.
BlowupCheck blowup_consistency(std::int64_t d, int g);

struct ChamberBetti {
  std::int64_t i = 0;
  LaurentPoly recursive;
  LaurentPoly closed;
  bool agree = false;
  std::int64_t degree = 0;
  bool palindromic = false;
  bool nonneg = false;
  bool constant_one = false;

  friend bool operator==(const ChamberBetti&, const ChamberBetti&) = default;
};

struct U2dEntry {
  LaurentPoly closed;
  std::optional<LaurentPoly> via_bundle;
  std::optional<bool> agree;

  friend bool operator==(const U2dEntry&, const U2dEntry&) = default;
};

struct BettiReport {
  std::int64_t d = 0;
  int g = 0;
  std::int64_t moduli_dim = 0;
  std::vector<ChamberBetti> chambers;
  std::optional<U2dEntry> u2d;         // odd d only
  std::optional<LaurentPoly> mcon;     // odd d only
  std::optional<bool> mcon_agree;      // mcon == u2d * (1 + t^2)
  LaurentPoly terminal;
  std::optional<bool> blowup_check;    // d <= -3 only

  // Every recorded check passed.
  bool consistent() const;
  // Human-readable names of the failing checks, empty when consistent.
  std::vector<std::string> failures() const;

  friend bool operator==(const BettiReport&, const BettiReport&) = default;
};

// Builds the report for every chamber, or only FM^chamber when given
// (OutOfRange outside the valid index range).
BettiReport build_betti_report(std::int64_t d, int g, std::optional<std::int64_t> chamber = std::nullopt);

}  // namespace flipchain
