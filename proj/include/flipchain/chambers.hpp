#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "flipchain/rational.hpp"

namespace flipchain {

// Wall-and-chamber structure for framed modules of type (2, d, O_X) on a
// genus-g curve, d < 0. Chamber i of the moduli chain is
// FM^i = FM^{sigma-s} for sigma in (max{0, 2i+d}, 2i+2+d).

std::int64_t floor_div(std::int64_t a, std::int64_t b);

// eta_i = max{0, 2i + d}
std::int64_t eta(std::int64_t i, std::int64_t d);

// Smallest chamber index floor(-d/2 - 1) + 1; the largest is -d - 1.
std::int64_t chamber_index_min(std::int64_t d);
inline std::int64_t chamber_index_max(std::int64_t d) { return -d - 1; }

// Dimension -d + 2g - 2 of every FM^i.
std::int64_t moduli_dim(std::int64_t d, int g);

// Ranks of the bundles W_i^- and W_i^+ over Pic^{i+1} X x S^{-d-i-1} X.
inline std::int64_t rank_w_minus(std::int64_t i, std::int64_t d, int g) { return d + g + 2 * i + 1; }
inline std::int64_t rank_w_plus(std::int64_t i, std::int64_t d) { return -d - i - 1; }

struct FlipLocusData {
  std::int64_t i = 0;
  std::int64_t rank_minus = 0;
  std::int64_t rank_plus = 0;
  std::int64_t base_dim = 0;  // g + (-d - i - 1)
  std::int64_t dim_p_minus = 0;
  std::int64_t dim_p_plus = 0;
  std::int64_t codim_minus = 0;
  std::int64_t codim_plus = 0;

  friend bool operator==(const FlipLocusData&, const FlipLocusData&) = default;
};

// Flip loci P W_i^-, P W_i^+ crossing the wall eta_{i+1}; valid for
// chamber_index_min(d) <= i <= -d - 2. Throws OutOfRange otherwise.
FlipLocusData flip_locus(std::int64_t i, std::int64_t d, int g);

struct Chamber {
  int position = 0;           // 0 .. t in the order of increasing sigma
  std::int64_t fm_index = 0;  // i such that this chamber carries FM^i
  Rational lower;
  Rational upper;
  bool upper_closed = false;  // only the last chamber, which ends at -d
  Rational representative;

  friend bool operator==(const Chamber&, const Chamber&) = default;
};

struct ChamberData {
  std::int64_t d = 0;
  int g = 0;
  std::vector<Rational> walls;  // sigma'_1 < ... < sigma'_t
  std::vector<Chamber> chambers;
  std::int64_t index_min = 0;
  std::int64_t index_max = 0;
  std::vector<FlipLocusData> flips;  // flips[j] crosses walls[j]

  friend bool operator==(const ChamberData&, const ChamberData&) = default;
};

ChamberData build_chambers(std::int64_t d, int g);

struct InChamber {
  int position = 0;
  std::int64_t fm_index = 0;
  friend bool operator==(const InChamber&, const InChamber&) = default;
};
struct OnWall {
  int position = 0;  // 1-based: walls[position - 1]
  Rational value;
  friend bool operator==(const OnWall&, const OnWall&) = default;
};
// sigma > -d: no semistable framed modules.
struct EmptyRegion {
  friend bool operator==(const EmptyRegion&, const EmptyRegion&) = default;
};

using ChamberLocation = std::variant<InChamber, OnWall, EmptyRegion>;

ChamberLocation chamber_of(const Rational& sigma, const ChamberData& cd);

}  // namespace flipchain
