#include "flipchain/chambers.hpp"

#include <algorithm>
#include <string>

#include "flipchain/errors.hpp"

namespace flipchain {
namespace {

void require_type(std::int64_t d, int g) {
  if (d >= 0) throw InvalidInput("degree must be negative, got d = " + std::to_string(d));
  if (g < 2) throw InvalidInput("genus must be at least 2, got g = " + std::to_string(g));
}

}  // namespace

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t eta(std::int64_t i, std::int64_t d) { return std::max<std::int64_t>(0, 2 * i + d); }

std::int64_t chamber_index_min(std::int64_t d) { return floor_div(-d - 2, 2) + 1; }

std::int64_t moduli_dim(std::int64_t d, int g) {
  require_type(d, g);
  return -d + 2 * g - 2;
}

FlipLocusData flip_locus(std::int64_t i, std::int64_t d, int g) {
  require_type(d, g);
  if (i < chamber_index_min(d) || i > -d - 2) {
    throw OutOfRange("flip index " + std::to_string(i) + " outside [" + std::to_string(chamber_index_min(d)) + ", " +
                     std::to_string(-d - 2) + "] for d = " + std::to_string(d));
  }
  FlipLocusData f;
  f.i = i;
  f.rank_minus = rank_w_minus(i, d, g);
  f.rank_plus = rank_w_plus(i, d);
  f.base_dim = g + (-d - i - 1);
  f.dim_p_minus = f.base_dim + f.rank_minus - 1;
  f.dim_p_plus = f.base_dim + f.rank_plus - 1;
  const std::int64_t dim = moduli_dim(d, g);
  f.codim_minus = dim - f.dim_p_minus;
  f.codim_plus = dim - f.dim_p_plus;
  return f;
}

ChamberData build_chambers(std::int64_t d, int g) {
  require_type(d, g);
  ChamberData cd;
  cd.d = d;
  cd.g = g;
  cd.index_min = chamber_index_min(d);
  cd.index_max = chamber_index_max(d);

  std::vector<std::int64_t> walls;
  for (std::int64_t i = cd.index_min + 1; i <= cd.index_max; ++i) walls.push_back(eta(i, d));
  std::sort(walls.begin(), walls.end());
  walls.erase(std::unique(walls.begin(), walls.end()), walls.end());
  for (auto w : walls) cd.walls.emplace_back(w);

  const Rational top(-d);
  Rational lower(0);
  for (std::size_t j = 0; j <= cd.walls.size(); ++j) {
    Chamber c;
    c.position = static_cast<int>(j);
    c.fm_index = cd.index_min + static_cast<std::int64_t>(j);
    c.lower = lower;
    c.upper = j < cd.walls.size() ? cd.walls[j] : top;
    c.upper_closed = j == cd.walls.size();
    c.representative = midpoint(c.lower, c.upper);
    lower = c.upper;
    cd.chambers.push_back(c);
  }
  for (std::size_t j = 0; j < cd.walls.size(); ++j) {
    cd.flips.push_back(flip_locus(cd.index_min + static_cast<std::int64_t>(j), d, g));
  }
  return cd;
}

ChamberLocation chamber_of(const Rational& sigma, const ChamberData& cd) {
  if (sigma.sign() <= 0) throw InvalidInput("sigma must be positive, got " + sigma.to_string());
  if (sigma > Rational(-cd.d)) return EmptyRegion{};
  for (std::size_t j = 0; j < cd.walls.size(); ++j) {
    if (sigma == cd.walls[j]) return OnWall{static_cast<int>(j) + 1, cd.walls[j]};
    if (sigma < cd.walls[j]) return InChamber{static_cast<int>(j), cd.chambers[j].fm_index};
  }
  const auto& last = cd.chambers.back();
  return InChamber{last.position, last.fm_index};
}

}  // namespace flipchain
