#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "flipchain/betti.hpp"
#include "flipchain/framed_model.hpp"
#include "flipchain/rational.hpp"

namespace flipchain {

// Outcome of one named consistency check, aggregated over many cases.
struct CheckResult {
  std::string name;
  std::uint64_t cases = 0;
  std::uint64_t failed = 0;
  std::vector<std::string> samples;  // first few failure descriptions

  bool passed() const { return failed == 0; }
  void record(bool ok, const std::string& what);
  void merge(const CheckResult& other);

  friend bool operator==(const CheckResult&, const CheckResult&) = default;
};

struct GridConfig {
  int g_min = 2;
  int g_max = 5;
  std::int64_t d_min = -15;
  std::int64_t d_max = -1;
  unsigned threads = 0;  // 0: FLIPCHAIN_THREADS or hardware default
};

// Betti reports for every (g, d) of the grid, ordered by g then by
// decreasing d, whatever the worker count.
std::vector<BettiReport> betti_grid(const GridConfig& grid);

// Two-route equality, smoothness shadows, U(2,d), M_con, blow-up, flip-route
// equality, flip degree bounds and the t = 1 specialization.
std::vector<CheckResult> betti_checks(const std::vector<BettiReport>& reports);

// Wall positions and parity, flip-locus rank and codimension identities and
// the single-subobject wall agreement, for d in [d_min, -1] and the given
// genera.
std::vector<CheckResult> chamber_checks(std::int64_t d_min, int g_min, int g_max);

// P_t(S^1 X) = 1 + 2g t + t^2 for g = 0..g_max and P_t(S^2 E) for an
// elliptic curve.
std::vector<CheckResult> macdonald_checks(int g_max);

struct StabilitySuiteConfig {
  std::uint64_t seed = 7;
  std::size_t rank2_models = 10000;
  std::size_t chain_models = 2000;
  std::size_t unclosed_models = 1000;
  unsigned threads = 0;
};

// The parameters at which a model is examined: chamber representatives and
// walls of type (2, d, O_X) for rank-2 models with d < 0, otherwise the
// critical parameters, midpoints between them and one value on each side.
std::vector<Rational> sample_parameters(const FramedModel& m);

// Property suite on seeded random models: HN gradedness, destabilizer
// maximality, sigma bound, final chamber, rank-2 thresholds and the
// pair/framed-module equivalences.
std::vector<CheckResult> stability_suite(const StabilitySuiteConfig& config);

struct VerifyConfig {
  GridConfig grid;
  StabilitySuiteConfig stability;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  bool all_passed() const;

  friend bool operator==(const VerifyReport&, const VerifyReport&) = default;
};

VerifyReport verify_all(const VerifyConfig& config);

}  // namespace flipchain
