#pragma once

#include <optional>
#include <string>
#include <vector>

#include "flipchain/betti.hpp"
#include "flipchain/chambers.hpp"
#include "flipchain/framed_model.hpp"
#include "flipchain/laurent_poly.hpp"
#include "flipchain/rational.hpp"
#include "flipchain/stability.hpp"
#include "flipchain/verify.hpp"
#include "json.hpp"

namespace flipchain {

using Json = nlohmann::ordered_json;

enum class Format { Text, Json, Csv, Latex };

// ---- stability-check report -------------------------------------------

struct SigmaVerdicts {
  Rational sigma;
  std::string location;  // "chamber 1 (FM^3)", "wall 1", "empty", "critical", ...
  bool fm_semistable = false;
  bool fm_stable = false;
  bool pair_semistable = false;
  bool pair_stable = false;
  std::optional<std::string> max_destabilizer;
  HNFiltration hn;
  std::optional<EquivalenceReport> equivalences;  // rank 2 only
  std::optional<std::string> equivalence_note;    // why equivalences were skipped

  friend bool operator==(const SigmaVerdicts&, const SigmaVerdicts&) = default;
};

struct OrientedVerdicts {
  bool semistable = false;
  bool stable = false;
  std::optional<CanonicalParameter> sigma_max;

  friend bool operator==(const OrientedVerdicts&, const OrientedVerdicts&) = default;
};

struct StabilityReport {
  std::string model_id;
  std::optional<Rational> sigma_bound;
  std::optional<bool> final_chamber_stable;
  OrientedVerdicts oriented_fm;
  OrientedVerdicts oriented_pair;
  std::vector<SigmaVerdicts> samples;

  // HN filtrations graded and every evaluated equivalence holding.
  std::vector<std::string> failures() const;

  friend bool operator==(const StabilityReport&, const StabilityReport&) = default;
};

// Verdicts at every parameter returned by sample_parameters(m).
StabilityReport build_stability_report(const FramedModel& m, std::string model_id);

// ---- JSON ----------------------------------------------------------------

Json to_json(const Rational& r);
Json to_json(const LaurentPoly& p);
Json to_json(const FramedModel& m);
Json to_json(const ChamberData& cd);
Json to_json(const BettiReport& r);
Json to_json(const StabilityReport& r);
Json to_json(const VerifyReport& r);

Rational rational_from_json(const Json& j);
LaurentPoly laurent_from_json(const Json& j);
FramedModel framed_model_from_json(const Json& j);
ChamberData chamber_data_from_json(const Json& j);
BettiReport betti_report_from_json(const Json& j);
StabilityReport stability_report_from_json(const Json& j);
VerifyReport verify_report_from_json(const Json& j);

// Reads a FramedModel file; InvalidInput on I/O or schema errors.
FramedModel load_framed_model(const std::string& path);

// ---- text / CSV / LaTeX ----------------------------------------------------

std::string render(const ChamberData& cd, Format format);
std::string render(const BettiReport& r, Format format);
std::string render(const StabilityReport& r, Format format);
std::string render(const VerifyReport& r, Format format);

}  // namespace flipchain
