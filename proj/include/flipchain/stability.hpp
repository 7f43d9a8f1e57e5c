#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "flipchain/framed_model.hpp"
#include "flipchain/rational.hpp"

namespace flipchain {

// (degree - delta * sigma) / rank, delta = 1 iff the framing is nonzero.
// On a curve every rank-normalized Hilbert polynomial has m-coefficient 1,
// so comparing these constants is the full reduced-polynomial comparison.
Rational reduced_framed_slope(std::int64_t rank, std::int64_t degree, bool fr, const Rational& sigma,
                              bool framing_ambient_nonzero = true);

Rational ambient_slope(const FramedModel& m, const Rational& sigma);
Rational subobject_slope(const FramedModel& m, std::size_t index, const Rational& sigma);

// Positive sigma at which some subobject's inequality turns into an
// equality, sorted and deduplicated. For rank 2 these are 2 deg F - d
// (framed F) and d - 2 deg F (F in ker psi).
std::vector<Rational> critical_parameters(const FramedModel& m);

// Framed modules: every subobject is tested.
bool is_fm_semistable(const FramedModel& m, const Rational& sigma);
bool is_fm_stable(const FramedModel& m, const Rational& sigma);

// Framed Hitchin pairs: only phi-invariant subobjects are tested.
bool is_pair_semistable(const FramedModel& m, const Rational& sigma);
bool is_pair_stable(const FramedModel& m, const Rational& sigma);

// The maximal destabilizing framed submodule, with E itself among the
// candidates: maximal slope, then maximal rank, then maximal under
// containment. Returns nullopt when E wins, i.e. when the model is
// sigma-semistable. Throws AmbiguousModel on an incomparable exact tie.
std::optional<SubobjectData> max_destabilizer(const FramedModel& m, const Rational& sigma);

// Same selection restricted to proper subobjects; returned only when its
// slope is >= the slope of E. This is the destabilizing subobject of a
// strictly semistable object (K_max / F_max at a wall).
std::optional<SubobjectData> max_destabilizing_subobject(const FramedModel& m, const Rational& sigma);

struct GradedPiece {
  std::int64_t rank = 0;
  std::int64_t degree = 0;
  bool framing = false;
  Rational slope;

  friend bool operator==(const GradedPiece&, const GradedPiece&) = default;
};

struct HNFiltration {
  std::vector<std::string> steps;  // ids of E_1 c E_2 c ...; E itself is implicit
  std::vector<GradedPiece> graded;

  friend bool operator==(const HNFiltration&, const HNFiltration&) = default;
};

HNFiltration hn_filtration(const FramedModel& m, const Rational& sigma);

// deg E - (rank E / rank ker psi) (deg E - deg H), with ker psi the
// maximal-rank fr == false subobject. nullopt when there is none.
std::optional<Rational> sigma_upper_bound(const FramedModel& m);

// Stable for all large sigma iff ker psi = 0, i.e. no fr == false subobject.
bool final_chamber_stable(const FramedModel& m);

struct CanonicalParameter {
  std::string kmax_id;  // empty when K_max is E itself (zero framing)
  Rational sigma;

  friend bool operator==(const CanonicalParameter&, const CanonicalParameter&) = default;
};

// sigma_{E,(phi,)psi} = deg E - (rank E / rank K_max) deg K_max, where K_max
// is the maximal destabilizing subobject of ker psi (phi-invariant ones only
// when use_phi). nullopt when ker psi has no eligible subobject.
std::optional<CanonicalParameter> sigma_max(const FramedModel& m, bool use_phi);

enum class SplitEvaluation {
  IfPresent,  // use the split alternative only when the model carries one
  Required,   // throw MissingSplitData when it does not
};

// Oriented framed modules (pair == false) and oriented framed Hitchin
// pairs (pair == true), stability taken at the canonical parameter.
bool is_oriented_semistable(const FramedModel& m, bool pair);
bool is_oriented_stable(const FramedModel& m, bool pair, SplitEvaluation split = SplitEvaluation::IfPresent);

// The split alternative on its own. Throws MissingSplitData without a
// descriptor.
bool oriented_split_holds(const FramedModel& m, bool pair);

struct EquivalenceCheck {
  std::string name;
  bool framed_module = false;  // verdict for (E, psi) / (E, delta, psi)
  bool hitchin_pair = false;   // verdict for the constrained pair
  std::optional<std::string> witness;

  bool holds() const { return framed_module == hitchin_pair; }

  friend bool operator==(const EquivalenceCheck&, const EquivalenceCheck&) = default;
};

struct EquivalenceReport {
  Rational sigma;
  std::vector<EquivalenceCheck> checks;

  bool all_hold() const;

  friend bool operator==(const EquivalenceReport&, const EquivalenceReport&) = default;
};

// Constraint closure: every fr == false subobject is phi-invariant, and every
// subobject of maximal slope that reaches the slope of E is phi-invariant
// (at sigma, and at the canonical parameter when the oriented inequality is
// evaluated). Throws AxiomViolated naming the offending subobject.
void check_constraint_closure(const FramedModel& m, const Rational& sigma);

// Pair vs framed-module verdicts for semistability, stability and their
// oriented versions on a rank-2 constraint-closed model.
EquivalenceReport verify_rank2_equivalences(const FramedModel& m, const Rational& sigma);

}  // namespace flipchain
