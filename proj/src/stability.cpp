#include "flipchain/stability.hpp"

#include <algorithm>
#include <functional>

#include "flipchain/errors.hpp"

namespace flipchain {
namespace {

void require_positive(const Rational& sigma) {
  if (sigma.sign() <= 0) throw InvalidInput("sigma must be a positive rational, got " + sigma.to_string());
}

// No sign check: the canonical parameter of an oriented object may be 0.
Rational slope_at(std::int64_t rank, std::int64_t degree, bool framed, const Rational& sigma) {
  Rational value(degree);
  if (framed) value -= sigma;
  return value / Rational(rank);
}

Rational ambient_at(const FramedModel& m, const Rational& sigma) {
  return slope_at(m.type().rank, m.type().degree, m.type().framing_nonzero, sigma);
}

Rational sub_at(const FramedModel& m, std::size_t i, const Rational& sigma) {
  const auto& s = m.subs()[i];
  return slope_at(s.rank, s.degree, s.fr, sigma);
}

bool inequality_holds(const FramedModel& m, const Rational& sigma, bool phi_only, bool strict) {
  const Rational bound = ambient_at(m, sigma);
  for (std::size_t i = 0; i < m.subs().size(); ++i) {
    if (phi_only && !m.subs()[i].phi_invariant) continue;
    const Rational s = sub_at(m, i, sigma);
    if (strict ? s >= bound : s > bound) return false;
  }
  return true;
}

// One candidate in the (possibly quotient) lattice handed to the selector.
struct Candidate {
  std::size_t index;
  std::int64_t rank;
  std::int64_t degree;
  bool framed;
};

// Maximal slope, then maximal rank, then the unique containment-maximal
// element among what is left. Only candidates beating `floor` (reaching it
// when `inclusive`) are eligible; ties are resolved only among those.
std::optional<std::size_t> select_maximal(const FramedModel& m, const std::vector<Candidate>& candidates,
                                          const Rational& sigma, const Rational& floor, bool inclusive,
                                          Rational* best_out = nullptr) {
  if (candidates.empty()) return std::nullopt;
  std::vector<Rational> slopes;
  slopes.reserve(candidates.size());
  for (const auto& c : candidates) slopes.push_back(slope_at(c.rank, c.degree, c.framed, sigma));
  const Rational best_slope = *std::max_element(slopes.begin(), slopes.end());
  if (best_out) *best_out = best_slope;
  if (inclusive ? best_slope < floor : best_slope <= floor) return std::nullopt;

  std::int64_t best_rank = 0;
  for (std::size_t k = 0; k < candidates.size(); ++k) {
    if (slopes[k] == best_slope) best_rank = std::max(best_rank, candidates[k].rank);
  }
  std::vector<std::size_t> tied;
  for (std::size_t k = 0; k < candidates.size(); ++k) {
    if (slopes[k] == best_slope && candidates[k].rank == best_rank) tied.push_back(candidates[k].index);
  }
  for (std::size_t top : tied) {
    const bool dominates = std::all_of(tied.begin(), tied.end(), [&](std::size_t other) {
      return other == top || m.strictly_contains(top, other);
    });
    if (dominates) return top;
  }
  std::string ids;
  for (std::size_t k : tied) ids += (ids.empty() ? "'" : ", '") + m.subs()[k].id + "'";
  throw AmbiguousModel("incomparable subobjects " + ids + " tie for maximal destabilizer at sigma = " +
                       sigma.to_string());
}

std::vector<Candidate> all_candidates(const FramedModel& m) {
  std::vector<Candidate> out;
  for (std::size_t i = 0; i < m.subs().size(); ++i) {
    const auto& s = m.subs()[i];
    out.push_back({i, s.rank, s.degree, s.fr});
  }
  return out;
}

bool has_eligible_kernel(const FramedModel& m, bool use_phi) {
  if (!m.type().framing_nonzero) return true;  // ker psi = E
  return std::any_of(m.subs().begin(), m.subs().end(),
                     [&](const SubobjectData& s) { return !s.fr && (!use_phi || s.phi_invariant); });
}

// Every subobject of maximal slope reaching the slope of E must be
// phi-invariant.
void check_top_slope_invariant(const FramedModel& m, const Rational& sigma, const char* where) {
  if (m.subs().empty()) return;
  Rational top = sub_at(m, 0, sigma);
  for (std::size_t i = 1; i < m.subs().size(); ++i) top = std::max(top, sub_at(m, i, sigma));
  if (top < ambient_at(m, sigma)) return;
  for (std::size_t i = 0; i < m.subs().size(); ++i) {
    if (sub_at(m, i, sigma) == top && !m.subs()[i].phi_invariant) {
      throw AxiomViolated("maximal destabilizing subobject '" + m.subs()[i].id + "' at " + where +
                          " sigma = " + sigma.to_string() + " is not phi-invariant");
    }
  }
}

std::optional<std::string> first_unseen_violator(const FramedModel& m, const Rational& sigma, bool strict) {
  const Rational bound = ambient_at(m, sigma);
  for (std::size_t i = 0; i < m.subs().size(); ++i) {
    if (m.subs()[i].phi_invariant) continue;
    const Rational s = sub_at(m, i, sigma);
    if (strict ? s >= bound : s > bound) return m.subs()[i].id;
  }
  return std::nullopt;
}

}  // namespace

Rational reduced_framed_slope(std::int64_t rank, std::int64_t degree, bool fr, const Rational& sigma,
                              bool framing_ambient_nonzero) {
  if (rank < 1) throw InvalidInput("slope of a rank " + std::to_string(rank) + " object");
  require_positive(sigma);
  return slope_at(rank, degree, fr && framing_ambient_nonzero, sigma);
}

Rational ambient_slope(const FramedModel& m, const Rational& sigma) {
  require_positive(sigma);
  return ambient_at(m, sigma);
}

Rational subobject_slope(const FramedModel& m, std::size_t index, const Rational& sigma) {
  require_positive(sigma);
  return sub_at(m, index, sigma);
}

std::vector<Rational> critical_parameters(const FramedModel& m) {
  const auto& t = m.type();
  std::vector<Rational> out;
  if (!t.framing_nonzero) return out;  // no slope depends on sigma
  const Rational r(t.rank);
  const Rational d(t.degree);
  for (const auto& s : m.subs()) {
    const Rational rs(s.rank);
    const Rational k(s.degree);
    // (k - fr sigma) / r' = (d - sigma) / r, solved for sigma.
    const Rational value = s.fr ? (r * k - rs * d) / (r - rs) : d - r * k / rs;
    if (value.sign() > 0) out.push_back(value);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool is_fm_semistable(const FramedModel& m, const Rational& sigma) {
  require_positive(sigma);
  return inequality_holds(m, sigma, false, false);
}

bool is_fm_stable(const FramedModel& m, const Rational& sigma) {
  require_positive(sigma);
  return inequality_holds(m, sigma, false, true);
}

bool is_pair_semistable(const FramedModel& m, const Rational& sigma) {
  require_positive(sigma);
  return inequality_holds(m, sigma, true, false);
}

bool is_pair_stable(const FramedModel& m, const Rational& sigma) {
  require_positive(sigma);
  return inequality_holds(m, sigma, true, true);
}

std::optional<SubobjectData> max_destabilizer(const FramedModel& m, const Rational& sigma) {
  require_positive(sigma);
  // E has maximal rank and contains everything, so it wins every tie.
  auto pick = select_maximal(m, all_candidates(m), sigma, ambient_at(m, sigma), false);
  if (!pick) return std::nullopt;
  return m.subs()[*pick];
}

std::optional<SubobjectData> max_destabilizing_subobject(const FramedModel& m, const Rational& sigma) {
  require_positive(sigma);
  auto pick = select_maximal(m, all_candidates(m), sigma, ambient_at(m, sigma), true);
  if (!pick) return std::nullopt;
  return m.subs()[*pick];
}

HNFiltration hn_filtration(const FramedModel& m, const Rational& sigma) {
  require_positive(sigma);
  HNFiltration out;
  std::optional<std::size_t> base;
  std::int64_t base_rank = 0;
  std::int64_t base_degree = 0;
  bool base_framed = false;

  while (true) {
    // Quotient E / base with the induced framing: zero once the framing has
    // been absorbed by a subobject.
    const std::int64_t q_rank = m.type().rank - base_rank;
    const std::int64_t q_degree = m.type().degree - base_degree;
    const bool q_framed = m.type().framing_nonzero && !base_framed;
    const Rational q_slope = slope_at(q_rank, q_degree, q_framed, sigma);

    std::vector<Candidate> candidates;
    for (std::size_t i = 0; i < m.subs().size(); ++i) {
      const auto& s = m.subs()[i];
      if (base && (!m.strictly_contains(i, *base) || s.rank <= base_rank)) continue;
      candidates.push_back({i, s.rank - base_rank, s.degree - base_degree, s.fr && !base_framed});
    }
    Rational best;
    auto pick = select_maximal(m, candidates, sigma, q_slope, false, &best);
    if (!pick) {
      out.graded.push_back({q_rank, q_degree, q_framed, q_slope});
      return out;
    }
    const auto& chosen = m.subs()[*pick];
    out.steps.push_back(chosen.id);
    const bool piece_framed = chosen.fr && !base_framed;
    out.graded.push_back({chosen.rank - base_rank, chosen.degree - base_degree, piece_framed, best});
    base = pick;
    base_rank = chosen.rank;
    base_degree = chosen.degree;
    base_framed = chosen.fr;
  }
}

std::optional<Rational> sigma_upper_bound(const FramedModel& m) {
  if (!m.type().framing_nonzero) throw InvalidInput("the sigma bound needs a nonzero framing");
  auto kernel = m.kernel_index();
  if (!kernel) return std::nullopt;
  const auto& t = m.type();
  const Rational d(t.degree);
  return d - Rational(t.rank) / Rational(m.subs()[*kernel].rank) * (d - Rational(m.context().frame_degree));
}

bool final_chamber_stable(const FramedModel& m) {
  if (!m.type().framing_nonzero) throw InvalidInput("final chamber test needs a nonzero framing");
  return !m.kernel_index().has_value();
}

std::optional<CanonicalParameter> sigma_max(const FramedModel& m, bool use_phi) {
  const auto& t = m.type();
  std::optional<std::size_t> best;
  Rational best_slope;
  for (std::size_t i = 0; i < m.subs().size(); ++i) {
    const auto& s = m.subs()[i];
    if (s.fr || (use_phi && !s.phi_invariant)) continue;
    const Rational slope = Rational(s.degree) / Rational(s.rank);
    if (!best || slope > best_slope || (slope == best_slope && s.rank > m.subs()[*best].rank)) {
      best = i;
      best_slope = slope;
    }
  }
  const Rational d(t.degree);
  if (!t.framing_nonzero) {
    // ker psi = E; E itself competes with its proper subobjects.
    const Rational e_slope = d / Rational(t.rank);
    if (!best || e_slope >= best_slope) return CanonicalParameter{"", Rational(0)};
  }
  if (!best) return std::nullopt;
  return CanonicalParameter{m.subs()[*best].id, d - Rational(t.rank) * best_slope};
}

bool is_oriented_semistable(const FramedModel& m, bool pair) {
  if (m.type().framing_nonzero && !has_eligible_kernel(m, pair)) return true;
  if (!m.type().delta_iso) return false;
  const auto p = sigma_max(m, pair);
  if (!p || p->sigma.sign() < 0) return false;
  return inequality_holds(m, p->sigma, pair, false);
}

bool oriented_split_holds(const FramedModel& m, bool pair) {
  const auto& split = m.split();
  if (!split) throw MissingSplitData("split-case oriented stability requested without a split descriptor");
  if (!m.type().framing_nonzero) return false;
  const auto p = sigma_max(m, pair);
  if (!p || p->sigma.sign() <= 0) return false;
  const auto k = m.index_of(split->kmax);
  const auto& kmax = m.subs()[*k];
  if (pair && !kmax.phi_invariant) return false;
  const Rational k_slope = Rational(kmax.degree) / Rational(kmax.rank);
  const Rational d(m.type().degree);
  if (d - Rational(m.type().rank) * k_slope != p->sigma) return false;
  if (!split->kmax_stable || !split->complement_stable) return false;
  const Rational complement_slope =
      (Rational(split->complement_degree) - p->sigma) / Rational(split->complement_rank);
  return k_slope == complement_slope;
}

bool is_oriented_stable(const FramedModel& m, bool pair, SplitEvaluation split) {
  if (m.type().framing_nonzero && !has_eligible_kernel(m, pair)) return true;
  if (!m.type().delta_iso) return false;
  const auto p = sigma_max(m, pair);
  if (!p || p->sigma.sign() <= 0) return false;
  if (inequality_holds(m, p->sigma, pair, true)) return true;
  if (split == SplitEvaluation::Required || m.split()) return oriented_split_holds(m, pair);
  return false;
}

bool EquivalenceReport::all_hold() const {
  return std::all_of(checks.begin(), checks.end(), [](const EquivalenceCheck& c) { return c.holds(); });
}

void check_constraint_closure(const FramedModel& m, const Rational& sigma) {
  require_positive(sigma);
  for (const auto& s : m.subs()) {
    if (!s.fr && !s.phi_invariant) {
      throw AxiomViolated("subobject '" + s.id + "' lies in ker psi but is not phi-invariant");
    }
  }
  check_top_slope_invariant(m, sigma, "the given");
  if (m.type().delta_iso && has_eligible_kernel(m, false)) {
    const auto p = sigma_max(m, false);
    if (p && p->sigma.sign() >= 0) check_top_slope_invariant(m, p->sigma, "the canonical");
  }
}

EquivalenceReport verify_rank2_equivalences(const FramedModel& m, const Rational& sigma) {
  if (m.type().rank != 2) {
    throw PreconditionFailed("rank-2 equivalences need a rank-2 model, got rank " + std::to_string(m.type().rank));
  }
  check_constraint_closure(m, sigma);

  EquivalenceReport report;
  report.sigma = sigma;

  auto add = [&](std::string name, bool fm, bool pair, const std::function<std::optional<std::string>()>& witness) {
    EquivalenceCheck check{std::move(name), fm, pair, std::nullopt};
    if (!check.holds()) check.witness = witness();
    report.checks.push_back(std::move(check));
  };

  add("semistable", is_fm_semistable(m, sigma), is_pair_semistable(m, sigma),
      [&] { return first_unseen_violator(m, sigma, false); });
  add("stable", is_fm_stable(m, sigma), is_pair_stable(m, sigma),
      [&] { return first_unseen_violator(m, sigma, true); });

  auto oriented_witness = [&](bool strict) -> std::optional<std::string> {
    for (const auto& s : m.subs()) {
      if (!s.fr && !s.phi_invariant) return s.id;
    }
    const auto p = sigma_max(m, false);
    if (!p) return std::nullopt;
    return first_unseen_violator(m, p->sigma, strict);
  };
  add("oriented_semistable", is_oriented_semistable(m, false), is_oriented_semistable(m, true),
      [&] { return oriented_witness(false); });
  add("oriented_stable", is_oriented_stable(m, false), is_oriented_stable(m, true),
      [&] { return oriented_witness(true); });
  return report;
}

}  // namespace flipchain
