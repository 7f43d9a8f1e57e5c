#include "flipchain/verify.hpp"

#include <algorithm>
#include <map>

#include "flipchain/chambers.hpp"
#include "flipchain/errors.hpp"
#include "flipchain/parallel.hpp"
#include "flipchain/random_models.hpp"
#include "flipchain/stability.hpp"

namespace flipchain {
namespace {

constexpr std::size_t kMaxSamples = 5;

std::string at(std::int64_t d, int g) { return "(d=" + std::to_string(d) + ", g=" + std::to_string(g) + ")"; }
std::string at(std::int64_t i, std::int64_t d, int g) {
  return "(i=" + std::to_string(i) + ", d=" + std::to_string(d) + ", g=" + std::to_string(g) + ")";
}

// Collects results by name, preserving first-seen order.
class Ledger {
 public:
  CheckResult& operator[](const std::string& name) {
    auto it = index_.find(name);
    if (it != index_.end()) return results_[it->second];
    index_.emplace(name, results_.size());
    results_.push_back(CheckResult{name, 0, 0, {}});
    return results_.back();
  }
  void merge(const std::vector<CheckResult>& results) {
    for (const auto& r : results) (*this)[r.name].merge(r);
  }
  std::vector<CheckResult> take() { return std::move(results_); }

 private:
  std::map<std::string, std::size_t> index_;
  std::vector<CheckResult> results_;
};

std::int64_t flip_family_dim(std::int64_t j, std::int64_t d, int g, std::int64_t rank) {
  return g + (-d - j - 1) + rank - 1;
}

void check_flip_routes(std::int64_t d, int g, Ledger& ledger) {
  LaurentPoly running;
  std::map<std::int64_t, BigInt> value_at_one;
  for (std::int64_t j = chamber_index_max(d); j >= chamber_index_min(d); --j) {
    const LaurentPoly formula = flip_difference_formula(j, d, g);
    const LaurentPoly bundle = flip_difference_bundle(j, d, g);
    ledger["flip_route_equality"].record(formula == bundle, at(j, d, g));

    const std::int64_t rank_plus = rank_w_plus(j, d);
    const std::int64_t rank_minus = rank_w_minus(j, d, g);
    const LaurentPoly minus = flip_locus_poincare(j, d, g, FlipSide::Minus);
    ledger["flip_degree_bound"].record(
        minus.max_exponent() == 2 * flip_family_dim(j, d, g, rank_minus), "P W^- " + at(j, d, g));
    if (rank_plus > 0) {
      const LaurentPoly plus = flip_locus_poincare(j, d, g, FlipSide::Plus);
      ledger["flip_degree_bound"].record(
          plus.max_exponent() == 2 * flip_family_dim(j, d, g, rank_plus), "P W^+ " + at(j, d, g));
    }
    running -= formula;
    value_at_one[j] = running.evaluate(1);
  }
  for (const auto& [j, expected] : value_at_one) {
    ledger["euler_specialization"].record(fm_poincare_closed(j, d, g).evaluate(1) == expected, at(j, d, g));
  }
}

bool strictly_semistable(const FramedModel& m, const Rational& sigma) {
  return is_fm_semistable(m, sigma) && !is_fm_stable(m, sigma);
}

FramedModel single_line(std::int64_t d, int g, std::int64_t degree, bool fr) {
  return FramedModel(CurveContext{g, 0}, FramedType{2, d, true, false, false},
                     {SubobjectData{"L", 1, degree, fr, true, {}}});
}

void check_wall_agreement(const ChamberData& cd, Ledger& ledger) {
  auto& agreement = ledger["wall_stability_agreement"];
  const std::int64_t d = cd.d;
  for (std::size_t j = 0; j < cd.walls.size(); ++j) {
    const Rational& w = cd.walls[j];
    // d - 2k = w for a kernel line of degree k.
    const Rational k = (Rational(d) - w) / Rational(2);
    bool ok = k.is_integer();
    if (ok) {
      const auto m = single_line(d, cd.g, static_cast<std::int64_t>(k.numerator()), false);
      ok = strictly_semistable(m, w) && !strictly_semistable(m, cd.chambers[j].representative) &&
           !strictly_semistable(m, cd.chambers[j + 1].representative);
    }
    agreement.record(ok, "wall " + w.to_string() + " " + at(d, cd.g));
  }
  for (const auto& c : cd.chambers) {
    bool ok = true;
    for (std::int64_t k = d - 4; k <= -d + 4 && ok; ++k) {
      for (bool fr : {false, true}) {
        if (strictly_semistable(single_line(d, cd.g, k, fr), c.representative)) ok = false;
      }
    }
    agreement.record(ok, "chamber representative " + c.representative.to_string() + " " + at(d, cd.g));
  }
}

// Rank-2, framing nonzero: the per-subobject half-lines.
bool threshold_verdict(const FramedModel& m, const Rational& sigma, bool strict) {
  const Rational d(m.type().degree);
  for (const auto& s : m.subs()) {
    const Rational k(s.degree);
    const Rational edge = s.fr ? Rational(2) * k - d : d - Rational(2) * k;
    const bool holds = s.fr ? (strict ? sigma > edge : sigma >= edge) : (strict ? sigma < edge : sigma <= edge);
    if (!holds) return false;
  }
  return true;
}

void examine_generic(const FramedModel& m, const std::vector<Rational>& sigmas, const std::string& label,
                     Ledger& ledger) {
  const auto& t = m.type();
  for (const auto& sigma : sigmas) {
    const std::string where = label + " at sigma=" + sigma.to_string();

    const auto hn = hn_filtration(m, sigma);
    bool graded_ok = !hn.graded.empty();
    std::int64_t rank_sum = 0;
    std::int64_t degree_sum = 0;
    for (std::size_t k = 0; k < hn.graded.size(); ++k) {
      rank_sum += hn.graded[k].rank;
      degree_sum += hn.graded[k].degree;
      if (k > 0 && !(hn.graded[k].slope < hn.graded[k - 1].slope)) graded_ok = false;
    }
    graded_ok = graded_ok && rank_sum == t.rank && degree_sum == t.degree;
    const auto md = max_destabilizer(m, sigma);
    const bool first_ok = md ? (!hn.steps.empty() && hn.steps.front() == md->id) : hn.steps.empty();
    ledger["hn_gradedness"].record(graded_ok && first_ok, where);

    const Rational e = ambient_slope(m, sigma);
    bool max_ok = true;
    if (md) {
      const auto top = *m.index_of(md->id);
      const Rational best = subobject_slope(m, top, sigma);
      max_ok = best > e;
      for (std::size_t i = 0; i < m.subs().size(); ++i) {
        const Rational s = subobject_slope(m, i, sigma);
        if (s > best) max_ok = false;
        if (s == best && i != top && !m.strictly_contains(top, i)) max_ok = false;
      }
    } else {
      for (std::size_t i = 0; i < m.subs().size(); ++i) {
        if (subobject_slope(m, i, sigma) > e) max_ok = false;
      }
    }
    ledger["max_destabilizer_maximality"].record(max_ok, where);

    const auto kernel = m.kernel_index();
    if (t.framing_nonzero && kernel && m.subs()[*kernel].rank == t.rank - 1 && is_fm_semistable(m, sigma)) {
      ledger["sigma_upper_bound"].record(sigma <= *sigma_upper_bound(m), where);
    }

    if (t.rank == 2 && t.framing_nonzero) {
      const bool ok = is_fm_semistable(m, sigma) == threshold_verdict(m, sigma, false) &&
                      is_fm_stable(m, sigma) == threshold_verdict(m, sigma, true);
      ledger["rank2_thresholds"].record(ok, where);
    }
  }

  if (t.framing_nonzero) {
    const auto critical = critical_parameters(m);
    const Rational big = (critical.empty() ? Rational(0) : critical.back()) + Rational(1);
    bool ok = true;
    for (const Rational& sigma : {big, big + Rational(1, 3), Rational(3) * big + Rational(5)}) {
      if (is_fm_stable(m, sigma) != final_chamber_stable(m)) ok = false;
    }
    ledger["final_chamber"].record(ok, label);
  }
}

std::vector<CheckResult> examine_model(std::size_t k, const StabilitySuiteConfig& config) {
  Ledger ledger;
  const std::size_t chains_end = config.rank2_models + config.chain_models;
  auto rng = model_rng(config.seed, k);
  std::string label = "model #" + std::to_string(k) + " (seed " + std::to_string(config.seed) + ")";
  try {
    if (k < config.rank2_models) {
      const FramedModel m = random_rank2_model(rng);
      const auto sigmas = sample_parameters(m);
      examine_generic(m, sigmas, label, ledger);
      for (const auto& sigma : sigmas) {
        const std::string where = label + " at sigma=" + sigma.to_string();
        try {
          ledger["rank2_equivalences"].record(verify_rank2_equivalences(m, sigma).all_hold(), where);
        } catch (const AxiomViolated& e) {
          ledger["rank2_equivalences"].record(false, where + ": " + e.what());
        }
      }
    } else if (k < chains_end) {
      const FramedModel m = random_chain_model(rng);
      examine_generic(m, sample_parameters(m), label, ledger);
    } else {
      Rank2Options options;
      options.constraint_closed = false;
      const FramedModel m = random_rank2_model(rng, options);
      for (const auto& sigma : sample_parameters(m)) {
        bool ok = true;
        try {
          ok = verify_rank2_equivalences(m, sigma).all_hold();
        } catch (const AxiomViolated&) {
          // Unclosed model rejected before any verdict is compared.
        }
        ledger["closure_axiom_guard"].record(ok, label + " at sigma=" + sigma.to_string());
      }
    }
    ledger["models_without_errors"].record(true, label);
  } catch (const Error& e) {
    ledger["models_without_errors"].record(false, label + ": " + e.what());
  }
  return ledger.take();
}

}  // namespace

void CheckResult::record(bool ok, const std::string& what) {
  ++cases;
  if (ok) return;
  ++failed;
  if (samples.size() < kMaxSamples) samples.push_back(what);
}

void CheckResult::merge(const CheckResult& other) {
  cases += other.cases;
  failed += other.failed;
  for (const auto& s : other.samples) {
    if (samples.size() < kMaxSamples) samples.push_back(s);
  }
}

std::vector<BettiReport> betti_grid(const GridConfig& grid) {
  std::vector<std::pair<int, std::int64_t>> cells;
  for (int g = grid.g_min; g <= grid.g_max; ++g) {
    for (std::int64_t d = grid.d_max; d >= grid.d_min; --d) cells.emplace_back(g, d);
  }
  return parallel_map<BettiReport>(cells.size(), resolve_threads(grid.threads), [&](std::size_t k) {
    return build_betti_report(cells[k].second, cells[k].first);
  });
}

std::vector<CheckResult> betti_checks(const std::vector<BettiReport>& reports) {
  Ledger ledger;
  for (const auto& r : reports) {
    for (const auto& c : r.chambers) {
      ledger["two_route_betti"].record(c.agree, at(c.i, r.d, r.g));
      const bool smooth = c.palindromic && c.nonneg && c.constant_one && c.degree == 2 * r.moduli_dim;
      ledger["smoothness_shadows"].record(smooth, at(c.i, r.d, r.g));
    }
    if (r.u2d && r.u2d->agree) ledger["u2d_via_bundle"].record(*r.u2d->agree, at(r.d, r.g));
    if (r.mcon_agree) ledger["mcon_product"].record(*r.mcon_agree, at(r.d, r.g));
    if (r.blowup_check) ledger["blowup_consistency"].record(*r.blowup_check, at(r.d, r.g));
    check_flip_routes(r.d, r.g, ledger);
  }
  return ledger.take();
}

std::vector<CheckResult> chamber_checks(std::int64_t d_min, int g_min, int g_max) {
  Ledger ledger;
  for (int g = g_min; g <= g_max; ++g) {
    for (std::int64_t d = -1; d >= d_min; --d) {
      const ChamberData cd = build_chambers(d, g);
      bool walls_ok = cd.chambers.size() == cd.walls.size() + 1 &&
                      std::is_sorted(cd.walls.begin(), cd.walls.end()) &&
                      std::holds_alternative<EmptyRegion>(chamber_of(Rational(-d) + Rational(1, 2), cd)) &&
                      std::holds_alternative<InChamber>(chamber_of(Rational(-d), cd));
      if (cd.walls.empty()) {
        // eta_{-d-1} = max{0, -d-2} = 0 is not a positive wall.
        walls_ok = walls_ok && eta(-d - 1, d) == 0;
      } else {
        walls_ok = walls_ok && cd.walls.back() == Rational(-d - 2) && cd.walls.front() == Rational(d % 2 != 0 ? 1 : 2);
      }
      for (std::int64_t i = cd.index_min + 1; i <= cd.index_max; ++i) {
        walls_ok = walls_ok && std::find(cd.walls.begin(), cd.walls.end(), Rational(eta(i, d))) != cd.walls.end();
      }
      ledger["wall_positions"].record(walls_ok, at(d, g));

      for (const auto& f : cd.flips) {
        bool ok = f.rank_minus > 0 && f.rank_plus > 0 && f.rank_minus + f.rank_plus == g + f.i;
        if (f.i < -d - 2) {
          ok = ok && f.codim_minus >= 2 && f.codim_plus >= 2;
        } else {
          ok = ok && f.codim_minus == 1 && f.dim_p_minus == -d + 2 * g - 3;
        }
        ledger["flip_locus_identities"].record(ok, at(f.i, d, g));
      }
      if (g == g_min) check_wall_agreement(cd, ledger);
    }
  }
  return ledger.take();
}

std::vector<CheckResult> macdonald_checks(int g_max) {
  Ledger ledger;
  for (int g = 0; g <= g_max; ++g) {
    ledger["macdonald"].record(sym_product_poincare(0, g) == LaurentPoly(1), "S^0, g=" + std::to_string(g));
    ledger["macdonald"].record(sym_product_poincare(1, g) == LaurentPoly{{0, 1}, {1, 2 * g}, {2, 1}},
                               "S^1, g=" + std::to_string(g));
  }
  const LaurentPoly elliptic = pow(LaurentPoly{{0, 1}, {1, 1}}, 2) * LaurentPoly{{0, 1}, {2, 1}};
  ledger["macdonald"].record(sym_product_poincare(2, 1) == elliptic, "S^2 of an elliptic curve");
  return ledger.take();
}

std::vector<Rational> sample_parameters(const FramedModel& m) {
  const auto& t = m.type();
  std::vector<Rational> out = critical_parameters(m);
  if (t.rank == 2 && t.degree < 0 && m.context().frame_degree == 0) {
    const ChamberData cd = build_chambers(t.degree, m.context().genus);
    for (const auto& c : cd.chambers) out.push_back(c.representative);
    out.insert(out.end(), cd.walls.begin(), cd.walls.end());
    out.emplace_back(-t.degree);
  } else {
    const std::vector<Rational> critical = out;
    if (critical.empty()) {
      out = {Rational(1, 2), Rational(1), Rational(2)};
    } else {
      out.push_back(critical.front() / Rational(2));
      for (std::size_t k = 0; k + 1 < critical.size(); ++k) out.push_back(midpoint(critical[k], critical[k + 1]));
      out.push_back(critical.back() + Rational(1));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<CheckResult> stability_suite(const StabilitySuiteConfig& config) {
  const std::size_t total = config.rank2_models + config.chain_models + config.unclosed_models;
  const auto partials = parallel_map<std::vector<CheckResult>>(
      total, resolve_threads(config.threads), [&](std::size_t k) { return examine_model(k, config); });
  Ledger ledger;
  for (const auto& p : partials) ledger.merge(p);
  return ledger.take();
}

bool VerifyReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed(); });
}

VerifyReport verify_all(const VerifyConfig& config) {
  VerifyReport report;
  auto append = [&](std::vector<CheckResult> more) {
    for (auto& c : more) report.checks.push_back(std::move(c));
  };
  append(betti_checks(betti_grid(config.grid)));
  append(chamber_checks(config.grid.d_min, config.grid.g_min, config.grid.g_max));
  append(macdonald_checks(config.grid.g_max));
  StabilitySuiteConfig stability = config.stability;
  if (stability.threads == 0) stability.threads = config.grid.threads;
  append(stability_suite(stability));
  return report;
}

}  // namespace flipchain
