#include "flipchain/report.hpp"

#include <fstream>
#include <sstream>

#include "flipchain/errors.hpp"

namespace flipchain {
namespace {

// Runs a JSON decoder, reporting schema problems as InvalidInput.
template <class F>
auto decode(const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw InvalidInput(std::string("malformed ") + what + " JSON: " + e.what());
  }
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }
std::string bool_str(bool b) { return b ? "true" : "false"; }

template <class T>
Json optional_json(const std::optional<T>& v) {
  if (!v) return nullptr;
  if constexpr (std::is_same_v<T, bool>) {
    return *v;
  } else {
    return to_json(*v);
  }
}

std::optional<bool> optional_bool(const Json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<bool>();
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t k = 0; k < parts.size(); ++k) out += (k ? sep : "") + parts[k];
  return out;
}

std::string interval(const Chamber& c) {
  return "(" + c.lower.to_string() + ", " + c.upper.to_string() + (c.upper_closed ? "]" : ")");
}

// Quote a CSV field when it contains a separator or quote.
std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string latex_escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    if (ch == '_' || ch == '&' || ch == '%' || ch == '#' || ch == '$') out += '\\';
    out += ch;
  }
  return out;
}

std::string latex_rational(const Rational& r) {
  if (r.is_integer()) return "$" + r.to_string() + "$";
  std::string sign = r.sign() < 0 ? "-" : "";
  return "$" + sign + "\\frac{" + abs(r).numerator().str() + "}{" + r.denominator().str() + "}$";
}

std::string type_label(std::int64_t d, int g) {
  return "type (2, " + std::to_string(d) + ", O_X), genus " + std::to_string(g);
}

std::string location_of(const FramedModel& m, const Rational& sigma) {
  const auto& t = m.type();
  if (t.rank == 2 && t.degree < 0 && m.context().frame_degree == 0) {
    const ChamberData cd = build_chambers(t.degree, m.context().genus);
    const auto loc = chamber_of(sigma, cd);
    if (const auto* c = std::get_if<InChamber>(&loc)) {
      return "chamber " + std::to_string(c->position) + " (FM^" + std::to_string(c->fm_index) + ")";
    }
    if (const auto* w = std::get_if<OnWall>(&loc)) return "wall " + std::to_string(w->position);
    return "empty";
  }
  const auto critical = critical_parameters(m);
  return std::find(critical.begin(), critical.end(), sigma) != critical.end() ? "critical" : "generic";
}

Json hn_to_json(const HNFiltration& hn) {
  Json graded = Json::array();
  for (const auto& p : hn.graded) {
    graded.push_back({{"rank", p.rank}, {"degree", p.degree}, {"framing", p.framing}, {"slope", to_json(p.slope)}});
  }
  return {{"steps", hn.steps}, {"graded", graded}};
}

HNFiltration hn_from_json(const Json& j) {
  HNFiltration hn;
  hn.steps = j.at("steps").get<std::vector<std::string>>();
  for (const auto& p : j.at("graded")) {
    hn.graded.push_back({p.at("rank").get<std::int64_t>(), p.at("degree").get<std::int64_t>(),
                         p.at("framing").get<bool>(), rational_from_json(p.at("slope"))});
  }
  return hn;
}

Json oriented_to_json(const OrientedVerdicts& o) {
  Json sm = nullptr;
  if (o.sigma_max) sm = {{"kmax", o.sigma_max->kmax_id}, {"sigma", to_json(o.sigma_max->sigma)}};
  return {{"semistable", o.semistable}, {"stable", o.stable}, {"sigma_max", sm}};
}

OrientedVerdicts oriented_from_json(const Json& j) {
  OrientedVerdicts o;
  o.semistable = j.at("semistable").get<bool>();
  o.stable = j.at("stable").get<bool>();
  if (!j.at("sigma_max").is_null()) {
    o.sigma_max = CanonicalParameter{j.at("sigma_max").at("kmax").get<std::string>(),
                                     rational_from_json(j.at("sigma_max").at("sigma"))};
  }
  return o;
}

std::vector<std::string> betti_strings(const LaurentPoly& p) {
  std::vector<std::string> out;
  for (const auto& c : p.dense_coefficients()) out.push_back(c.str());
  return out;
}

std::string hn_summary(const HNFiltration& hn) {
  std::vector<std::string> slopes;
  for (const auto& p : hn.graded) slopes.push_back(p.slope.to_string());
  return "[" + join(hn.steps, " c ") + "] slopes " + join(slopes, " > ");
}

std::string equivalence_summary(const SigmaVerdicts& v) {
  if (v.equivalences) return v.equivalences->all_hold() ? "hold" : "FAIL";
  return v.equivalence_note ? "skipped" : "n/a";
}

}  // namespace

// ---- stability report --------------------------------------------------------

std::vector<std::string> StabilityReport::failures() const {
  std::vector<std::string> out;
  for (const auto& v : samples) {
    for (std::size_t k = 1; k < v.hn.graded.size(); ++k) {
      if (!(v.hn.graded[k].slope < v.hn.graded[k - 1].slope)) {
        out.push_back("HN gradedness at sigma=" + v.sigma.to_string() + " for model " + model_id);
        break;
      }
    }
    if (v.equivalences) {
      for (const auto& c : v.equivalences->checks) {
        if (!c.holds()) {
          out.push_back(c.name + " equivalence at sigma=" + v.sigma.to_string() + " for model " + model_id +
                        (c.witness ? " (witness '" + *c.witness + "')" : ""));
        }
      }
    }
  }
  return out;
}

StabilityReport build_stability_report(const FramedModel& m, std::string model_id) {
  StabilityReport r;
  r.model_id = std::move(model_id);
  if (m.type().framing_nonzero) {
    r.sigma_bound = sigma_upper_bound(m);
    r.final_chamber_stable = final_chamber_stable(m);
  }
  r.oriented_fm = {is_oriented_semistable(m, false), is_oriented_stable(m, false), sigma_max(m, false)};
  r.oriented_pair = {is_oriented_semistable(m, true), is_oriented_stable(m, true), sigma_max(m, true)};
  for (const auto& sigma : sample_parameters(m)) {
    SigmaVerdicts v;
    v.sigma = sigma;
    v.location = location_of(m, sigma);
    v.fm_semistable = is_fm_semistable(m, sigma);
    v.fm_stable = is_fm_stable(m, sigma);
    v.pair_semistable = is_pair_semistable(m, sigma);
    v.pair_stable = is_pair_stable(m, sigma);
    if (auto md = max_destabilizer(m, sigma)) v.max_destabilizer = md->id;
    v.hn = hn_filtration(m, sigma);
    if (m.type().rank == 2) {
      try {
        v.equivalences = verify_rank2_equivalences(m, sigma);
      } catch (const AxiomViolated& e) {
        v.equivalence_note = e.what();
      }
    } else {
      v.equivalence_note = "rank-2 equivalences do not apply to rank " + std::to_string(m.type().rank);
    }
    r.samples.push_back(std::move(v));
  }
  return r;
}

// ---- JSON encoders ------------------------------------------------------------

Json to_json(const Rational& r) { return r.to_string(); }

Json to_json(const LaurentPoly& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back(Json::array({e, c.str()}));
  return {{"terms", terms}};
}

Json to_json(const FramedModel& m) {
  const auto& t = m.type();
  Json subs = Json::array();
  for (const auto& s : m.subs()) {
    subs.push_back({{"id", s.id},
                    {"rank", s.rank},
                    {"degree", s.degree},
                    {"fr", s.fr},
                    {"phi_invariant", s.phi_invariant},
                    {"parents", s.parents}});
  }
  Json j = {{"genus", m.context().genus},
            {"frame_degree", m.context().frame_degree},
            {"type",
             {{"rank", t.rank},
              {"degree", t.degree},
              {"framing_nonzero", t.framing_nonzero},
              {"epsilon_nonzero", t.epsilon_nonzero},
              {"delta_iso", t.delta_iso}}},
            {"subs", subs}};
  if (const auto& sp = m.split()) {
    j["split"] = {{"kmax", sp->kmax},
                  {"kmax_stable", sp->kmax_stable},
                  {"complement", {{"rank", sp->complement_rank}, {"degree", sp->complement_degree}}},
                  {"complement_stable", sp->complement_stable}};
  }
  return j;
}

Json to_json(const ChamberData& cd) {
  Json walls = Json::array();
  for (const auto& w : cd.walls) walls.push_back(to_json(w));
  Json chambers = Json::array();
  for (const auto& c : cd.chambers) {
    chambers.push_back({{"position", c.position},
                        {"fm_index", c.fm_index},
                        {"lower", to_json(c.lower)},
                        {"upper", to_json(c.upper)},
                        {"upper_closed", c.upper_closed},
                        {"representative", to_json(c.representative)}});
  }
  Json flips = Json::array();
  for (const auto& f : cd.flips) {
    flips.push_back({{"i", f.i},
                     {"rank_minus", f.rank_minus},
                     {"rank_plus", f.rank_plus},
                     {"base_dim", f.base_dim},
                     {"dim_p_minus", f.dim_p_minus},
                     {"dim_p_plus", f.dim_p_plus},
                     {"codim_minus", f.codim_minus},
                     {"codim_plus", f.codim_plus}});
  }
  return {{"d", cd.d},
          {"g", cd.g},
          {"moduli_dim", moduli_dim(cd.d, cd.g)},
          {"index_range", {cd.index_min, cd.index_max}},
          {"walls", walls},
          {"chambers", chambers},
          {"flips", flips},
          {"empty_above", to_json(Rational(-cd.d))}};
}

Json to_json(const BettiReport& r) {
  Json chambers = Json::array();
  for (const auto& c : r.chambers) {
    chambers.push_back({{"i", c.i},
                        {"P_recursive", to_json(c.recursive)},
                        {"P_closed", to_json(c.closed)},
                        {"agree", c.agree},
                        {"degree", c.degree},
                        {"palindromic", c.palindromic},
                        {"nonneg", c.nonneg},
                        {"constant_one", c.constant_one},
                        {"betti", betti_strings(c.recursive)}});
  }
  Json u2d = nullptr;
  if (r.u2d) {
    u2d = {{"closed", to_json(r.u2d->closed)},
           {"via_bundle", optional_json(r.u2d->via_bundle)},
           {"agree", optional_json(r.u2d->agree)}};
  }
  return {{"d", r.d},
          {"g", r.g},
          {"moduli_dim", r.moduli_dim},
          {"chambers", chambers},
          {"u2d", u2d},
          {"mcon", optional_json(r.mcon)},
          {"mcon_agree", optional_json(r.mcon_agree)},
          {"terminal", to_json(r.terminal)},
          {"blowup_check", optional_json(r.blowup_check)},
          {"consistent", r.consistent()}};
}

Json to_json(const StabilityReport& r) {
  Json samples = Json::array();
  for (const auto& v : r.samples) {
    Json eq = nullptr;
    if (v.equivalences) {
      Json checks = Json::array();
      for (const auto& c : v.equivalences->checks) {
        checks.push_back({{"name", c.name},
                          {"framed_module", c.framed_module},
                          {"hitchin_pair", c.hitchin_pair},
                          {"holds", c.holds()},
                          {"witness", c.witness ? Json(*c.witness) : Json(nullptr)}});
      }
      eq = {{"sigma", to_json(v.equivalences->sigma)}, {"checks", checks}};
    }
    samples.push_back({{"sigma", to_json(v.sigma)},
                       {"location", v.location},
                       {"fm_semistable", v.fm_semistable},
                       {"fm_stable", v.fm_stable},
                       {"pair_semistable", v.pair_semistable},
                       {"pair_stable", v.pair_stable},
                       {"max_destabilizer", v.max_destabilizer ? Json(*v.max_destabilizer) : Json(nullptr)},
                       {"hn", hn_to_json(v.hn)},
                       {"equivalences", eq},
                       {"equivalence_note", v.equivalence_note ? Json(*v.equivalence_note) : Json(nullptr)}});
  }
  return {{"model", r.model_id},
          {"sigma_bound", optional_json(r.sigma_bound)},
          {"final_chamber_stable", optional_json(r.final_chamber_stable)},
          {"oriented_framed_module", oriented_to_json(r.oriented_fm)},
          {"oriented_hitchin_pair", oriented_to_json(r.oriented_pair)},
          {"samples", samples},
          {"consistent", r.failures().empty()}};
}

Json to_json(const VerifyReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    checks.push_back(
        {{"name", c.name}, {"cases", c.cases}, {"failed", c.failed}, {"passed", c.passed()}, {"samples", c.samples}});
  }
  return {{"checks", checks}, {"all_passed", r.all_passed()}};
}

// ---- JSON decoders ------------------------------------------------------------

Rational rational_from_json(const Json& j) {
  return decode("rational", [&] { return Rational::parse(j.get<std::string>()); });
}

LaurentPoly laurent_from_json(const Json& j) {
  return decode("polynomial", [&] {
    std::vector<LaurentPoly::Term> terms;
    for (const auto& t : j.at("terms")) {
      terms.emplace_back(t.at(0).get<std::int64_t>(), BigInt(t.at(1).get<std::string>()));
    }
    return LaurentPoly(std::move(terms));
  });
}

FramedModel framed_model_from_json(const Json& j) {
  return decode("model", [&] {
    CurveContext ctx{j.at("genus").get<int>(), j.value("frame_degree", std::int64_t{0})};
    const auto& jt = j.at("type");
    FramedType type{jt.at("rank").get<int>(), jt.at("degree").get<std::int64_t>(), jt.at("framing_nonzero").get<bool>(),
                    jt.value("epsilon_nonzero", false), jt.value("delta_iso", false)};
    std::vector<SubobjectData> subs;
    for (const auto& s : j.at("subs")) {
      subs.push_back({s.at("id").get<std::string>(), s.at("rank").get<int>(), s.at("degree").get<std::int64_t>(),
                      s.at("fr").get<bool>(), s.at("phi_invariant").get<bool>(),
                      s.value("parents", std::vector<std::string>{})});
    }
    std::optional<SplitDescriptor> split;
    if (j.contains("split") && !j.at("split").is_null()) {
      const auto& js = j.at("split");
      split = SplitDescriptor{js.at("kmax").get<std::string>(), js.at("kmax_stable").get<bool>(),
                              js.at("complement").at("rank").get<int>(),
                              js.at("complement").at("degree").get<std::int64_t>(),
                              js.at("complement_stable").get<bool>()};
    }
    return FramedModel(ctx, type, std::move(subs), split);
  });
}

ChamberData chamber_data_from_json(const Json& j) {
  return decode("chamber data", [&] {
    ChamberData cd;
    cd.d = j.at("d").get<std::int64_t>();
    cd.g = j.at("g").get<int>();
    cd.index_min = j.at("index_range").at(0).get<std::int64_t>();
    cd.index_max = j.at("index_range").at(1).get<std::int64_t>();
    for (const auto& w : j.at("walls")) cd.walls.push_back(rational_from_json(w));
    for (const auto& c : j.at("chambers")) {
      cd.chambers.push_back({c.at("position").get<int>(), c.at("fm_index").get<std::int64_t>(),
                             rational_from_json(c.at("lower")), rational_from_json(c.at("upper")),
                             c.at("upper_closed").get<bool>(), rational_from_json(c.at("representative"))});
    }
    for (const auto& f : j.at("flips")) {
      cd.flips.push_back({f.at("i").get<std::int64_t>(), f.at("rank_minus").get<std::int64_t>(),
                          f.at("rank_plus").get<std::int64_t>(), f.at("base_dim").get<std::int64_t>(),
                          f.at("dim_p_minus").get<std::int64_t>(), f.at("dim_p_plus").get<std::int64_t>(),
                          f.at("codim_minus").get<std::int64_t>(), f.at("codim_plus").get<std::int64_t>()});
    }
    return cd;
  });
}

BettiReport betti_report_from_json(const Json& j) {
  return decode("Betti report", [&] {
    BettiReport r;
    r.d = j.at("d").get<std::int64_t>();
    r.g = j.at("g").get<int>();
    r.moduli_dim = j.at("moduli_dim").get<std::int64_t>();
    for (const auto& c : j.at("chambers")) {
      ChamberBetti e;
      e.i = c.at("i").get<std::int64_t>();
      e.recursive = laurent_from_json(c.at("P_recursive"));
      e.closed = laurent_from_json(c.at("P_closed"));
      e.agree = c.at("agree").get<bool>();
      e.degree = c.at("degree").get<std::int64_t>();
      e.palindromic = c.at("palindromic").get<bool>();
      e.nonneg = c.at("nonneg").get<bool>();
      e.constant_one = c.at("constant_one").get<bool>();
      r.chambers.push_back(std::move(e));
    }
    if (!j.at("u2d").is_null()) {
      const auto& u = j.at("u2d");
      U2dEntry entry;
      entry.closed = laurent_from_json(u.at("closed"));
      if (!u.at("via_bundle").is_null()) entry.via_bundle = laurent_from_json(u.at("via_bundle"));
      entry.agree = optional_bool(u, "agree");
      r.u2d = std::move(entry);
    }
    if (!j.at("mcon").is_null()) r.mcon = laurent_from_json(j.at("mcon"));
    r.mcon_agree = optional_bool(j, "mcon_agree");
    r.terminal = laurent_from_json(j.at("terminal"));
    r.blowup_check = optional_bool(j, "blowup_check");
    return r;
  });
}

StabilityReport stability_report_from_json(const Json& j) {
  return decode("stability report", [&] {
    StabilityReport r;
    r.model_id = j.at("model").get<std::string>();
    if (!j.at("sigma_bound").is_null()) r.sigma_bound = rational_from_json(j.at("sigma_bound"));
    r.final_chamber_stable = optional_bool(j, "final_chamber_stable");
    r.oriented_fm = oriented_from_json(j.at("oriented_framed_module"));
    r.oriented_pair = oriented_from_json(j.at("oriented_hitchin_pair"));
    for (const auto& s : j.at("samples")) {
      SigmaVerdicts v;
      v.sigma = rational_from_json(s.at("sigma"));
      v.location = s.at("location").get<std::string>();
      v.fm_semistable = s.at("fm_semistable").get<bool>();
      v.fm_stable = s.at("fm_stable").get<bool>();
      v.pair_semistable = s.at("pair_semistable").get<bool>();
      v.pair_stable = s.at("pair_stable").get<bool>();
      if (!s.at("max_destabilizer").is_null()) v.max_destabilizer = s.at("max_destabilizer").get<std::string>();
      v.hn = hn_from_json(s.at("hn"));
      if (!s.at("equivalences").is_null()) {
        EquivalenceReport eq;
        eq.sigma = rational_from_json(s.at("equivalences").at("sigma"));
        for (const auto& c : s.at("equivalences").at("checks")) {
          EquivalenceCheck check{c.at("name").get<std::string>(), c.at("framed_module").get<bool>(),
                                 c.at("hitchin_pair").get<bool>(), std::nullopt};
          if (!c.at("witness").is_null()) check.witness = c.at("witness").get<std::string>();
          eq.checks.push_back(std::move(check));
        }
        v.equivalences = std::move(eq);
      }
      if (!s.at("equivalence_note").is_null()) v.equivalence_note = s.at("equivalence_note").get<std::string>();
      r.samples.push_back(std::move(v));
    }
    return r;
  });
}

VerifyReport verify_report_from_json(const Json& j) {
  return decode("verify report", [&] {
    VerifyReport r;
    for (const auto& c : j.at("checks")) {
      r.checks.push_back({c.at("name").get<std::string>(), c.at("cases").get<std::uint64_t>(),
                          c.at("failed").get<std::uint64_t>(), c.at("samples").get<std::vector<std::string>>()});
    }
    return r;
  });
}

FramedModel load_framed_model(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open model file '" + path + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::exception& e) {
    throw InvalidInput("model file '" + path + "' is not valid JSON: " + e.what());
  }
  return framed_model_from_json(j);
}

// ---- ChamberData ----------------------------------------------------------------

std::string render(const ChamberData& cd, Format format) {
  std::ostringstream out;
  switch (format) {
    case Format::Json:
      out << to_json(cd).dump(2) << '\n';
      break;
    case Format::Csv:
      out << "d,g,position,fm_index,lower,upper,upper_closed,representative,"
             "flip_i,rank_minus,rank_plus,dim_p_minus,dim_p_plus,codim_minus,codim_plus\n";
      for (std::size_t k = 0; k < cd.chambers.size(); ++k) {
        const auto& c = cd.chambers[k];
        out << cd.d << ',' << cd.g << ',' << c.position << ',' << c.fm_index << ',' << c.lower.to_string() << ','
            << c.upper.to_string() << ',' << bool_str(c.upper_closed) << ',' << c.representative.to_string();
        if (k < cd.flips.size()) {
          const auto& f = cd.flips[k];
          out << ',' << f.i << ',' << f.rank_minus << ',' << f.rank_plus << ',' << f.dim_p_minus << ','
              << f.dim_p_plus << ',' << f.codim_minus << ',' << f.codim_plus;
        } else {
          out << ",,,,,,,";
        }
        out << '\n';
      }
      break;
    case Format::Latex:
      out << "% chambers of " << type_label(cd.d, cd.g) << "\n";
      out << "\\begin{tabular}{rrll}\n\\hline\n";
      out << "position & $i$ & interval & representative \\\\\n\\hline\n";
      for (const auto& c : cd.chambers) {
        out << c.position << " & " << c.fm_index << " & $" << interval(c) << "$ & "
            << latex_rational(c.representative) << " \\\\\n";
      }
      out << "\\hline\n\\end{tabular}\n\n";
      out << "\\begin{tabular}{rrrrrrr}\n\\hline\n";
      out << "$i$ & $\\mathrm{rk}\\,W^-$ & $\\mathrm{rk}\\,W^+$ & $\\dim\\mathbb{P}W^-$ & $\\dim\\mathbb{P}W^+$ & "
             "$\\mathrm{codim}^-$ & $\\mathrm{codim}^+$ \\\\\n\\hline\n";
      for (const auto& f : cd.flips) {
        out << f.i << " & " << f.rank_minus << " & " << f.rank_plus << " & " << f.dim_p_minus << " & "
            << f.dim_p_plus << " & " << f.codim_minus << " & " << f.codim_plus << " \\\\\n";
      }
      out << "\\hline\n\\end{tabular}\n";
      break;
    case Format::Text: {
      out << type_label(cd.d, cd.g) << ", moduli dimension " << moduli_dim(cd.d, cd.g) << '\n';
      std::vector<std::string> walls;
      for (const auto& w : cd.walls) walls.push_back(w.to_string());
      out << "walls: " << (walls.empty() ? "none" : join(walls, ", ")) << '\n';
      out << "chambers:\n";
      for (const auto& c : cd.chambers) {
        out << "  " << c.position << "  " << interval(c) << "  FM^" << c.fm_index << "  representative "
            << c.representative.to_string() << '\n';
      }
      out << "flip loci:\n";
      if (cd.flips.empty()) out << "  none\n";
      for (std::size_t k = 0; k < cd.flips.size(); ++k) {
        const auto& f = cd.flips[k];
        out << "  wall " << cd.walls[k].to_string() << ": i=" << f.i << "  rank W-=" << f.rank_minus
            << "  rank W+=" << f.rank_plus << "  dim PW-=" << f.dim_p_minus << "  dim PW+=" << f.dim_p_plus
            << "  codim-=" << f.codim_minus << "  codim+=" << f.codim_plus << '\n';
      }
      out << "sigma > " << -cd.d << ": empty\n";
      break;
    }
  }
  return out.str();
}

// ---- BettiReport ------------------------------------------------------------------

std::string render(const BettiReport& r, Format format) {
  std::ostringstream out;
  const std::int64_t top = 2 * r.moduli_dim;
  switch (format) {
    case Format::Json:
      out << to_json(r).dump(2) << '\n';
      break;
    case Format::Csv:
      out << "d,g,i,agree,palindromic,nonneg,degree";
      for (std::int64_t k = 0; k <= top; ++k) out << ",b" << k;
      out << '\n';
      for (const auto& c : r.chambers) {
        out << r.d << ',' << r.g << ',' << c.i << ',' << bool_str(c.agree) << ',' << bool_str(c.palindromic) << ','
            << bool_str(c.nonneg) << ',' << c.degree;
        for (std::int64_t k = 0; k <= top; ++k) out << ',' << c.recursive.coeff(k).str();
        out << '\n';
      }
      break;
    case Format::Latex:
      out << "% Betti numbers of FM^i for " << type_label(r.d, r.g) << "\n";
      out << "\\begin{tabular}{rr|" << std::string(static_cast<std::size_t>(top + 1), 'r') << "}\n\\hline\n";
      out << "$i$ & degree";
      for (std::int64_t k = 0; k <= top; ++k) out << " & $b_{" << k << "}$";
      out << " \\\\\n\\hline\n";
      for (const auto& c : r.chambers) {
        out << c.i << " & " << c.degree;
        for (std::int64_t k = 0; k <= top; ++k) out << " & " << c.recursive.coeff(k).str();
        out << " \\\\\n";
      }
      out << "\\hline\n\\end{tabular}\n";
      break;
    case Format::Text:
      out << type_label(r.d, r.g) << ", dimension " << r.moduli_dim << '\n';
      for (const auto& c : r.chambers) {
        out << "FM^" << c.i << ": P_t = " << c.recursive.to_string() << '\n';
        out << "  betti " << join(betti_strings(c.recursive), " ") << '\n';
        out << "  routes agree " << yes_no(c.agree) << ", palindromic " << yes_no(c.palindromic)
            << ", nonnegative " << yes_no(c.nonneg) << ", degree " << c.degree << '\n';
      }
      out << "terminal P_t(FM^" << -r.d - 1 << ") = " << r.terminal.to_string() << '\n';
      if (r.u2d) {
        out << "U(2,d): " << r.u2d->closed.to_string() << '\n';
        if (r.u2d->via_bundle) {
          out << "  via bundle " << yes_no(*r.u2d->agree) << ": " << r.u2d->via_bundle->to_string() << '\n';
        } else {
          out << "  via bundle: not applicable (needs -d > 4g-4)\n";
        }
        out << "M_con: " << r.mcon->to_string() << "  (= U(2,d)(1+t^2): " << yes_no(*r.mcon_agree) << ")\n";
      } else {
        out << "U(2,d), M_con: odd degree only\n";
      }
      if (r.blowup_check) {
        out << "blow-up consistency: " << yes_no(*r.blowup_check) << '\n';
      } else {
        out << "blow-up consistency: not applicable (needs d <= -3)\n";
      }
      out << "status: " << (r.consistent() ? "consistent" : "INCONSISTENT: " + join(r.failures(), "; ")) << '\n';
      break;
  }
  return out.str();
}

// ---- StabilityReport --------------------------------------------------------------

std::string render(const StabilityReport& r, Format format) {
  std::ostringstream out;
  switch (format) {
    case Format::Json:
      out << to_json(r).dump(2) << '\n';
      break;
    case Format::Csv:
      out << "sigma,location,fm_semistable,fm_stable,pair_semistable,pair_stable,max_destabilizer,hn_steps,"
             "equivalences\n";
      for (const auto& v : r.samples) {
        out << v.sigma.to_string() << ',' << csv_field(v.location) << ',' << bool_str(v.fm_semistable) << ','
            << bool_str(v.fm_stable) << ',' << bool_str(v.pair_semistable) << ',' << bool_str(v.pair_stable) << ','
            << csv_field(v.max_destabilizer.value_or("")) << ',' << csv_field(join(v.hn.steps, ";")) << ','
            << equivalence_summary(v) << '\n';
      }
      break;
    case Format::Latex:
      out << "% stability verdicts for model " << latex_escape(r.model_id) << "\n";
      out << "\\begin{tabular}{llccccl}\n\\hline\n";
      out << "$\\sigma$ & location & fm ss & fm s & pair ss & pair s & HN steps \\\\\n\\hline\n";
      for (const auto& v : r.samples) {
        out << latex_rational(v.sigma) << " & " << latex_escape(v.location) << " & " << yes_no(v.fm_semistable)
            << " & " << yes_no(v.fm_stable) << " & " << yes_no(v.pair_semistable) << " & " << yes_no(v.pair_stable)
            << " & " << latex_escape(join(v.hn.steps, ", ")) << " \\\\\n";
      }
      out << "\\hline\n\\end{tabular}\n";
      break;
    case Format::Text: {
      out << "model " << r.model_id << '\n';
      if (r.sigma_bound) out << "sigma bound: " << r.sigma_bound->to_string() << '\n';
      if (r.final_chamber_stable) out << "stable in the final chamber: " << yes_no(*r.final_chamber_stable) << '\n';
      auto oriented = [&](const char* name, const OrientedVerdicts& o) {
        out << name << ": semistable " << yes_no(o.semistable) << ", stable " << yes_no(o.stable);
        if (o.sigma_max) {
          out << ", sigma_max " << o.sigma_max->sigma.to_string() << " (K_max "
              << (o.sigma_max->kmax_id.empty() ? "E" : o.sigma_max->kmax_id) << ")";
        }
        out << '\n';
      };
      oriented("oriented framed module", r.oriented_fm);
      oriented("oriented Hitchin pair", r.oriented_pair);
      for (const auto& v : r.samples) {
        out << "sigma=" << v.sigma.to_string() << " [" << v.location << "]  fm " << (v.fm_stable ? "stable" : v.fm_semistable ? "semistable" : "unstable")
            << ", pair " << (v.pair_stable ? "stable" : v.pair_semistable ? "semistable" : "unstable") << '\n';
        out << "  max destabilizer: " << v.max_destabilizer.value_or("none") << "; HN " << hn_summary(v.hn) << '\n';
        out << "  equivalences: " << equivalence_summary(v);
        if (v.equivalence_note) out << " (" << *v.equivalence_note << ")";
        out << '\n';
      }
      const auto failures = r.failures();
      out << "status: " << (failures.empty() ? "consistent" : "INCONSISTENT: " + join(failures, "; ")) << '\n';
      break;
    }
  }
  return out.str();
}

// ---- VerifyReport -----------------------------------------------------------------

std::string render(const VerifyReport& r, Format format) {
  std::ostringstream out;
  switch (format) {
    case Format::Json:
      out << to_json(r).dump(2) << '\n';
      break;
    case Format::Csv:
      out << "check,cases,failed,passed\n";
      for (const auto& c : r.checks) {
        out << c.name << ',' << c.cases << ',' << c.failed << ',' << bool_str(c.passed()) << '\n';
      }
      break;
    case Format::Latex:
      out << "\\begin{tabular}{lrrl}\n\\hline\n";
      out << "check & cases & failed & verdict \\\\\n\\hline\n";
      for (const auto& c : r.checks) {
        out << latex_escape(c.name) << " & " << c.cases << " & " << c.failed << " & "
            << (c.passed() ? "pass" : "FAIL") << " \\\\\n";
      }
      out << "\\hline\n\\end{tabular}\n";
      break;
    case Format::Text:
      for (const auto& c : r.checks) {
        out << (c.passed() ? "ok    " : "FAIL  ") << c.name << "  (" << c.cases << " cases";
        if (c.failed) out << ", " << c.failed << " failed";
        out << ")\n";
        for (const auto& s : c.samples) out << "        " << s << '\n';
      }
      out << (r.all_passed() ? "all checks passed" : "consistency failure") << '\n';
      break;
  }
  return out.str();
}

}  // namespace flipchain
