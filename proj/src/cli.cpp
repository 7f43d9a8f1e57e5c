#include "flipchain/cli.hpp"

#include <ostream>

#include "flipchain/errors.hpp"

namespace flipchain {
namespace {

void require_negative_degree(const RunConfig& c) {
  if (c.d >= 0) throw InvalidInput("--d must be negative, got " + std::to_string(c.d));
  if (c.g < 2) throw InvalidInput("--g must be at least 2, got " + std::to_string(c.g));
}

int report_failures(const std::vector<std::string>& failures, std::ostream& err) {
  for (const auto& f : failures) err << "consistency failure: " << f << '\n';
  return failures.empty() ? kExitOk : kExitInconsistent;
}

int dispatch(const RunConfig& c, std::ostream& out, std::ostream& err) {
  switch (c.command) {
    case Command::Chambers: {
      require_negative_degree(c);
      out << render(build_chambers(c.d, c.g), c.format);
      return kExitOk;
    }
    case Command::Betti: {
      require_negative_degree(c);
      const BettiReport r = build_betti_report(c.d, c.g, c.chamber);
      out << render(r, c.format);
      return report_failures(r.failures(), err);
    }
    case Command::StabilityCheck: {
      if (!c.model_path) throw InvalidInput("stability-check needs --model <path>");
      const FramedModel m = load_framed_model(*c.model_path);
      const StabilityReport r = build_stability_report(m, *c.model_path);
      out << render(r, c.format);
      return report_failures(r.failures(), err);
    }
    case Command::VerifyAll: {
      VerifyConfig v;
      if (c.grid) {
        v.grid.g_max = c.grid->first;
        v.grid.d_min = c.grid->second;
      }
      if (v.grid.g_max < v.grid.g_min) throw InvalidInput("grid genus bound must be at least 2");
      if (v.grid.d_min > -1) throw InvalidInput("grid degree bound must be negative");
      v.grid.threads = c.threads;
      v.stability.seed = c.seed.value_or(7);
      if (c.models) v.stability.rank2_models = *c.models;
      v.stability.threads = c.threads;
      const VerifyReport r = verify_all(v);
      out << render(r, c.format);
      std::vector<std::string> failures;
      for (const auto& check : r.checks) {
        if (check.passed()) continue;
        failures.push_back(check.name + (check.samples.empty() ? "" : " at " + check.samples.front()));
      }
      return report_failures(failures, err);
    }
  }
  throw InvalidInput("unknown command");
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    return dispatch(config, out, err);
  } catch (const InvalidInput& e) {
    err << "invalid input: " << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const Error& e) {
    err << "consistency failure: " << e.what() << '\n';
    return kExitInconsistent;
  }
}

}  // namespace flipchain
