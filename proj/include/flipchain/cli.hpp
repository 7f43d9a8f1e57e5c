#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>

#include "flipchain/report.hpp"

namespace flipchain {

enum class Command { Chambers, Betti, StabilityCheck, VerifyAll };

struct RunConfig {
  Command command = Command::Chambers;
  std::int64_t d = -5;
  int g = 2;
  Format format = Format::Text;
  std::optional<std::string> model_path;         // stability-check
  std::optional<std::int64_t> chamber;           // betti: a single FM^i
  std::optional<std::uint64_t> seed;             // verify-all, default 7
  std::optional<std::pair<int, std::int64_t>> grid;  // verify-all (g_max, d_min), default (5, -15)
  std::optional<std::size_t> models;             // verify-all: rank-2 model count
  unsigned threads = 0;                          // 0: FLIPCHAIN_THREADS or hardware
};

// Exit codes of run().
inline constexpr int kExitOk = 0;
inline constexpr int kExitInconsistent = 1;
inline constexpr int kExitInvalidInput = 2;

// Executes one command, writing the report to `out` and diagnostics to
// `err`. Never throws for library errors; they map to exit codes.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace flipchain
