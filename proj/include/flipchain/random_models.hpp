#pragma once

#include <cstdint>
#include <random>

#include "flipchain/framed_model.hpp"

namespace flipchain {

struct Rank2Options {
  std::int64_t d_min = -12;
  std::int64_t d_max = -1;
  // phi-invariance is only dropped on subobjects that never reach the slope
  // of E for sigma >= 0, so every sample satisfies constraint closure.
  bool constraint_closed = true;
  double zero_framing_probability = 0.05;
  double kernel_probability = 0.85;
  double split_probability = 0.15;
};

// Rank-2 model of type (2, d, O_X): an optional kernel line K with
// deg K >= d, plus up to four framed lines. Distinct lines L1, L2 satisfy
// deg L1 + deg L2 <= d, as they must inside a rank-2 bundle.
FramedModel random_rank2_model(std::mt19937_64& rng, const Rank2Options& options = {});

// Chain F_1 c F_2 c ... of strictly increasing rank inside a bundle of rank
// 3..5. A prefix of the chain lies in ker psi; its top, when of rank r-1,
// has degree >= d - deg H.
FramedModel random_chain_model(std::mt19937_64& rng);

// Deterministic per-index generator so that parallel runs reproduce the
// sequential stream.
std::mt19937_64 model_rng(std::uint64_t seed, std::uint64_t index);

}  // namespace flipchain
