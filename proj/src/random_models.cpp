#include "flipchain/random_models.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

namespace flipchain {
namespace {

std::int64_t uniform(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

bool coin(std::mt19937_64& rng, double p) { return std::bernoulli_distribution(p)(rng); }

std::int64_t ceil_half(std::int64_t n) { return n >= 0 ? (n + 1) / 2 : -((-n) / 2); }

}  // namespace

std::mt19937_64 model_rng(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return std::mt19937_64(seq);
}

FramedModel random_rank2_model(std::mt19937_64& rng, const Rank2Options& options) {
  CurveContext ctx{static_cast<int>(uniform(rng, 2, 5)), 0};
  FramedType type;
  type.rank = 2;
  type.degree = uniform(rng, options.d_min, options.d_max);
  type.framing_nonzero = !coin(rng, options.zero_framing_probability);
  type.epsilon_nonzero = coin(rng, 0.5);
  type.delta_iso = coin(rng, 0.6);
  const std::int64_t d = type.degree;

  std::vector<SubobjectData> subs;
  std::vector<std::int64_t> line_degrees;
  auto fits = [&](std::int64_t k) {
    for (auto other : line_degrees) {
      if (k + other > d) return false;
    }
    return true;
  };
  // A line that never reaches the slope of E for sigma >= 0.
  auto never_reaches = [&](std::int64_t k, bool fr) { return fr ? 2 * k < d : false; };

  std::optional<SplitDescriptor> split;
  if (!type.framing_nonzero) {
    // ker psi = E: every line lies in the kernel, so each must be
    // phi-invariant under constraint closure.
    const auto count = uniform(rng, 0, 3);
    for (std::int64_t n = 0; n < count; ++n) {
      const std::int64_t k = uniform(rng, d - 3, ceil_half(d) + 2);
      if (!fits(k)) continue;
      subs.push_back({"K" + std::to_string(n), 1, k, false, options.constraint_closed || coin(rng, 0.7), {}});
      line_degrees.push_back(k);
    }
    return FramedModel(ctx, type, std::move(subs));
  }

  if (coin(rng, options.kernel_probability)) {
    const std::int64_t k = uniform(rng, d, ceil_half(d) + 3);
    subs.push_back({"K", 1, k, false, options.constraint_closed || coin(rng, 0.85), {}});
    line_degrees.push_back(k);
    if (coin(rng, options.split_probability)) {
      // E = K + E' with E' a framed line of degree d - k.
      subs.push_back({"Eprime", 1, d - k, true, true, {}});
      line_degrees.push_back(d - k);
      split = SplitDescriptor{"K", coin(rng, 0.8), 1, d - k, coin(rng, 0.8)};
    }
  }
  const auto extra = uniform(rng, 0, 4);
  for (std::int64_t n = 0; n < extra; ++n) {
    const std::int64_t l = uniform(rng, d - 2, ceil_half(d) + 3);
    if (!fits(l)) continue;
    bool phi = coin(rng, 0.7);
    if (options.constraint_closed && !never_reaches(l, true)) phi = true;
    subs.push_back({"L" + std::to_string(n), 1, l, true, phi, {}});
    line_degrees.push_back(l);
  }
  return FramedModel(ctx, type, std::move(subs), split);
}

FramedModel random_chain_model(std::mt19937_64& rng) {
  CurveContext ctx{static_cast<int>(uniform(rng, 2, 4)), uniform(rng, -2, 2)};
  FramedType type;
  type.rank = static_cast<int>(uniform(rng, 3, 5));
  type.degree = uniform(rng, -15, 6);
  type.framing_nonzero = coin(rng, 0.9);
  type.epsilon_nonzero = coin(rng, 0.5);
  type.delta_iso = coin(rng, 0.5);
  const int r = type.rank;
  const std::int64_t d = type.degree;

  // Random strictly increasing ranks in [1, r-1].
  std::vector<int> ranks;
  for (int k = 1; k < r; ++k) {
    if (coin(rng, 0.6)) ranks.push_back(k);
  }
  if (ranks.empty()) ranks.push_back(static_cast<int>(uniform(rng, 1, r - 1)));
  // Members [0, kernel_count) lie in ker psi.
  auto kernel_count = type.framing_nonzero ? uniform(rng, 0, static_cast<std::int64_t>(ranks.size()))
                                            : static_cast<std::int64_t>(ranks.size());
  if (type.framing_nonzero && kernel_count > 0 && coin(rng, 0.5)) {
    // Model the whole of ker psi, which has rank r-1 since H is a line bundle.
    ranks.resize(static_cast<std::size_t>(kernel_count));
    if (ranks.back() != r - 1) ranks.push_back(r - 1);
    kernel_count = static_cast<std::int64_t>(ranks.size());
  }

  std::vector<SubobjectData> subs;
  const std::int64_t typical = d / r;
  for (std::size_t n = 0; n < ranks.size(); ++n) {
    SubobjectData s;
    s.id = "F" + std::to_string(n + 1);
    s.rank = ranks[n];
    s.fr = type.framing_nonzero && static_cast<std::int64_t>(n) >= kernel_count;
    s.degree = typical * s.rank + uniform(rng, -4, 4);
    if (!s.fr && s.rank == r - 1 && type.framing_nonzero) {
      // E / ker psi embeds in H.
      s.degree = std::max(s.degree, d - ctx.frame_degree);
    }
    s.phi_invariant = coin(rng, 0.7);
    if (n + 1 < ranks.size()) s.parents.push_back("F" + std::to_string(n + 2));
    subs.push_back(std::move(s));
  }
  return FramedModel(ctx, type, std::move(subs));
}

}  // namespace flipchain
