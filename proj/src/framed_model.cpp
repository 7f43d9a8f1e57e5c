#include "flipchain/framed_model.hpp"

#include <unordered_map>

#include "flipchain/errors.hpp"

namespace flipchain {

FramedModel::FramedModel(CurveContext ctx, FramedType type, std::vector<SubobjectData> subs,
                         std::optional<SplitDescriptor> split)
    : ctx_(ctx), type_(type), subs_(std::move(subs)), split_(std::move(split)) {
  validate_and_close();
}

std::optional<std::size_t> FramedModel::index_of(std::string_view id) const {
  for (std::size_t i = 0; i < subs_.size(); ++i) {
    if (subs_[i].id == id) return i;
  }
  return std::nullopt;
}

std::optional<std::size_t> FramedModel::kernel_index() const {
  std::optional<std::size_t> best;
  for (std::size_t i = 0; i < subs_.size(); ++i) {
    if (subs_[i].fr) continue;
    if (!best || subs_[i].rank > subs_[*best].rank) best = i;
  }
  return best;
}

void FramedModel::validate_and_close() {
  if (ctx_.genus < 2) throw InvalidInput("genus must be at least 2, got " + std::to_string(ctx_.genus));
  if (type_.rank < 1) throw InvalidInput("rank must be positive, got " + std::to_string(type_.rank));

  const std::size_t n = subs_.size();
  std::unordered_map<std::string, std::size_t> by_id;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& s = subs_[i];
    if (s.id.empty()) throw InvalidInput("subobject with empty id");
    if (!by_id.emplace(s.id, i).second) throw InvalidInput("duplicate subobject id '" + s.id + "'");
    if (s.rank <= 0 || s.rank >= type_.rank) {
      throw InvalidInput("subobject '" + s.id + "' has rank " + std::to_string(s.rank) +
                         "; proper subobjects need 0 < rank < " + std::to_string(type_.rank));
    }
    if (s.fr && !type_.framing_nonzero) {
      throw InvalidInput("subobject '" + s.id + "' has nonzero framing but the ambient framing is zero");
    }
  }

  // Direct edges, then transitive closure (Floyd-Warshall on booleans).
  containment_.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& parent : subs_[i].parents) {
      auto it = by_id.find(parent);
      if (it == by_id.end()) {
        throw InvalidInput("subobject '" + subs_[i].id + "' names unknown parent '" + parent + "'");
      }
      if (it->second == i) throw InvalidInput("subobject '" + subs_[i].id + "' lists itself as a parent");
      containment_[it->second * n + i] = 1;
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!containment_[i * n + k]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (containment_[k * n + j]) containment_[i * n + j] = 1;
      }
    }
  }

  for (std::size_t outer = 0; outer < n; ++outer) {
    if (containment_[outer * n + outer]) {
      throw InvalidInput("containment cycle through subobject '" + subs_[outer].id + "'");
    }
    for (std::size_t inner = 0; inner < n; ++inner) {
      if (!containment_[outer * n + inner]) continue;
      const auto& big = subs_[outer];
      const auto& small = subs_[inner];
      if (small.rank > big.rank) {
        throw InvalidInput("subobject '" + small.id + "' has larger rank than its container '" + big.id + "'");
      }
      if (small.fr && !big.fr) {
        throw InvalidInput("subobject '" + small.id + "' has nonzero framing but its container '" + big.id +
                           "' lies in ker psi");
      }
    }
  }

  if (split_) {
    auto k = index_of(split_->kmax);
    if (!k) throw InvalidInput("split descriptor names unknown subobject '" + split_->kmax + "'");
    if (subs_[*k].fr) throw InvalidInput("split summand '" + split_->kmax + "' must lie in ker psi");
    if (split_->complement_rank != type_.rank - subs_[*k].rank ||
        split_->complement_degree != type_.degree - subs_[*k].degree) {
      throw InvalidInput("split summands do not add up to the rank and degree of E");
    }
  }
}

}  // namespace flipchain
