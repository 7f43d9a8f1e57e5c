#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace flipchain {

// Genus of the base curve and degree of the framing target bundle H
// (H = O_X gives frame_degree 0).
struct CurveContext {
  int genus = 2;
  std::int64_t frame_degree = 0;

  friend bool operator==(const CurveContext&, const CurveContext&) = default;
};

struct FramedType {
  int rank = 1;
  std::int64_t degree = 0;
  bool framing_nonzero = true;  // delta(psi)
  bool epsilon_nonzero = false;
  bool delta_iso = false;  // orientation delta: det E -> N[E] is an isomorphism

  friend bool operator==(const FramedType&, const FramedType&) = default;
};

// One proper nonzero subbundle F of E. `fr` records psi|_F != 0; fr == false
// means F lies in ker psi. `parents` lists subobjects strictly containing F.
struct SubobjectData {
  std::string id;
  int rank = 1;
  std::int64_t degree = 0;
  bool fr = false;
  bool phi_invariant = false;
  std::vector<std::string> parents;

  friend bool operator==(const SubobjectData&, const SubobjectData&) = default;
};

// Data for the split alternative of oriented stability:
// (E, psi) = (K_max, 0) + (E', psi).
struct SplitDescriptor {
  std::string kmax;
  bool kmax_stable = false;
  int complement_rank = 0;
  std::int64_t complement_degree = 0;
  bool complement_stable = false;

  friend bool operator==(const SplitDescriptor&, const SplitDescriptor&) = default;
};

// Numerical model of a framed module / framed Hitchin pair: the global type
// plus a finite lattice of subobjects. Construction validates the lattice
// and throws InvalidInput on the first violated invariant.
class FramedModel {
 public:
  FramedModel(CurveContext ctx, FramedType type, std::vector<SubobjectData> subs,
              std::optional<SplitDescriptor> split = std::nullopt);

  const CurveContext& context() const { return ctx_; }
  const FramedType& type() const { return type_; }
  const std::vector<SubobjectData>& subs() const { return subs_; }
  const std::optional<SplitDescriptor>& split() const { return split_; }

  std::optional<std::size_t> index_of(std::string_view id) const;

  // subs[inner] is strictly contained in subs[outer], following parents
  // transitively.
  bool strictly_contains(std::size_t outer, std::size_t inner) const {
    return containment_[outer * subs_.size() + inner] != 0;
  }

  // Maximal-rank subobject with fr == false, standing in for ker psi.
  std::optional<std::size_t> kernel_index() const;

  // Containment closure is derived from the parents, so it is not compared.
  friend bool operator==(const FramedModel& a, const FramedModel& b) {
    return a.ctx_ == b.ctx_ && a.type_ == b.type_ && a.subs_ == b.subs_ && a.split_ == b.split_;
  }

 private:
  void validate_and_close();

  CurveContext ctx_;
  FramedType type_;
  std::vector<SubobjectData> subs_;
  std::optional<SplitDescriptor> split_;
  std::vector<char> containment_;
};

}  // namespace flipchain
