#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "ringlab/finite_ring.hpp"

namespace ringlab {

// Per-ring precomputed scan data shared by the pair, chain and
// classification machinery: units, idempotents, the radical, principal
// ideal indexing on both sides with pairwise sums, annihilators, and the
// quotient modulo the radical. Immutable after construction; cheap to build
// at workbench scale (a few O(n^2) passes).
class RingScans {
 public:
  explicit RingScans(const FiniteRing& R);

  const FiniteRing& ring() const { return ring_; }
  int size() const { return ring_.n; }

  const ElemSet& units() const { return units_; }
  const std::vector<int>& unit_inverses() const { return inv_; }
  bool is_unit(int x) const { return units_.contains(x); }

  const ElemSet& idempotents() const { return idem_; }
  const std::vector<int>& idempotent_list() const { return idem_list_; }

  const IdealSet& radical() const { return radical_; }
  bool in_radical(int x) const { return radical_.contains(x); }

  // Principal ideal indexing. Distinct ideals are listed in order of their
  // smallest generator, so min_generator(id) is that generator.
  int right_id(int a) const { return right_id_[a]; }
  int left_id(int a) const { return left_id_[a]; }
  const std::vector<ElemSet>& right_ideals() const { return right_ideals_; }
  const std::vector<ElemSet>& left_ideals() const { return left_ideals_; }
  int right_min_generator(int id) const { return right_gen_[id]; }
  int left_min_generator(int id) const { return left_gen_[id]; }
  const ElemSet& right_ideal_of(int a) const { return right_ideals_[right_id_[a]]; }
  const ElemSet& left_ideal_of(int a) const { return left_ideals_[left_id_[a]]; }
  int full_right_id() const { return right_id_[ring_.one]; }
  int full_left_id() const { return left_id_[ring_.one]; }

  // Sums of principal ideals by ideal id.
  const ElemSet& right_pair_sum(int i, int j) const {
    return right_sums_[size_t(i) * right_ideals_.size() + j];
  }
  const ElemSet& left_pair_sum(int i, int j) const {
    return left_sums_[size_t(i) * left_ideals_.size() + j];
  }
  // aR + bR = R, by element.
  bool right_coprime_elems(int a, int b) const {
    return right_sum_full_[size_t(right_id_[a]) * right_ideals_.size() +
                           right_id_[b]];
  }

  const ElemSet& left_ann(int a) const { return left_ann_[a]; }
  const ElemSet& right_ann(int a) const { return right_ann_[a]; }

  // Smallest x with a*x*a = a, or nullopt.
  std::optional<int> regular_witness(int a) const {
    return reg_[a] < 0 ? std::nullopt : std::optional<int>(reg_[a]);
  }
  bool all_regular() const { return all_regular_; }

  // Quotient modulo the radical (built on first use).
  const FiniteRing& mod_radical() const;
  const std::vector<int>& mod_radical_projection() const;
  const RingScans& mod_radical_scans() const;

 private:
  void ensure_quotient() const;

  FiniteRing ring_;
  ElemSet units_;
  std::vector<int> inv_;
  ElemSet idem_;
  std::vector<int> idem_list_;
  IdealSet radical_;
  std::vector<int> right_id_, left_id_;
  std::vector<ElemSet> right_ideals_, left_ideals_;
  std::vector<int> right_gen_, left_gen_;
  std::vector<ElemSet> right_sums_, left_sums_;
  std::vector<uint8_t> right_sum_full_;
  std::vector<ElemSet> left_ann_, right_ann_;
  std::vector<int> reg_;
  bool all_regular_ = false;

  mutable std::unique_ptr<QuotientRing> quot_;
  mutable std::unique_ptr<RingScans> quot_scans_;
};

}  // namespace ringlab
