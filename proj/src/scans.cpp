#include "ringlab/scans.hpp"

namespace ringlab {

namespace {

// Sumset of two additive subgroups given as bitsets.
ElemSet subgroup_sum(const FiniteRing& R, const ElemSet& I, const ElemSet& K) {
  ElemSet out(R.n);
  for (int x : I.elements())
    for (int y : K.elements()) out.insert(R.add(x, y));
  return out;
}

}  // namespace

RingScans::RingScans(const FiniteRing& R) : ring_(R) {
  const int n = ring_.n;

  units_ = ringlab::units(ring_);
  inv_ = ringlab::unit_inverses(ring_);
  idem_ = ringlab::idempotents(ring_);
  idem_list_ = idem_.elements();
  radical_ = jacobson_radical(ring_);

  // principal ideal indexing, both sides
  auto index_side = [&](bool right, std::vector<int>& id,
                        std::vector<ElemSet>& ideals, std::vector<int>& gen) {
    id.assign(n, -1);
    for (int a = 0; a < n; ++a) {
      ElemSet s(n);
      for (int r = 0; r < n; ++r)
        s.insert(right ? ring_.mul(a, r) : ring_.mul(r, a));
      int found = -1;
      for (size_t i = 0; i < ideals.size(); ++i)
        if (ideals[i] == s) {
          found = int(i);
          break;
        }
      if (found < 0) {
        found = int(ideals.size());
        ideals.push_back(std::move(s));
        gen.push_back(a);  // a ascending, so the first generator is smallest
      }
      id[a] = found;
    }
  };
  index_side(true, right_id_, right_ideals_, right_gen_);
  index_side(false, left_id_, left_ideals_, left_gen_);

  const size_t gr = right_ideals_.size(), gl = left_ideals_.size();
  right_sums_.reserve(gr * gr);
  right_sum_full_.resize(gr * gr);
  for (size_t i = 0; i < gr; ++i)
    for (size_t j = 0; j < gr; ++j) {
      right_sums_.push_back(subgroup_sum(ring_, right_ideals_[i], right_ideals_[j]));
      right_sum_full_[i * gr + j] = right_sums_.back().is_full();
    }
  left_sums_.reserve(gl * gl);
  for (size_t i = 0; i < gl; ++i)
    for (size_t j = 0; j < gl; ++j)
      left_sums_.push_back(subgroup_sum(ring_, left_ideals_[i], left_ideals_[j]));

  left_ann_.reserve(n);
  right_ann_.reserve(n);
  for (int a = 0; a < n; ++a) {
    ElemSet l(n), r(n);
    for (int x = 0; x < n; ++x) {
      if (ring_.mul(x, a) == 0) l.insert(x);
      if (ring_.mul(a, x) == 0) r.insert(x);
    }
    left_ann_.push_back(std::move(l));
    right_ann_.push_back(std::move(r));
  }

  reg_.assign(n, -1);
  all_regular_ = true;
  for (int a = 0; a < n; ++a) {
    for (int x = 0; x < n; ++x)
      if (ring_.mul(ring_.mul(a, x), a) == a) {
        reg_[a] = x;
        break;
      }
    if (reg_[a] < 0) all_regular_ = false;
  }
}

void RingScans::ensure_quotient() const {
  if (quot_) return;
  quot_ = std::make_unique<QuotientRing>(quotient_ring(ring_, radical_));
  quot_->ring.label = ring_.label + " mod radical";
  quot_scans_ = std::make_unique<RingScans>(quot_->ring);
  if (!quot_scans_->radical().elems.is_zero_only())
    throw InvariantViolation("radical of the quotient by the radical is not zero");
}

const FiniteRing& RingScans::mod_radical() const {
  ensure_quotient();
  return quot_->ring;
}
const std::vector<int>& RingScans::mod_radical_projection() const {
  ensure_quotient();
  return quot_->projection;
}
const RingScans& RingScans::mod_radical_scans() const {
  ensure_quotient();
  return *quot_scans_;
}

}  // namespace ringlab
