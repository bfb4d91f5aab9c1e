#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace ringlab {

// Subset of {0..n-1} as a packed bitset. The universe size is fixed at
// construction; binary operations require equal universes.
class ElemSet {
 public:
  ElemSet() = default;
  explicit ElemSet(int universe) : n_(universe), w_((universe + 63) / 64, 0) {}

  static ElemSet full(int universe) {
    ElemSet s(universe);
    for (auto& w : s.w_) w = ~uint64_t(0);
    s.trim();
    return s;
  }

  int universe() const { return n_; }

  bool contains(int x) const { return (w_[x >> 6] >> (x & 63)) & 1; }
  void insert(int x) { w_[x >> 6] |= uint64_t(1) << (x & 63); }
  void erase(int x) { w_[x >> 6] &= ~(uint64_t(1) << (x & 63)); }

  int count() const {
    int c = 0;
    for (uint64_t w : w_) c += std::popcount(w);
    return c;
  }
  bool empty() const {
    for (uint64_t w : w_)
      if (w) return false;
    return true;
  }
  bool is_full() const { return count() == n_; }
  // {0} as a set; the zero ideal.
  bool is_zero_only() const { return count() == 1 && contains(0); }

  bool intersects(const ElemSet& o) const {
    for (size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & o.w_[i]) return true;
    return false;
  }
  bool is_subset_of(const ElemSet& o) const {
    for (size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }

  ElemSet operator&(const ElemSet& o) const {
    ElemSet r(n_);
    for (size_t i = 0; i < w_.size(); ++i) r.w_[i] = w_[i] & o.w_[i];
    return r;
  }
  ElemSet operator|(const ElemSet& o) const {
    ElemSet r(n_);
    for (size_t i = 0; i < w_.size(); ++i) r.w_[i] = w_[i] | o.w_[i];
    return r;
  }
  ElemSet& operator|=(const ElemSet& o) {
    for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }

  bool operator==(const ElemSet& o) const = default;

  std::vector<int> elements() const {
    std::vector<int> out;
    out.reserve(count());
    for_each([&](int x) { out.push_back(x); });
    return out;
  }

  // Visits members in ascending order.
  template <class F>
  void for_each(F f) const {
    for (size_t i = 0; i < w_.size(); ++i) {
      uint64_t w = w_[i];
      while (w) {
        int b = std::countr_zero(w);
        f(int(i * 64) + b);
        w &= w - 1;
      }
    }
  }

  int first() const {
    for (size_t i = 0; i < w_.size(); ++i)
      if (w_[i]) return int(i * 64) + std::countr_zero(w_[i]);
    return -1;
  }

  // Lexicographic order on the ascending element lists ({0} < {0,1} < {0,2}).
  static bool lex_less(const ElemSet& a, const ElemSet& b) {
    auto va = a.elements(), vb = b.elements();
    return std::lexicographical_compare(va.begin(), va.end(), vb.begin(),
                                        vb.end());
  }

 private:
  void trim() {
    if (n_ % 64 != 0 && !w_.empty())
      w_.back() &= (uint64_t(1) << (n_ % 64)) - 1;
  }

  int n_ = 0;
  std::vector<uint64_t> w_;
};

}  // namespace ringlab
