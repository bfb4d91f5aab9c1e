#pragma once

#include <array>
#include <optional>
#include <utility>

#include "ringlab/scans.hpp"

namespace ringlab {

// Equivalence class of a right coprime pair <a,b>: the ordered pair of
// principal right ideals (aR, bR), labeled by the smallest generators.
struct PairClass {
  IdealSet first_ideal;
  IdealSet second_ideal;
  int gen_first = 0;   // smallest a with aR = first_ideal
  int gen_second = 0;  // smallest b with bR = second_ideal
};

bool same_class(const PairClass& p, const PairClass& q);

struct CoprimeWitness {
  int r = 0, s = 0;  // a*r + b*s = 1
};

bool is_right_coprime(const FiniteRing& R, int a, int b);
bool is_right_coprime(const RingScans& S, int a, int b);
// Lexicographically first (r, s), or nullopt when not coprime.
std::optional<CoprimeWitness> coprime_witness(const RingScans& S, int a, int b);

// Throws NotCoprime.
PairClass pair_class(const FiniteRing& R, int a, int b);
PairClass pair_class(const RingScans& S, int a, int b);

// The poset of right coprime pair classes, ordered by componentwise ideal
// inclusion. Classes are sorted by the lexicographic order on the ideal pair
// (element lists compared lexicographically), which fixes every export and
// tie-break downstream.
struct RcpPoset {
  std::vector<PairClass> classes;
  std::vector<uint8_t> leq_;      // m*m
  std::vector<int> minimal;       // ascending class indices
  std::vector<int> class_by_ids;  // g*g right-ideal-id grid -> index or -1
  int ideal_count = 0;            // g

  int m() const { return int(classes.size()); }
  bool le(int i, int j) const { return leq_[size_t(i) * classes.size() + j]; }
  bool lt(int i, int j) const { return i != j && le(i, j); }
  bool is_minimal(int i) const;
  // Class of (a, b) by ideal lookup; -1 when the pair is not coprime.
  int class_of(const RingScans& S, int a, int b) const;
  // Hasse edges (lower, upper), sorted.
  std::vector<std::pair<int, int>> covers() const;
};

// Materializes RCP(R). Throws SizeCapExceeded above the full-analysis cap.
RcpPoset enumerate_rcp(const RingScans& S, int full_cap = 512);

// Minimality of a class by three routes that must agree:
//   poset       no class strictly below
//   idempotent  some idempotent e with (eR, (1-e)R) equal to the class
//   inner       r, s with a = ara, b = bsb, arbs = bsar = 0
struct MinimalityReport {
  bool minimal = false;
  bool poset_route = false;
  bool idempotent_route = false;
  bool inner_route = false;
  std::optional<int> idempotent;                  // witness e
  std::optional<std::array<int, 2>> inner_rs;     // witness (r, s)
  bool agree() const {
    return poset_route == idempotent_route && poset_route == inner_route;
  }
};
MinimalityReport minimality_report(const RingScans& S, const RcpPoset& P, int idx);

// Lexicographically smallest minimal class below idx (always exists on a
// finite ring; optional mirrors the general contract).
std::optional<int> minimal_below(const RcpPoset& P, int idx);

// One pair run through every coprimality characterization:
//   ideal_sum         aR + bR = R, Bezout witness (r, s)
//   summand           l(a) ^ l(b) = 0 and an idempotent projector matrix
//                     [[ra, rb], [sa, sb]] whose row image equals R(a, b)
//   projector         same matrix shape plus an explicit (x0, y0) with
//                     (x0, y0) M = (a, b)
//   annihilator_pair  l(a) ^ l(b) = 0 and idempotent M with
//                     r(r) ^ r(s) = 0
//   mod_radical       images coprime in R / radical
//   ann_zero          l(a) ^ l(b) = 0 alone
// The first five agree on every ring and ideal_sum implies ann_zero; on a
// von Neumann regular ring ann_zero is equivalent to the rest. All searches
// run in lexicographic order and report the first witness.
struct CoprimalityReport {
  bool ideal_sum = false;
  bool summand = false;
  bool projector = false;
  bool annihilator_pair = false;
  bool mod_radical = false;
  bool ann_zero = false;
  std::optional<CoprimeWitness> bezout;
  std::optional<std::array<int, 2>> summand_rs;
  std::optional<std::array<int, 4>> projector_rsxy;
  std::optional<std::array<int, 2>> annihilator_rs;
  std::optional<CoprimeWitness> mod_radical_rs;
  bool agree() const {
    bool v = ideal_sum;
    if (summand != v || projector != v || annihilator_pair != v ||
        mod_radical != v)
      return false;
    return !v || ann_zero;
  }
};
CoprimalityReport coprimality_suite(const RingScans& S, int a, int b);

}  // namespace ringlab
