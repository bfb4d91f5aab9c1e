#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ringlab/elem_set.hpp"
#include "ringlab/errors.hpp"

namespace ringlab {

// A finite unital ring as explicit operation tables over elements 0..n-1.
// Element 0 is always the additive identity. Rings are plain data: all the
// structure lives in the tables, and every derived object below is obtained
// by scanning them.
struct FiniteRing {
  int n = 0;
  int one = 0;
  std::vector<int32_t> add_table;  // n*n, row-major
  std::vector<int32_t> mul_table;  // n*n, row-major
  std::vector<int32_t> neg_table;  // n
  std::string label;

  int size() const { return n; }
  int zero() const { return 0; }
  int add(int x, int y) const { return add_table[size_t(x) * n + y]; }
  int mul(int x, int y) const { return mul_table[size_t(x) * n + y]; }
  int neg(int x) const { return neg_table[x]; }
  int sub(int x, int y) const { return add(x, neg(y)); }
};

enum class Side { right, left, two_sided };
std::string to_string(Side s);

// An ideal-like subset: the set, the side it is closed under, and the
// generators it was produced from. Invariant: every generator is a member
// and the set equals the closure of its generators on the stated side.
struct IdealSet {
  ElemSet elems;
  Side side = Side::right;
  std::vector<int> generators;

  bool contains(int x) const { return elems.contains(x); }
  int count() const { return elems.count(); }
};

// Checks every ring axiom on the raw tables (identities, inverses,
// commutativity of +, associativity of both operations, distributivity).
// Throws InvalidTable naming the first witnessing tuple.
void validate_tables(const FiniteRing& R);

// True iff `set` is closed as an ideal of the stated side (0 included,
// closed under + and the appropriate multiplications).
bool is_ideal(const FiniteRing& R, const ElemSet& set, Side side);

// Elements with a two-sided inverse. Finite rings collapse one-sided
// inverses; the scan asserts this and throws InvariantViolation otherwise.
ElemSet units(const FiniteRing& R);
// inverse[u] for units, -1 elsewhere.
std::vector<int> unit_inverses(const FiniteRing& R);

ElemSet idempotents(const FiniteRing& R);

IdealSet principal_right_ideal(const FiniteRing& R, int a);  // aR
IdealSet principal_left_ideal(const FiniteRing& R, int a);   // Ra

// Closure of a generating set on the given side (breadth-first under
// addition and the side's multiplications).
IdealSet right_ideal_generated(const FiniteRing& R, const std::vector<int>& gens);
IdealSet left_ideal_generated(const FiniteRing& R, const std::vector<int>& gens);
IdealSet two_sided_ideal_generated(const FiniteRing& R, const std::vector<int>& gens);

// Sum and intersection of two ideals of the same side. Throws SideMismatch.
IdealSet ideal_sum(const FiniteRing& R, const IdealSet& I, const IdealSet& K);
IdealSet ideal_intersection(const FiniteRing& R, const IdealSet& I, const IdealSet& K);

IdealSet left_annihilator(const FiniteRing& R, int a);   // {x : xa = 0}
IdealSet right_annihilator(const FiniteRing& R, int a);  // {x : ax = 0}

// {x : 1 - r*x is a unit for every r}. Computed from both sides and asserted
// equal; returned as a two-sided ideal.
IdealSet jacobson_radical(const FiniteRing& R);

struct QuotientRing {
  FiniteRing ring;
  std::vector<int> projection;  // element of R -> element of quotient
};

// Quotient by a two-sided ideal. Cosets are sorted by minimal representative,
// so the zero coset keeps index 0. The projection is asserted to be a unital
// surjective ring map. Throws NotTwoSided if I is not tagged two-sided.
QuotientRing quotient_ring(const FiniteRing& R, const IdealSet& I);

// Smallest x with a*x*a = a, if any. When found, a*x is asserted idempotent
// and (a*x)R = aR.
std::optional<int> regular_witness(const FiniteRing& R, int a);

// Small generating set for an ideal-like subset: greedy scan, adding the
// smallest element not yet in the closure of the picks.
std::vector<int> greedy_generators(const FiniteRing& R, const ElemSet& set, Side side);

}  // namespace ringlab
