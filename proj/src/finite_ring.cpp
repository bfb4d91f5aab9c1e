#include "ringlab/finite_ring.hpp"

#include <algorithm>
#include <deque>

namespace ringlab {

std::string to_string(Side s) {
  switch (s) {
    case Side::right: return "right";
    case Side::left: return "left";
    case Side::two_sided: return "two_sided";
  }
  return "?";
}

namespace {

std::string tuple_msg(const char* law, std::initializer_list<int> xs) {
  std::string m = law;
  m += " fails at (";
  bool sep = false;
  for (int x : xs) {
    if (sep) m += ", ";
    m += std::to_string(x);
    sep = true;
  }
  m += ")";
  return m;
}

// Additive closure of a set already closed under the requested
// multiplications by ring elements; breadth-first over sums and products.
ElemSet closure(const FiniteRing& R, const std::vector<int>& gens, Side side) {
  const int n = R.n;
  ElemSet set(n);
  set.insert(0);
  std::deque<int> work;
  auto push = [&](int x) {
    if (!set.contains(x)) {
      set.insert(x);
      work.push_back(x);
    }
  };
  for (int g : gens) push(g);
  while (!work.empty()) {
    int x = work.front();
    work.pop_front();
    for (int y : set.elements()) push(R.add(x, y));
    for (int r = 0; r < n; ++r) {
      if (side != Side::left) push(R.mul(x, r));
      if (side != Side::right) push(R.mul(r, x));
    }
  }
  return set;
}

}  // namespace

void validate_tables(const FiniteRing& R) {
  const int n = R.n;
  if (n <= 0) throw InvalidTable("ring must have at least one element");
  if (R.add_table.size() != size_t(n) * n || R.mul_table.size() != size_t(n) * n ||
      R.neg_table.size() != size_t(n))
    throw InvalidTable("table sizes do not match the element count");
  auto in_range = [n](int32_t v) { return v >= 0 && v < n; };
  for (int32_t v : R.add_table)
    if (!in_range(v)) throw InvalidTable("add entry out of range");
  for (int32_t v : R.mul_table)
    if (!in_range(v)) throw InvalidTable("mul entry out of range");
  for (int32_t v : R.neg_table)
    if (!in_range(v)) throw InvalidTable("neg entry out of range");
  if (!in_range(R.one)) throw InvalidTable("one out of range");

  for (int x = 0; x < n; ++x) {
    if (R.add(0, x) != x) throw InvalidTable(tuple_msg("0 + x = x", {x}));
    if (R.add(x, 0) != x) throw InvalidTable(tuple_msg("x + 0 = x", {x}));
    if (R.add(x, R.neg(x)) != 0)
      throw InvalidTable(tuple_msg("x + (-x) = 0", {x}));
    if (R.mul(R.one, x) != x) throw InvalidTable(tuple_msg("1 * x = x", {x}));
    if (R.mul(x, R.one) != x) throw InvalidTable(tuple_msg("x * 1 = x", {x}));
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (R.add(x, y) != R.add(y, x))
        throw InvalidTable(tuple_msg("x + y = y + x", {x, y}));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        if (R.add(R.add(x, y), z) != R.add(x, R.add(y, z)))
          throw InvalidTable(tuple_msg("(x+y)+z = x+(y+z)", {x, y, z}));
        if (R.mul(R.mul(x, y), z) != R.mul(x, R.mul(y, z)))
          throw InvalidTable(tuple_msg("(xy)z = x(yz)", {x, y, z}));
        if (R.mul(x, R.add(y, z)) != R.add(R.mul(x, y), R.mul(x, z)))
          throw InvalidTable(tuple_msg("x(y+z) = xy+xz", {x, y, z}));
        if (R.mul(R.add(x, y), z) != R.add(R.mul(x, z), R.mul(y, z)))
          throw InvalidTable(tuple_msg("(x+y)z = xz+yz", {x, y, z}));
      }
}

bool is_ideal(const FiniteRing& R, const ElemSet& set, Side side) {
  if (!set.contains(0)) return false;
  for (int x : set.elements()) {
    for (int y : set.elements())
      if (!set.contains(R.add(x, y))) return false;
    for (int r = 0; r < R.n; ++r) {
      if (side != Side::left && !set.contains(R.mul(x, r))) return false;
      if (side != Side::right && !set.contains(R.mul(r, x))) return false;
    }
  }
  return true;
}

ElemSet units(const FiniteRing& R) {
  const int n = R.n;
  ElemSet u(n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (R.mul(x, y) == R.one) {
        if (R.mul(y, x) != R.one)
          throw InvariantViolation(
              "one-sided inverse did not collapse: " + std::to_string(x) +
              " * " + std::to_string(y) + " = 1 but not conversely");
        u.insert(x);
        break;
      }
  return u;
}

std::vector<int> unit_inverses(const FiniteRing& R) {
  const int n = R.n;
  std::vector<int> inv(n, -1);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (R.mul(x, y) == R.one && R.mul(y, x) == R.one) {
        inv[x] = y;
        break;
      }
  return inv;
}

ElemSet idempotents(const FiniteRing& R) {
  ElemSet e(R.n);
  for (int x = 0; x < R.n; ++x)
    if (R.mul(x, x) == x) e.insert(x);
  return e;
}

IdealSet principal_right_ideal(const FiniteRing& R, int a) {
  ElemSet s(R.n);
  for (int r = 0; r < R.n; ++r) s.insert(R.mul(a, r));
  return IdealSet{std::move(s), Side::right, {a}};
}

IdealSet principal_left_ideal(const FiniteRing& R, int a) {
  ElemSet s(R.n);
  for (int r = 0; r < R.n; ++r) s.insert(R.mul(r, a));
  return IdealSet{std::move(s), Side::left, {a}};
}

IdealSet right_ideal_generated(const FiniteRing& R, const std::vector<int>& gens) {
  return IdealSet{closure(R, gens, Side::right), Side::right, gens};
}

IdealSet left_ideal_generated(const FiniteRing& R, const std::vector<int>& gens) {
  return IdealSet{closure(R, gens, Side::left), Side::left, gens};
}

IdealSet two_sided_ideal_generated(const FiniteRing& R, const std::vector<int>& gens) {
  return IdealSet{closure(R, gens, Side::two_sided), Side::two_sided, gens};
}

IdealSet ideal_sum(const FiniteRing& R, const IdealSet& I, const IdealSet& K) {
  if (I.side != K.side)
    throw SideMismatch("ideal_sum: " + to_string(I.side) + " vs " +
                       to_string(K.side));
  ElemSet s(R.n);
  for (int x : I.elems.elements())
    for (int y : K.elems.elements()) s.insert(R.add(x, y));
  std::vector<int> gens = I.generators;
  gens.insert(gens.end(), K.generators.begin(), K.generators.end());
  return IdealSet{std::move(s), I.side, std::move(gens)};
}

IdealSet ideal_intersection(const FiniteRing& R, const IdealSet& I,
                            const IdealSet& K) {
  if (I.side != K.side)
    throw SideMismatch("ideal_intersection: " + to_string(I.side) + " vs " +
                       to_string(K.side));
  ElemSet s = I.elems & K.elems;
  std::vector<int> gens = greedy_generators(R, s, I.side);
  return IdealSet{std::move(s), I.side, std::move(gens)};
}

IdealSet left_annihilator(const FiniteRing& R, int a) {
  ElemSet s(R.n);
  for (int x = 0; x < R.n; ++x)
    if (R.mul(x, a) == 0) s.insert(x);
  std::vector<int> gens = greedy_generators(R, s, Side::left);
  return IdealSet{std::move(s), Side::left, std::move(gens)};
}

IdealSet right_annihilator(const FiniteRing& R, int a) {
  ElemSet s(R.n);
  for (int x = 0; x < R.n; ++x)
    if (R.mul(a, x) == 0) s.insert(x);
  std::vector<int> gens = greedy_generators(R, s, Side::right);
  return IdealSet{std::move(s), Side::right, std::move(gens)};
}

IdealSet jacobson_radical(const FiniteRing& R) {
  const int n = R.n;
  ElemSet u = units(R);
  ElemSet left(n), right(n);
  for (int x = 0; x < n; ++x) {
    bool ok = true;
    for (int r = 0; r < n && ok; ++r)
      if (!u.contains(R.sub(R.one, R.mul(r, x)))) ok = false;
    if (ok) left.insert(x);
    ok = true;
    for (int r = 0; r < n && ok; ++r)
      if (!u.contains(R.sub(R.one, R.mul(x, r)))) ok = false;
    if (ok) right.insert(x);
  }
  if (!(left == right))
    throw InvariantViolation("radical scans from the two sides disagree");
  return IdealSet{left, Side::two_sided, greedy_generators(R, left, Side::two_sided)};
}

QuotientRing quotient_ring(const FiniteRing& R, const IdealSet& I) {
  if (I.side != Side::two_sided)
    throw NotTwoSided("quotient requires a two-sided ideal, got " +
                      to_string(I.side));
  if (!is_ideal(R, I.elems, Side::two_sided))
    throw InvariantViolation("set tagged two-sided is not an ideal");
  const int n = R.n;
  // rep[x] = smallest member of the coset x + I
  std::vector<int> rep(n);
  for (int x = 0; x < n; ++x) {
    int m = x;
    for (int i : I.elems.elements()) m = std::min(m, R.add(x, i));
    rep[x] = m;
  }
  std::vector<int> reps;
  for (int x = 0; x < n; ++x)
    if (rep[x] == x) reps.push_back(x);
  std::vector<int> index_of(n, -1);
  for (size_t i = 0; i < reps.size(); ++i) index_of[reps[i]] = int(i);

  FiniteRing Q;
  Q.n = int(reps.size());
  Q.add_table.resize(size_t(Q.n) * Q.n);
  Q.mul_table.resize(size_t(Q.n) * Q.n);
  Q.neg_table.resize(Q.n);
  for (int i = 0; i < Q.n; ++i) {
    Q.neg_table[i] = index_of[rep[R.neg(reps[i])]];
    for (int j = 0; j < Q.n; ++j) {
      Q.add_table[size_t(i) * Q.n + j] = index_of[rep[R.add(reps[i], reps[j])]];
      Q.mul_table[size_t(i) * Q.n + j] = index_of[rep[R.mul(reps[i], reps[j])]];
    }
  }
  Q.one = index_of[rep[R.one]];
  Q.label = R.label + " / ideal";

  std::vector<int> proj(n);
  for (int x = 0; x < n; ++x) proj[x] = index_of[rep[x]];
  if (proj[0] != 0) throw InvariantViolation("zero coset not at index 0");
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (proj[R.add(x, y)] != Q.add(proj[x], proj[y]) ||
          proj[R.mul(x, y)] != Q.mul(proj[x], proj[y]))
        throw InvariantViolation("quotient projection is not a ring map");
    }
  return QuotientRing{std::move(Q), std::move(proj)};
}

std::optional<int> regular_witness(const FiniteRing& R, int a) {
  for (int x = 0; x < R.n; ++x)
    if (R.mul(R.mul(a, x), a) == a) {
      int e = R.mul(a, x);
      if (R.mul(e, e) != e)
        throw InvariantViolation("a*x is not idempotent for a regular witness");
      if (!(principal_right_ideal(R, e).elems == principal_right_ideal(R, a).elems))
        throw InvariantViolation("(a*x)R differs from aR for a regular witness");
      return x;
    }
  return std::nullopt;
}

std::vector<int> greedy_generators(const FiniteRing& R, const ElemSet& set,
                                   Side side) {
  std::vector<int> gens;
  ElemSet have(R.n);
  have.insert(0);
  for (int x : set.elements()) {
    if (have.contains(x)) continue;
    gens.push_back(x);
    have = closure(R, gens, side);
  }
  return gens;
}

}  // namespace ringlab
