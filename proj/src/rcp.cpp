#include "ringlab/rcp.hpp"

#include <algorithm>
#include <numeric>

namespace ringlab {

bool same_class(const PairClass& p, const PairClass& q) {
  return p.first_ideal.elems == q.first_ideal.elems &&
         p.second_ideal.elems == q.second_ideal.elems;
}

bool is_right_coprime(const FiniteRing& R, int a, int b) {
  ElemSet aR = principal_right_ideal(R, a).elems;
  ElemSet bR = principal_right_ideal(R, b).elems;
  ElemSet sum(R.n);
  for (int x : aR.elements())
    for (int y : bR.elements()) sum.insert(R.add(x, y));
  return sum.is_full();
}

bool is_right_coprime(const RingScans& S, int a, int b) {
  return S.right_coprime_elems(a, b);
}

std::optional<CoprimeWitness> coprime_witness(const RingScans& S, int a, int b) {
  const FiniteRing& R = S.ring();
  const ElemSet& bR = S.right_ideal_of(b);
  for (int r = 0; r < R.n; ++r) {
    int target = R.sub(R.one, R.mul(a, r));
    if (!bR.contains(target)) continue;
    for (int s = 0; s < R.n; ++s)
      if (R.mul(b, s) == target) return CoprimeWitness{r, s};
  }
  return std::nullopt;
}

namespace {

PairClass make_class(const RingScans& S, int ideal_a, int ideal_b) {
  PairClass c;
  int ga = S.right_min_generator(ideal_a);
  int gb = S.right_min_generator(ideal_b);
  c.first_ideal = IdealSet{S.right_ideals()[ideal_a], Side::right, {ga}};
  c.second_ideal = IdealSet{S.right_ideals()[ideal_b], Side::right, {gb}};
  c.gen_first = ga;
  c.gen_second = gb;
  return c;
}

}  // namespace

PairClass pair_class(const RingScans& S, int a, int b) {
  if (!S.right_coprime_elems(a, b)) throw NotCoprime(a, b);
  return make_class(S, S.right_id(a), S.right_id(b));
}

PairClass pair_class(const FiniteRing& R, int a, int b) {
  RingScans S(R);
  return pair_class(S, a, b);
}

bool RcpPoset::is_minimal(int i) const {
  return std::binary_search(minimal.begin(), minimal.end(), i);
}

int RcpPoset::class_of(const RingScans& S, int a, int b) const {
  return class_by_ids[size_t(S.right_id(a)) * ideal_count + S.right_id(b)];
}

std::vector<std::pair<int, int>> RcpPoset::covers() const {
  std::vector<std::pair<int, int>> edges;
  const int mm = m();
  for (int i = 0; i < mm; ++i)
    for (int j = 0; j < mm; ++j) {
      if (!lt(i, j)) continue;
      bool covered = true;
      for (int k = 0; k < mm && covered; ++k)
        if (lt(i, k) && lt(k, j)) covered = false;
      if (covered) edges.emplace_back(i, j);
    }
  return edges;
}

RcpPoset enumerate_rcp(const RingScans& S, int full_cap) {
  if (S.size() > full_cap) throw SizeCapExceeded(S.size(), full_cap);
  const int g = int(S.right_ideals().size());

  // Order distinct ideals by the lexicographic order on their element lists;
  // classes inherit the pairwise order, which pins every downstream export.
  std::vector<int> by_lex(g);
  std::iota(by_lex.begin(), by_lex.end(), 0);
  std::sort(by_lex.begin(), by_lex.end(), [&](int x, int y) {
    return ElemSet::lex_less(S.right_ideals()[x], S.right_ideals()[y]);
  });
  std::vector<int> rank(g);
  for (int i = 0; i < g; ++i) rank[by_lex[i]] = i;

  std::vector<std::pair<int, int>> id_pairs;  // (ideal_a, ideal_b)
  for (int i = 0; i < g; ++i)
    for (int j = 0; j < g; ++j)
      if (S.right_pair_sum(i, j).is_full()) id_pairs.emplace_back(i, j);
  std::sort(id_pairs.begin(), id_pairs.end(),
            [&](const std::pair<int, int>& x, const std::pair<int, int>& y) {
              if (rank[x.first] != rank[y.first])
                return rank[x.first] < rank[y.first];
              return rank[x.second] < rank[y.second];
            });

  RcpPoset P;
  P.ideal_count = g;
  P.class_by_ids.assign(size_t(g) * g, -1);
  for (const auto& [i, j] : id_pairs) {
    P.class_by_ids[size_t(i) * g + j] = int(P.classes.size());
    P.classes.push_back(make_class(S, i, j));
  }

  const int m = P.m();
  std::vector<uint8_t> subset(size_t(g) * g);
  for (int i = 0; i < g; ++i)
    for (int j = 0; j < g; ++j)
      subset[size_t(i) * g + j] =
          S.right_ideals()[i].is_subset_of(S.right_ideals()[j]);
  P.leq_.assign(size_t(m) * m, 0);
  for (int p = 0; p < m; ++p)
    for (int q = 0; q < m; ++q) {
      const auto& cp = P.classes[p];
      const auto& cq = P.classes[q];
      int ia = S.right_id(cp.gen_first), ib = S.right_id(cp.gen_second);
      int ja = S.right_id(cq.gen_first), jb = S.right_id(cq.gen_second);
      P.leq_[size_t(p) * m + q] =
          subset[size_t(ia) * g + ja] && subset[size_t(ib) * g + jb];
    }
  for (int p = 0; p < m; ++p) {
    bool has_lower = false;
    for (int q = 0; q < m && !has_lower; ++q) has_lower = P.lt(q, p);
    if (!has_lower) P.minimal.push_back(p);
  }

  // <1,0> and <0,1> always belong to the minimal set.
  int trivial_a = P.class_of(S, S.ring().one, 0);
  int trivial_b = P.class_of(S, 0, S.ring().one);
  if (trivial_a < 0 || trivial_b < 0 || !P.is_minimal(trivial_a) ||
      !P.is_minimal(trivial_b))
    throw InvariantViolation("trivial pair classes missing from the minimal set");
  return P;
}

MinimalityReport minimality_report(const RingScans& S, const RcpPoset& P, int idx) {
  const FiniteRing& R = S.ring();
  MinimalityReport rep;
  rep.poset_route = P.is_minimal(idx);

  const PairClass& c = P.classes[idx];
  int ia = S.right_id(c.gen_first), ib = S.right_id(c.gen_second);
  for (int e : S.idempotent_list()) {
    int f = R.sub(R.one, e);
    if (S.right_id(e) == ia && S.right_id(f) == ib) {
      rep.idempotent_route = true;
      rep.idempotent = e;
      break;
    }
  }

  const int a = c.gen_first, b = c.gen_second;
  for (int r = 0; r < R.n && !rep.inner_route; ++r) {
    int ar = R.mul(a, r);
    if (R.mul(ar, a) != a) continue;
    for (int s = 0; s < R.n; ++s) {
      int bs = R.mul(b, s);
      if (R.mul(bs, b) != b) continue;
      if (R.mul(ar, bs) != 0 || R.mul(bs, ar) != 0) continue;
      rep.inner_route = true;
      rep.inner_rs = {{r, s}};
      break;
    }
  }

  rep.minimal = rep.poset_route;
  return rep;
}

std::optional<int> minimal_below(const RcpPoset& P, int idx) {
  // classes are sorted by the ideal-pair order, so the first hit is the
  // lexicographically smallest
  for (int m : P.minimal)
    if (P.le(m, idx)) return m;
  return std::nullopt;
}

CoprimalityReport coprimality_suite(const RingScans& S, int a, int b) {
  const FiniteRing& R = S.ring();
  const int n = R.n;
  CoprimalityReport rep;

  rep.ideal_sum = S.right_coprime_elems(a, b);
  rep.bezout = coprime_witness(S, a, b);
  if (rep.bezout.has_value() != rep.ideal_sum)
    throw InvariantViolation("Bezout witness disagrees with the ideal sum");

  rep.ann_zero = (S.left_ann(a) & S.left_ann(b)).is_zero_only();

  const RingScans& Q = S.mod_radical_scans();
  const auto& proj = S.mod_radical_projection();
  rep.mod_radical = Q.right_coprime_elems(proj[a], proj[b]);
  if (rep.mod_radical) {
    auto w = coprime_witness(Q, proj[a], proj[b]);
    rep.mod_radical_rs = w;
  }

  // The matrix conditions share one lexicographic (r, s) sweep over
  // idempotent M = [[ra, rb], [sa, sb]]; each condition keeps the first
  // candidate satisfying its own predicate. All three require the zero
  // joint left annihilator up front.
  if (rep.ann_zero) {
    bool need4 = true, need5 = true, need6 = true;
    int proj_rs[2] = {0, 0};
    for (int r = 0; r < n && (need4 || need5 || need6); ++r) {
      const int ra = R.mul(r, a), rb = R.mul(r, b);
      for (int s = 0; s < n && (need4 || need5 || need6); ++s) {
        const int sa = R.mul(s, a), sb = R.mul(s, b);
        if (R.add(R.mul(ra, ra), R.mul(rb, sa)) != ra) continue;
        if (R.add(R.mul(ra, rb), R.mul(rb, sb)) != rb) continue;
        if (R.add(R.mul(sa, ra), R.mul(sb, sa)) != sa) continue;
        if (R.add(R.mul(sa, rb), R.mul(sb, sb)) != sb) continue;
        if (need6 && (S.right_ann(r) & S.right_ann(s)).is_zero_only()) {
          rep.annihilator_pair = true;
          rep.annihilator_rs = {{r, s}};
          need6 = false;
        }
        if (need4 || need5) {
          const ElemSet& L = S.left_pair_sum(S.left_id(r), S.left_id(s));
          // the row image of M is {(za, zb) : z in Rr + Rs}; with the zero
          // joint annihilator z -> (za, zb) is injective, so the image is
          // all of R(a, b) exactly when Rr + Rs is everything
          if (need4 && L.is_full()) {
            rep.summand = true;
            rep.summand_rs = {{r, s}};
            need4 = false;
          }
          if (need5) {
            for (int z : L.elements())
              if (R.mul(z, a) == a && R.mul(z, b) == b) {
                rep.projector = true;
                proj_rs[0] = r;
                proj_rs[1] = s;
                need5 = false;
                break;
              }
          }
        }
      }
    }
    if (rep.projector) {
      // explicit (x0, y0) with (x0, y0) M = (a, b), lexicographically first
      const int r = proj_rs[0], s = proj_rs[1];
      const int ra = R.mul(r, a), rb = R.mul(r, b);
      const int sa = R.mul(s, a), sb = R.mul(s, b);
      bool found = false;
      for (int x0 = 0; x0 < n && !found; ++x0) {
        const int xa = R.mul(x0, ra), xb = R.mul(x0, rb);
        for (int y0 = 0; y0 < n; ++y0)
          if (R.add(xa, R.mul(y0, sa)) == a && R.add(xb, R.mul(y0, sb)) == b) {
            rep.projector_rsxy = {{r, s, x0, y0}};
            found = true;
            break;
          }
      }
      if (!found)
        throw InvariantViolation("projector witness lost its (x0, y0) solution");
    }
  }
  return rep;
}

}  // namespace ringlab
