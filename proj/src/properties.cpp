#include "ringlab/properties.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>

namespace ringlab {

PropertyReport verify_properties(const FiniteRing& R, const AnalysisCaps& caps) {
  PropertyReport report;
  RingScans S(R);
  RcpPoset P = enumerate_rcp(S, caps.full_analysis);
  const RingScans& Q = S.mod_radical_scans();
  const auto& proj = S.mod_radical_projection();

  auto run = [&](const char* name, const std::function<std::string()>& body) {
    PropertyCheck c;
    c.name = name;
    try {
      c.detail = body();
      c.pass = c.detail.empty();
    } catch (const std::exception& e) {
      c.pass = false;
      c.detail = e.what();
    }
    if (!c.pass) report.ok = false;
    report.checks.push_back(std::move(c));
  };

  run("ring_axioms", [&]() -> std::string {
    validate_tables(R);
    return "";
  });

  run("principal_ideal_closure", [&]() -> std::string {
    for (int a = 0; a < R.n; ++a) {
      const ElemSet& I = S.right_ideal_of(a);
      if (!I.contains(a)) return "right ideal misses its generator";
      if (!(I == principal_right_ideal(R, a).elems))
        return "right ideal differs from its closure";
      for (int x : I.elements())
        for (int r = 0; r < R.n; ++r)
          if (!I.contains(R.mul(x, r))) return "right ideal not right-closed";
      const ElemSet& L = S.left_ideal_of(a);
      if (!(L == principal_left_ideal(R, a).elems))
        return "left ideal differs from its closure";
      for (int x : L.elements())
        for (int r = 0; r < R.n; ++r)
          if (!L.contains(R.mul(r, x))) return "left ideal not left-closed";
    }
    return "";
  });

  run("radical_routes", [&]() -> std::string {
    IdealSet J = jacobson_radical(R);  // both quasi-regularity scans agree
    if (!(J.elems == S.radical().elems)) return "radical scan mismatch";
    try {
      auto ideals = enumerate_right_ideals(S, caps.ideal_enumeration);
      ElemSet meet = ElemSet::full(R.n);
      for (size_t i = 0; i < ideals.size(); ++i) {
        if (ideals[i].is_full()) continue;
        bool maximal = true;
        for (size_t j = 0; j < ideals.size() && maximal; ++j)
          if (i != j && !ideals[j].is_full() &&
              ideals[i].is_subset_of(ideals[j]))
            maximal = false;
        if (maximal) meet = meet & ideals[i];
      }
      if (!(meet == J.elems))
        return "radical differs from the maximal-right-ideal intersection";
    } catch (const IdealEnumerationCapExceeded&) {
      // third route is an optional oracle; the two scans above already agree
    }
    return "";
  });

  run("annihilator_sidedness", [&]() -> std::string {
    for (int a = 0; a < R.n; ++a) {
      for (int x : S.left_ann(a).elements()) {
        if (R.mul(x, a) != 0) return "left annihilator contains a non-annihilator";
        for (int r = 0; r < R.n; ++r)
          if (!S.left_ann(a).contains(R.mul(r, x)))
            return "left annihilator is not a left ideal";
      }
      for (int x : S.right_ann(a).elements()) {
        if (R.mul(a, x) != 0)
          return "right annihilator contains a non-annihilator";
        for (int r = 0; r < R.n; ++r)
          if (!S.right_ann(a).contains(R.mul(x, r)))
            return "right annihilator is not a right ideal";
      }
    }
    return "";
  });

  run("unit_group_closure", [&]() -> std::string {
    for (int u : S.units().elements()) {
      int v = S.unit_inverses()[u];
      if (R.mul(u, v) != R.one || R.mul(v, u) != R.one)
        return "inverse table broken at " + std::to_string(u);
      for (int w : S.units().elements())
        if (!S.is_unit(R.mul(u, w))) return "units not closed under product";
    }
    return "";
  });

  run("quotient_radical_zero", [&]() -> std::string {
    return Q.radical().elems.is_zero_only() ? "" : "quotient keeps a radical";
  });

  run("coprimality_routes_all_pairs", [&]() -> std::string {
    for (int a = 0; a < R.n; ++a)
      for (int b = 0; b < R.n; ++b) {
        CoprimalityReport rep = coprimality_suite(S, a, b);
        if (!rep.agree())
          return "characterizations split on (" + std::to_string(a) + ", " +
                 std::to_string(b) + ")";
        if (S.all_regular() && rep.ann_zero && !rep.ideal_sum)
          return "zero joint annihilator without coprimality on a regular "
                 "ring at (" +
                 std::to_string(a) + ", " + std::to_string(b) + ")";
      }
    return "";
  });

  run("minimality_routes_all_classes", [&]() -> std::string {
    for (int i = 0; i < P.m(); ++i)
      if (!minimality_report(S, P, i).agree())
        return "minimality routes split on class " + std::to_string(i);
    return "";
  });

  run("generator_invariance", [&]() -> std::string {
    std::vector<std::vector<int>> members(S.right_ideals().size());
    for (int x = 0; x < R.n; ++x) members[S.right_id(x)].push_back(x);
    std::mt19937 rng(0x5eed);
    const int samples = std::min(200, 20 * std::max(1, P.m()));
    for (int t = 0; t < samples; ++t) {
      int idx = int(rng() % P.m());
      const PairClass& c = P.classes[idx];
      const auto& fa = members[S.right_id(c.gen_first)];
      const auto& fb = members[S.right_id(c.gen_second)];
      int a2 = fa[rng() % fa.size()];
      int b2 = fb[rng() % fb.size()];
      if (!is_right_coprime(S, a2, b2))
        return "regenerated pair lost coprimality on class " +
               std::to_string(idx);
      if (!same_class(pair_class(S, a2, b2), c))
        return "regenerated pair changed class " + std::to_string(idx);
      if (P.class_of(S, a2, b2) != idx)
        return "ideal-grid lookup disagrees on class " + std::to_string(idx);
    }
    return "";
  });

  run("trivial_classes_minimal", [&]() -> std::string {
    int one_zero = P.class_of(S, R.one, 0);
    int zero_one = P.class_of(S, 0, R.one);
    if (one_zero < 0 || zero_one < 0) return "trivial classes missing";
    if (!P.is_minimal(one_zero) || !P.is_minimal(zero_one))
      return "trivial classes not minimal";
    if ((one_zero == zero_one) != (R.n == 1))
      return "trivial classes coincide exactly on the one-element ring";
    return "";
  });

  run("mod_radical_pair_equivalence", [&]() -> std::string {
    for (int a = 0; a < R.n; ++a)
      for (int b = 0; b < R.n; ++b)
        if (S.right_coprime_elems(a, b) !=
            Q.right_coprime_elems(proj[a], proj[b]))
          return "coprimality changed across the radical at (" +
                 std::to_string(a) + ", " + std::to_string(b) + ")";
    return "";
  });

  run("chain_laws_sampled", [&]() -> std::string {
    auto chains = descending_chains(P, 8, 1000);
    if (chains.empty()) return "no chains sampled";
    for (const auto& chain : chains) {
      WitnessedChain wc = witness_chain(S, P, chain);
      (void)minimal_lower_bound(S, P, wc);  // built-in cross-checks
    }
    return "";
  });

  run("strict_chain_length_bound", [&]() -> std::string {
    StrongExchangeAudit audit = strongly_exchange_audit(S, P);
    if (audit.longest_strict_chain > P.m())
      return "strict chain longer than the class count";
    if (!audit.sampled_chains_ok) return "a sampled chain lost its bound";
    if (audit.classes_without_minimal != 0)
      return "a class has no minimal class below it";
    return "";
  });

  if (S.all_regular()) {
    run("regular_chain_idempotent_recipe", [&]() -> std::string {
      // idempotent generator per principal right ideal
      std::vector<int> idem_gen(S.right_ideals().size(), -1);
      for (size_t i = 0; i < S.right_ideals().size(); ++i) {
        for (int e : S.idempotent_list())
          if (S.right_id(e) == int(i)) {
            idem_gen[i] = e;
            break;
          }
        if (idem_gen[i] < 0)
          return "principal right ideal without idempotent generator";
      }
      auto chains = descending_chains(P, 4, 200);
      for (const auto& chain : chains) {
        std::vector<int> e(chain.size()), f(chain.size());
        for (size_t t = 0; t < chain.size(); ++t) {
          const PairClass& c = P.classes[chain[t]];
          e[t] = idem_gen[S.right_id(c.gen_first)];
          f[t] = idem_gen[S.right_id(c.gen_second)];
        }
        for (size_t i = 0; i < chain.size(); ++i)
          for (size_t j = i + 1; j < chain.size(); ++j)
            if (R.mul(e[i], e[j]) != e[j] || R.mul(f[i], f[j]) != f[j])
              return "idempotent witness recipe failed on a sampled chain";
      }
      return "";
    });

    run("annihilator_criterion_sampled_chains", [&]() -> std::string {
      auto chains = descending_chains(P, 4, 50);
      for (const auto& chain : chains) {
        WitnessedChain wc = witness_chain(S, P, chain);
        (void)annihilator_lower_bound_criterion(S, P, wc);  // asserts inside
      }
      return "";
    });
  }

  run("classification_routes_agree", [&]() -> std::string {
    ClassificationReport rep = classify_ring(S, P, caps);
    if (!rep.routes_agree) return "a predicate's routes disagree";
    return "";
  });

  run("implication_lattice", [&]() -> std::string {
    ClassificationReport rep = classify_ring(S, P, caps);
    if (!rep.implications_ok) {
      std::ostringstream os;
      os << "implication failures:";
      for (const auto& f : rep.implication_failures) os << " " << f << ";";
      return os.str();
    }
    return "";
  });

  run("implication_audit", [&]() -> std::string {
    ImplicationAudit audit = implication_audit(S, P, caps);
    if (audit.radical_intersection.failures)
      return "radical intersection law failed";
    if (audit.strict_descent.failures) return "strict descent law failed";
    for (const auto& rec : audit.implications)
      if (!rec.holds) return "implication failed: " + rec.name;
    return "";
  });

  return report;
}

}  // namespace ringlab
