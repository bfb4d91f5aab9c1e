#include "ringlab/export.hpp"

#include <sstream>

namespace ringlab {

using nlohmann::ordered_json;

namespace {

ordered_json ideal_json(int generator, const ElemSet& elems) {
  return ordered_json{{"generator", generator}, {"elements", elems.elements()}};
}

}  // namespace

ordered_json poset_to_json(const RingScans& S, const RcpPoset& P) {
  ordered_json out;
  out["ring"] = S.ring().label;
  out["size"] = S.ring().n;
  out["class_count"] = P.m();
  out["ideal_count"] = P.ideal_count;

  ordered_json classes = ordered_json::array();
  for (int i = 0; i < P.m(); ++i) {
    const PairClass& c = P.classes[i];
    classes.push_back(
        {{"index", i},
         {"first", ideal_json(c.gen_first, c.first_ideal.elems)},
         {"second", ideal_json(c.gen_second, c.second_ideal.elems)},
         {"minimal", P.is_minimal(i)}});
  }
  out["classes"] = std::move(classes);

  ordered_json le = ordered_json::array();
  for (int i = 0; i < P.m(); ++i)
    for (int j = 0; j < P.m(); ++j)
      if (i != j && P.le(i, j)) le.push_back({i, j});
  out["le"] = std::move(le);

  ordered_json covers = ordered_json::array();
  for (const auto& [lo, hi] : P.covers()) covers.push_back({lo, hi});
  out["covers"] = std::move(covers);
  out["minimal"] = P.minimal;
  return out;
}

std::string poset_to_dot(const RingScans&, const RcpPoset& P) {
  std::ostringstream os;
  os << "digraph rcp {\n";
  os << "  rankdir=BT;\n";
  os << "  node [shape=ellipse];\n";
  for (int i = 0; i < P.m(); ++i) {
    const PairClass& c = P.classes[i];
    os << "  n" << i << " [label=\"⟨" << c.gen_first << ","
       << c.gen_second << "⟩ |aR|=" << c.first_ideal.elems.count()
       << " |bR|=" << c.second_ideal.elems.count() << "\"";
    if (P.is_minimal(i)) os << ", peripheries=2";
    os << "];\n";
  }
  for (const auto& [lo, hi] : P.covers())
    os << "  n" << lo << " -> n" << hi << ";\n";
  os << "}\n";
  return os.str();
}

ordered_json classification_to_json(const ClassificationReport& r) {
  ordered_json out;
  out["ring"] = r.ring;
  out["size"] = r.size;
  out["class_count"] = r.class_count;
  out["minimal_class_count"] = r.minimal_class_count;

  ordered_json preds = ordered_json::object();
  for (const auto& [name, rep] : r.predicates) {
    ordered_json p;
    p["value"] = rep.value;
    ordered_json routes = ordered_json::object();
    for (const auto& [rname, rv] : rep.routes) routes[rname] = rv;
    p["routes"] = std::move(routes);
    p["agree"] = rep.agree;
    p["witnesses"] = rep.witnesses;
    p["notes"] = rep.notes;
    preds[name] = std::move(p);
  }
  out["predicates"] = std::move(preds);
  out["routes_agree"] = r.routes_agree;
  out["implications_ok"] = r.implications_ok;
  out["implication_failures"] = r.implication_failures;

  ordered_json trace = ordered_json::object();
  for (const auto& [name, text] : predicate_traceability()) trace[name] = text;
  out["traceability"] = std::move(trace);
  return out;
}

ordered_json chain_to_json(const RingScans& S, const RcpPoset& P,
                           const WitnessedChain& c) {
  ordered_json out;
  out["classes"] = c.classes;
  ordered_json gens = ordered_json::array();
  for (const auto& [a, b] : c.generators) gens.push_back({a, b});
  out["generators"] = std::move(gens);
  ordered_json steps = ordered_json::array();
  for (const auto& [r, s] : c.steps) steps.push_back({r, s});
  out["steps"] = std::move(steps);
  ordered_json comps = ordered_json::array();
  for (const auto& e : c.composites)
    comps.push_back({{"from", e[0]}, {"to", e[1]}, {"r", e[2]}, {"s", e[3]}});
  out["composites"] = std::move(comps);

  out["lower_bounds"] = lower_bounds(S, P, c);
  auto mlb = minimal_lower_bound(S, P, c);
  if (mlb)
    out["minimal_lower_bound"] = *mlb;
  else
    out["minimal_lower_bound"] = nullptr;
  if (S.all_regular()) {
    AnnihilatorCriterion crit = annihilator_lower_bound_criterion(S, P, c);
    ordered_json cj;
    cj["holds"] = crit.holds;
    if (crit.witness)
      cj["witness"] = {(*crit.witness)[0], (*crit.witness)[1]};
    else
      cj["witness"] = nullptr;
    out["annihilator_criterion"] = std::move(cj);
  }
  return out;
}

ordered_json implication_audit_to_json(const ImplicationAudit& a) {
  ordered_json out;
  ordered_json imps = ordered_json::array();
  for (const auto& rec : a.implications)
    imps.push_back({{"name", rec.name},
                    {"premise", rec.premise},
                    {"conclusion", rec.conclusion},
                    {"holds", rec.holds}});
  out["implications"] = std::move(imps);
  auto stats = [](const PairLawStats& s) {
    ordered_json j;
    j["pairs_checked"] = s.pairs_checked;
    j["applicable"] = s.applicable;
    j["failures"] = s.failures;
    j["first_failure"] = s.first_failure;
    return j;
  };
  out["radical_intersection"] = stats(a.radical_intersection);
  out["strict_descent"] = stats(a.strict_descent);
  out["ok"] = a.ok;
  return out;
}

ordered_json property_report_to_json(const PropertyReport& r) {
  ordered_json out;
  out["ok"] = r.ok;
  ordered_json checks = ordered_json::array();
  for (const auto& c : r.checks)
    checks.push_back(
        {{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  out["checks"] = std::move(checks);
  return out;
}

}  // namespace ringlab
