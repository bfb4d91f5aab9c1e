#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "ringlab/chains.hpp"

namespace ringlab {

struct AnalysisCaps {
  int full_analysis = 512;
  int arithmetic_only = 65536;
  int ideal_enumeration = 4096;
};

// One ring-class predicate evaluated by every route it defines. The routes
// must agree; `witnesses` carries route-specific evidence for audits.
struct RouteReport {
  bool value = false;
  std::vector<std::pair<std::string, bool>> routes;
  bool agree = true;
  nlohmann::ordered_json witnesses = nlohmann::ordered_json::object();
  std::vector<std::string> notes;
};

struct ClassificationReport {
  std::string ring;
  int size = 0;
  int class_count = 0;
  int minimal_class_count = 0;
  std::vector<std::pair<std::string, RouteReport>> predicates;
  bool routes_agree = true;       // every predicate's routes agree
  bool implications_ok = true;    // the implication lattice below holds
  std::vector<std::string> implication_failures;
};

// All left ideals of R (closure of the principal left ideals under sums).
// Throws IdealEnumerationCapExceeded.
std::vector<ElemSet> enumerate_left_ideals(const RingScans& S, int cap);
std::vector<ElemSet> enumerate_right_ideals(const RingScans& S, int cap);

struct CConditionReport {
  bool c1 = false;  // every left ideal essential in a direct summand of R R
  bool c2 = false;  // left ideals isomorphic to a summand are summands
  bool c3 = false;  // summands with zero intersection sum to a summand
  int left_ideal_count = 0;
};
CConditionReport check_c_conditions(const RingScans& S, const AnalysisCaps& caps);

// Individual predicates. Each returns a RouteReport listing its routes.
RouteReport is_local(const RingScans& S, const RcpPoset& P);
RouteReport is_indecomposable(const RingScans& S, const RcpPoset& P);
RouteReport is_vn_regular(const RingScans& S, const RcpPoset& P);
RouteReport is_exchange(const RingScans& S, const RcpPoset& P);
RouteReport is_strongly_exchange(const RingScans& S, const RcpPoset& P);
RouteReport is_semiregular(const RingScans& S);
RouteReport is_semiperfect(const RingScans& S);
RouteReport is_semisimple(const RingScans& S);
RouteReport is_clean(const RingScans& S);
RouteReport is_quasi_duo(const RingScans& S, const AnalysisCaps& caps);
RouteReport perfect_dcc(const RingScans& S, const RcpPoset& P);

// The full report: every predicate above plus the continuity conditions on
// the left module R R, and the same conditions for R modulo its radical.
ClassificationReport classify_ring(const RingScans& S, const RcpPoset& P,
                                   const AnalysisCaps& caps);

// Plain-language description of what each predicate's routes check,
// keyed like the predicates list.
const std::vector<std::pair<std::string, std::string>>& predicate_traceability();

// Implication audit over the ring: premises and conclusions are evaluated
// independently and each implication is checked, together with the two
// pairwise laws:
//   radical_intersection: every coprime pair with aR ^ bR inside the radical
//     keeps (aR + J) ^ (bR + J) inside the radical;
//   strict_descent: every coprime pair with aR ^ bR not inside the radical
//     yields, by direct search, a strictly smaller coprime pair sharing a
//     generator.
struct ImplicationRecord {
  std::string name;
  bool premise = false;
  bool conclusion = false;
  bool holds = true;  // premise -> conclusion
};
struct PairLawStats {
  long long pairs_checked = 0;
  long long applicable = 0;
  long long failures = 0;
  nlohmann::ordered_json first_failure = nlohmann::ordered_json::object();
};
struct ImplicationAudit {
  std::vector<ImplicationRecord> implications;
  PairLawStats radical_intersection;
  PairLawStats strict_descent;
  bool ok = true;
};
ImplicationAudit implication_audit(const RingScans& S, const RcpPoset& P,
                                   const AnalysisCaps& caps);

}  // namespace ringlab
