#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <vector>

#include "ringlab/classify.hpp"
#include "ringlab/ring_spec.hpp"

using namespace ringlab;

namespace {

struct Fixture {
  FiniteRing R;
  RingScans S;
  RcpPoset P;
  ClassificationReport rep;
  explicit Fixture(const RingSpec& spec)
      : R(build(spec, BuildCaps{})),
        S(R),
        P(enumerate_rcp(S)),
        rep(classify_ring(S, P, AnalysisCaps{})) {}
};

const RouteReport& pred(const ClassificationReport& rep,
                        const std::string& name) {
  for (const auto& [n, r] : rep.predicates)
    if (n == name) return r;
  REQUIRE(false);
  static RouteReport dummy;
  return dummy;
}

bool value(const ClassificationReport& rep, const std::string& name) {
  return pred(rep, name).value;
}

}  // namespace

TEST_CASE("zmod(4) is local but not semisimple") {
  Fixture F(RingSpec::zmod(4));
  CHECK(F.rep.routes_agree);
  CHECK(F.rep.implications_ok);
  CHECK(value(F.rep, "local"));
  for (const auto& [name, v] : pred(F.rep, "local").routes) CHECK(v);
  CHECK(value(F.rep, "indecomposable"));
  CHECK(!value(F.rep, "vn_regular"));
  CHECK(!value(F.rep, "semisimple"));
  CHECK(value(F.rep, "exchange"));
  CHECK(value(F.rep, "clean"));
  CHECK(value(F.rep, "quasi_duo"));
  CHECK(value(F.rep, "perfect_dcc"));
  CHECK(value(F.rep, "continuous_c1"));
  CHECK(value(F.rep, "continuous_c2"));
  CHECK(value(F.rep, "continuous_c3"));
  CHECK(pred(F.rep, "continuous_c1").witnesses["left_ideal_count"] == 3);
}

TEST_CASE("zmod(6) is regular, semisimple, not local") {
  Fixture F(RingSpec::zmod(6));
  CHECK(F.rep.class_count == 9);
  CHECK(F.rep.minimal_class_count == 4);
  CHECK(F.rep.routes_agree);
  CHECK(F.rep.implications_ok);
  CHECK(!value(F.rep, "local"));
  CHECK(!value(F.rep, "indecomposable"));
  CHECK(value(F.rep, "vn_regular"));
  CHECK(value(F.rep, "semisimple"));
  CHECK(value(F.rep, "semiperfect"));
  CHECK(value(F.rep, "semiregular"));
  CHECK(value(F.rep, "strongly_exchange"));
  CHECK(value(F.rep, "quasi_duo"));
  CHECK(value(F.rep, "continuous_c1"));
  CHECK(value(F.rep, "continuous_c2"));
  CHECK(value(F.rep, "continuous_c3"));
  CHECK(value(F.rep, "continuous_mod_radical"));

  // 3 = 4 + 5 with 4 idempotent and 5 a unit, and no earlier idempotent works
  const auto& clean = pred(F.rep, "clean").witnesses["decompositions"];
  CHECK(clean[3][0] == 4);
  CHECK(clean[3][1] == 5);
  // the first exchange idempotent for r = 2 is e = 0
  CHECK(pred(F.rep, "exchange").witnesses["idempotents"][2] == 0);
}

TEST_CASE("upper triangular 2x2 over F2: continuity splits") {
  Fixture F(RingSpec::upper_triangular(2, RingSpec::zmod(2)));
  CHECK(F.rep.routes_agree);
  CHECK(F.rep.implications_ok);
  CHECK(!value(F.rep, "local"));
  CHECK(!value(F.rep, "vn_regular"));
  CHECK(value(F.rep, "semiperfect"));
  CHECK(value(F.rep, "quasi_duo"));
  CHECK(value(F.rep, "exchange"));
  // the left socle sits inside non-summand ideals: C1 holds, C2 and C3 fail
  CHECK(value(F.rep, "continuous_c1"));
  CHECK(!value(F.rep, "continuous_c2"));
  CHECK(!value(F.rep, "continuous_c3"));
  CHECK(pred(F.rep, "continuous_c1").witnesses["left_ideal_count"] == 7);
  // modulo the radical the ring is a product of fields, so both conditions
  // hold there
  CHECK(value(F.rep, "continuous_mod_radical"));
  CHECK(pred(F.rep, "continuous_mod_radical").witnesses["quotient_c3"] == true);
}

TEST_CASE("full 2x2 matrices over F2 are regular but not quasi-duo") {
  Fixture F(RingSpec::matrix(2, RingSpec::zmod(2)));
  CHECK(F.rep.routes_agree);
  CHECK(F.rep.implications_ok);
  CHECK(value(F.rep, "vn_regular"));
  CHECK(value(F.rep, "semisimple"));
  CHECK(!value(F.rep, "local"));
  CHECK(!value(F.rep, "indecomposable"));
  REQUIRE(!value(F.rep, "quasi_duo"));
  const auto& w = pred(F.rep, "quasi_duo").witnesses["left_coprime_not_right"];
  int a = w[0].get<int>(), b = w[1].get<int>();
  // the reported pair really is left coprime but not right coprime
  CHECK(F.S.left_pair_sum(F.S.left_id(a), F.S.left_id(b)).is_full());
  CHECK(!F.S.right_coprime_elems(a, b));
}

TEST_CASE("full 2x2 matrices over Z4 are semiperfect, not semisimple") {
  Fixture F(RingSpec::matrix(2, RingSpec::zmod(4)));
  CHECK(F.rep.routes_agree);
  CHECK(F.rep.implications_ok);
  CHECK(value(F.rep, "semiperfect"));
  CHECK(value(F.rep, "semiregular"));
  CHECK(!value(F.rep, "semisimple"));
  CHECK(!value(F.rep, "vn_regular"));
  CHECK(value(F.rep, "exchange"));
  CHECK(!value(F.rep, "quasi_duo"));
  CHECK(pred(F.rep, "perfect_dcc").witnesses["radical_nilpotency_index"] == 2);
}

TEST_CASE("the zero ring classifies without crashing") {
  Fixture F(RingSpec::zmod(1));
  CHECK(F.rep.routes_agree);
  CHECK(F.rep.implications_ok);
  CHECK(!value(F.rep, "local"));
  CHECK(value(F.rep, "vn_regular"));
  CHECK(value(F.rep, "semisimple"));
  bool noted = false;
  for (const auto& note : pred(F.rep, "local").notes)
    if (note.find("zero ring") != std::string::npos) noted = true;
  CHECK(noted);
}

TEST_CASE("predicate list and traceability stay in sync") {
  Fixture F(RingSpec::zmod(6));
  std::vector<std::string> expect = {
      "local",       "indecomposable", "vn_regular",
      "exchange",    "strongly_exchange", "semiregular",
      "semiperfect", "semisimple",     "clean",
      "quasi_duo",   "perfect_dcc",    "continuous_c1",
      "continuous_c2", "continuous_c3", "continuous_mod_radical"};
  REQUIRE(F.rep.predicates.size() == expect.size());
  for (size_t i = 0; i < expect.size(); ++i)
    CHECK(F.rep.predicates[i].first == expect[i]);
  const auto& trace = predicate_traceability();
  REQUIRE(trace.size() == expect.size());
  for (size_t i = 0; i < expect.size(); ++i) {
    CHECK(trace[i].first == expect[i]);
    CHECK(!trace[i].second.empty());
  }
}

TEST_CASE("left ideal enumeration respects its cap") {
  FiniteRing R = build(RingSpec::zmod(12), BuildCaps{});
  RingScans S(R);
  CHECK_THROWS_AS(enumerate_left_ideals(S, 3), IdealEnumerationCapExceeded);
  CHECK(enumerate_left_ideals(S, 4096).size() == 6);
}

TEST_CASE("implication audit holds and exercises both pair laws") {
  for (int n : {4, 6, 12}) {
    FiniteRing R = build(RingSpec::zmod(n), BuildCaps{});
    RingScans S(R);
    RcpPoset P = enumerate_rcp(S);
    ImplicationAudit a = implication_audit(S, P, AnalysisCaps{});
    CHECK(a.ok);
    CHECK(a.radical_intersection.failures == 0);
    CHECK(a.strict_descent.failures == 0);
    CHECK(a.strict_descent.applicable > 0);
    for (const auto& imp : a.implications) CHECK(imp.holds);
    CHECK(a.implications.size() == 4);
  }
  // a ring with a nonzero radical makes the radical-intersection law
  // non-vacuous
  FiniteRing R = build(RingSpec::zmod(4), BuildCaps{});
  RingScans S(R);
  RcpPoset P = enumerate_rcp(S);
  ImplicationAudit a = implication_audit(S, P, AnalysisCaps{});
  CHECK(a.radical_intersection.applicable > 0);
}

TEST_CASE("c-condition checker on a semisimple ring") {
  FiniteRing R = build(RingSpec::matrix(2, RingSpec::zmod(2)), BuildCaps{});
  RingScans S(R);
  CConditionReport cc = check_c_conditions(S, AnalysisCaps{});
  CHECK(cc.c1);
  CHECK(cc.c2);
  CHECK(cc.c3);
}
