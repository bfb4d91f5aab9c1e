#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "ringlab/chains.hpp"
#include "ringlab/ring_spec.hpp"

using namespace ringlab;

namespace {

FiniteRing ring_of(const RingSpec& spec) { return build(spec, BuildCaps{}); }

struct Fixture {
  FiniteRing R;
  RingScans S;
  RcpPoset P;
  explicit Fixture(const RingSpec& spec)
      : R(build(spec, BuildCaps{})), S(R), P(enumerate_rcp(S)) {}
};

}  // namespace

TEST_CASE("witnessing a two-step chain in zmod(6)") {
  Fixture F(RingSpec::zmod(6));
  // <1,1> at index 2, <2,3> at index 6
  WitnessedChain c = witness_chain(F.S, F.P, {2, 6});
  CHECK(c.generators == std::vector<std::array<int, 2>>{{1, 1}, {2, 3}});
  REQUIRE(c.steps.size() == 1);
  CHECK(c.steps[0] == std::array<int, 2>{2, 3});
  REQUIRE(c.composites.size() == 1);
  CHECK(c.composites[0] == std::array<int, 4>{0, 1, 2, 3});
}

TEST_CASE("composites take products along the chain") {
  Fixture F(RingSpec::zmod(6));
  // <1,1> > <2,1> > <0,1>
  WitnessedChain c = witness_chain(F.S, F.P, {2, 5, 0});
  CHECK(c.generators ==
        std::vector<std::array<int, 2>>{{1, 1}, {2, 1}, {0, 1}});
  CHECK(c.steps == std::vector<std::array<int, 2>>{{2, 1}, {0, 1}});
  for (const auto& [i, j, r, s] : c.composites) {
    CHECK(F.R.mul(c.generators[i][0], r) == c.generators[j][0]);
    CHECK(F.R.mul(c.generators[i][1], s) == c.generators[j][1]);
  }
  // the (0,2) composite is the product of the step witnesses
  bool found = false;
  for (const auto& comp : c.composites)
    if (comp[0] == 0 && comp[1] == 2) {
      CHECK(comp[2] == F.R.mul(2, 0));
      CHECK(comp[3] == F.R.mul(1, 1));
      found = true;
    }
  CHECK(found);
}

TEST_CASE("witness_chain rejects non-descending input") {
  Fixture F(RingSpec::zmod(6));
  CHECK_THROWS_AS(witness_chain(F.S, F.P, {6, 2}), NotDescending);
}

TEST_CASE("lower bounds and their coprimality law") {
  Fixture F(RingSpec::zmod(6));
  WitnessedChain c = witness_chain(F.S, F.P, {2, 6});
  CHECK(lower_bounds(F.S, F.P, c) == std::vector<int>{6});
  CHECK(minimal_lower_bound(F.S, F.P, c) == 6);

  WitnessedChain top = witness_chain(F.S, F.P, {2});
  CHECK(int(lower_bounds(F.S, F.P, top).size()) == F.P.m());
  CHECK(minimal_lower_bound(F.S, F.P, top) == 0);
}

TEST_CASE("annihilator criterion on a regular ring") {
  Fixture F(RingSpec::zmod(6));
  WitnessedChain c = witness_chain(F.S, F.P, {2, 6});
  AnnihilatorCriterion ac = annihilator_lower_bound_criterion(F.S, F.P, c);
  CHECK(ac.holds);
  REQUIRE(ac.witness.has_value());
  CHECK(*ac.witness == std::array<int, 2>{2, 3});
}

TEST_CASE("annihilator criterion refuses non-regular rings") {
  Fixture F(RingSpec::zmod(4));
  WitnessedChain c = witness_chain(F.S, F.P, {2});
  CHECK_THROWS_AS(annihilator_lower_bound_criterion(F.S, F.P, c),
                  NotVonNeumannRegular);
}

TEST_CASE("a three-step chain in zmod(12)") {
  Fixture F(RingSpec::zmod(12));
  int top = F.P.class_of(F.S, 1, 1);
  int mid = F.P.class_of(F.S, 2, 3);
  int low = F.P.class_of(F.S, 4, 3);
  REQUIRE(top >= 0);
  REQUIRE(mid >= 0);
  REQUIRE(low >= 0);
  CHECK(F.P.lt(low, mid));
  CHECK(F.P.lt(mid, top));
  WitnessedChain c = witness_chain(F.S, F.P, {top, mid, low});
  CHECK(c.steps == std::vector<std::array<int, 2>>{{2, 3}, {2, 1}});
  CHECK(F.P.is_minimal(low));
  CHECK(minimal_lower_bound(F.S, F.P, c) == low);
}

TEST_CASE("non-strict chain enumeration is exact and ordered") {
  Fixture F(RingSpec::zmod(6));
  auto chains = descending_chains(F.P, 2, size_t(1) << 30);
  // recount: every index is a length-1 chain, every le pair a length-2 chain
  int pairs = 0;
  for (int i = 0; i < F.P.m(); ++i)
    for (int j = 0; j < F.P.m(); ++j)
      if (F.P.le(j, i)) ++pairs;
  CHECK(int(chains.size()) == F.P.m() + pairs);
  for (const auto& ch : chains)
    for (size_t t = 1; t < ch.size(); ++t) CHECK(F.P.le(ch[t], ch[t - 1]));
  // the target caps output
  CHECK(descending_chains(F.P, 8, 10).size() == 10);
}

TEST_CASE("strict chains and greedy maximal descents") {
  Fixture F(RingSpec::zmod(6));
  auto strict = strict_descending_chains(F.P, 4);
  CHECK(int(strict.size()) >= F.P.m());
  for (const auto& ch : strict)
    for (size_t t = 1; t < ch.size(); ++t) CHECK(F.P.lt(ch[t], ch[t - 1]));

  auto greedy = greedy_maximal_chains(F.P);
  REQUIRE(int(greedy.size()) == F.P.m());
  CHECK(greedy[2] == std::vector<int>{2, 0});
  CHECK(greedy[6] == std::vector<int>{6});
  for (const auto& ch : greedy) CHECK(F.P.is_minimal(ch.back()));
}

TEST_CASE("the strong-exchange audit on zmod(6)") {
  Fixture F(RingSpec::zmod(6));
  StrongExchangeAudit a = strongly_exchange_audit(F.S, F.P);
  CHECK(a.value);
  CHECK(a.classes_without_minimal == 0);
  CHECK(a.greedy_chains == 9);
  CHECK(a.longest_strict_chain == 3);
  CHECK(a.sampled_chains_ok);
}

TEST_CASE("idempotent generators along regular-ring chains compose") {
  FiniteRing R = ring_of(RingSpec::zmod(6));
  RingScans S(R);
  RcpPoset P = enumerate_rcp(S);
  // descending right ideals pick idempotent generators e with eR = A, and
  // e_i * e_j = e_j whenever A_j <= A_i
  WitnessedChain c = witness_chain(S, P, {2, 6});
  std::vector<int> ea, eb;
  for (auto [a, b] : c.generators) {
    int found_a = -1, found_b = -1;
    for (int e : S.idempotent_list()) {
      if (found_a < 0 && S.right_ideal_of(e) == S.right_ideal_of(a)) found_a = e;
      if (found_b < 0 && S.right_ideal_of(e) == S.right_ideal_of(b)) found_b = e;
    }
    REQUIRE(found_a >= 0);
    REQUIRE(found_b >= 0);
    ea.push_back(found_a);
    eb.push_back(found_b);
  }
  for (size_t i = 0; i < ea.size(); ++i)
    for (size_t j = i + 1; j < ea.size(); ++j) {
      CHECK(R.mul(ea[i], ea[j]) == ea[j]);
      CHECK(R.mul(eb[i], eb[j]) == eb[j]);
    }
}
