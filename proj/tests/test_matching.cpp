#include <doctest.h>

#include <random>

#include "generators.hpp"
#include "threading/matching.hpp"
#include "threading/oracle.hpp"

using namespace threading;

namespace {

MatchingInstance four_cycle() {
  MatchingInstance inst;
  for (int i = 0; i < 4; ++i) inst.add_node("n" + std::to_string(i));
  inst.add_edge(0, 1, Rational(1));
  inst.add_edge(1, 2, Rational(2));
  inst.add_edge(2, 3, Rational(1));
  inst.add_edge(3, 0, Rational(2));
  return inst;
}

MatchingInstance k4_unit() {
  MatchingInstance inst;
  for (int i = 0; i < 4; ++i) inst.add_node("n" + std::to_string(i));
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b) inst.add_edge(a, b, Rational(1));
  return inst;
}

}  // namespace

TEST_CASE("4-cycle min and max") {
  auto inst = four_cycle();
  auto mn = min_weight_perfect_matching(inst);
  REQUIRE(mn.has_value());
  CHECK(mn->weight == Rational(2));
  CHECK(mn->pairs == std::vector<std::pair<int, int>>{{0, 1}, {2, 3}});
  auto mx = max_weight_perfect_matching(inst);
  REQUIRE(mx.has_value());
  CHECK(mx->weight == Rational(4));
  CHECK(mx->pairs == std::vector<std::pair<int, int>>{{0, 3}, {1, 2}});
}

TEST_CASE("odd node count is infeasible") {
  MatchingInstance inst;
  for (int i = 0; i < 3; ++i) inst.add_node("n" + std::to_string(i));
  inst.add_edge(0, 1, Rational(1));
  inst.add_edge(1, 2, Rational(1));
  inst.add_edge(0, 2, Rational(1));
  CHECK_FALSE(min_weight_perfect_matching(inst).has_value());
}

TEST_CASE("structural infeasibility") {
  MatchingInstance inst;  // star K_{1,3}: no perfect matching
  for (int i = 0; i < 4; ++i) inst.add_node("n" + std::to_string(i));
  for (int i = 1; i < 4; ++i) inst.add_edge(0, i, Rational(1));
  CHECK_FALSE(min_weight_perfect_matching(inst).has_value());
}

TEST_CASE("empty instance has the empty perfect matching") {
  MatchingInstance inst;
  auto sol = min_weight_perfect_matching(inst);
  REQUIRE(sol.has_value());
  CHECK(sol->pairs.empty());
  CHECK(sol->weight == Rational(0));
}

TEST_CASE("K4 unit weights: weight 2, deterministic tie-break") {
  auto first = min_weight_perfect_matching(k4_unit());
  REQUIRE(first.has_value());
  CHECK(first->weight == Rational(2));
  for (int repeat = 0; repeat < 3; ++repeat) {
    auto again = min_weight_perfect_matching(k4_unit());
    REQUIRE(again.has_value());
    CHECK(again->pairs == first->pairs);
  }
}

TEST_CASE("negative and fractional weights are exact") {
  MatchingInstance inst;
  for (int i = 0; i < 4; ++i) inst.add_node("n" + std::to_string(i));
  inst.add_edge(0, 1, Rational(-3, 7));
  inst.add_edge(2, 3, Rational(5, 3));
  inst.add_edge(0, 2, Rational(1, 2));
  inst.add_edge(1, 3, Rational(1, 2));
  auto mn = min_weight_perfect_matching(inst);
  REQUIRE(mn.has_value());
  CHECK(mn->weight == Rational(1));  // 1/2 + 1/2 beats -3/7 + 5/3 = 26/21
  auto mx = max_weight_perfect_matching(inst);
  REQUIRE(mx.has_value());
  CHECK(mx->weight == Rational(26, 21));
}

TEST_CASE("max equals negated min") {
  std::mt19937 rng(555);
  for (int t = 0; t < 50; ++t) {
    MatchingInstance inst = generators::random_matching_instance(rng);
    MatchingInstance negated;
    for (const auto& label : inst.labels()) negated.add_node(label);
    for (const auto& e : inst.edges()) negated.add_edge(e.a, e.b, -e.weight);
    auto mx = max_weight_perfect_matching(inst);
    auto mn = min_weight_perfect_matching(negated);
    CHECK(mx.has_value() == mn.has_value());
    if (mx) CHECK(mx->weight == -mn->weight);
  }
}

TEST_CASE("duplicate edges rejected") {
  MatchingInstance inst;
  inst.add_node("a");
  inst.add_node("b");
  inst.add_edge(0, 1, Rational(1));
  inst.add_edge(1, 0, Rational(2));
  CHECK_THROWS_AS(min_weight_perfect_matching(inst), std::invalid_argument);
}

TEST_CASE("oracle equivalence and dual certificates on 500 seeded instances") {
  std::mt19937 rng(20240817);
  int feasible = 0;
  for (int t = 0; t < 500; ++t) {
    MatchingInstance inst = generators::random_matching_instance(rng);
    auto reference = oracle_matchings(inst);
    for (Objective obj : {Objective::Minimize, Objective::Maximize}) {
      auto sol = solve_perfect_matching(inst, obj);
      REQUIRE(sol.has_value() == reference.feasible);
      if (!sol) continue;
      CHECK(sol->weight ==
            (obj == Objective::Minimize ? reference.min_weight : reference.max_weight));
      CHECK(verify_matching_certificate(inst, obj, *sol));
    }
    feasible += reference.feasible;
  }
  CHECK(feasible > 100);  // the sample actually exercises the solver
}

TEST_CASE("certificate checker rejects tampered duals") {
  auto inst = four_cycle();
  auto sol = min_weight_perfect_matching(inst);
  REQUIRE(sol.has_value());
  REQUIRE(verify_matching_certificate(inst, Objective::Minimize, *sol));
  MatchingSolution tampered = *sol;
  tampered.node_duals[0] += Rational(1);
  CHECK_FALSE(verify_matching_certificate(inst, Objective::Minimize, tampered));
  MatchingSolution wrong_weight = *sol;
  wrong_weight.weight += Rational(1);
  CHECK_FALSE(verify_matching_certificate(inst, Objective::Minimize, wrong_weight));
}
