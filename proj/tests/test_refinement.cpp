#include <doctest.h>

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <spinekit/cone.hpp>
#include <spinekit/rational.hpp>
#include <spinekit/refinement.hpp>

using namespace spinekit;
using refinement::Constraint;
using refinement::RefinementSystem;

namespace {

std::vector<Rat> rats(std::initializer_list<long> values) {
  std::vector<Rat> out;
  for (long v : values) out.push_back(make_rat(v));
  return out;
}

// Splits the abalone spine's two edge weights across fifteen boundary arcs,
// three per side of the pentagonal disk; the inequalities demand a positive
// sum around every corner of the subdivision.
RefinementSystem abalone_split() {
  RefinementSystem sys;
  sys.name = "abalone-split";
  for (int i = 1; i <= 15; ++i) sys.variables.push_back("A" + std::to_string(i));
  sys.edge_weights = {{"e1", make_rat(-1)}, {"e2", make_rat(13)}};

  auto group = [&](const char* a, const char* b, const char* c, const char* edge, int sign) {
    Constraint eq;
    eq.var_coeffs = {{a, make_rat(1)}, {b, make_rat(1)}, {c, make_rat(1)}};
    eq.weight_coeffs = {{edge, make_rat(-sign)}};
    sys.equalities.push_back(eq);
  };
  group("A1", "A2", "A3", "e2", 1);
  group("A4", "A5", "A6", "e1", 1);
  group("A7", "A8", "A9", "e2", -1);
  group("A10", "A11", "A12", "e1", 1);
  group("A13", "A14", "A15", "e2", 1);
  // the middle side is traversed twice, with matching pieces
  for (const auto& [a, b] : {std::pair{"A4", "A10"}, {"A5", "A11"}, {"A6", "A12"}}) {
    Constraint eq;
    eq.var_coeffs = {{a, make_rat(1)}, {b, make_rat(-1)}};
    sys.equalities.push_back(eq);
  }

  auto corner = [&](std::initializer_list<const char*> names) {
    Constraint ineq;
    for (const char* n : names) ineq.var_coeffs[n] = make_rat(1);
    sys.inequalities.push_back(ineq);
  };
  corner({"A15", "A1", "A8"});
  corner({"A2", "A5"});
  corner({"A3"});
  corner({"A4"});
  corner({"A6", "A7"});
  corner({"A9", "A10"});
  corner({"A11", "A14"});
  corner({"A12"});
  corner({"A13"});

  sys.expected_solution = rats({6, 6, 1, 2, -5, 2, -1, -11, -1, 2, -5, 2, 1, 6, 6});
  return sys;
}

// Splits two of the tangency-free spine's weights in half; the corner sums
// mix split pieces with whole edge weights.
RefinementSystem tangency_free_split() {
  RefinementSystem sys;
  sys.name = "tangency-free-split";
  for (int i = 1; i <= 8; ++i) sys.variables.push_back("A" + std::to_string(i));
  sys.edge_weights = {{"e1", make_rat(6)},  {"e2", make_rat(1)},  {"e3", make_rat(-2)},
                      {"e4", make_rat(-1)}, {"e5", make_rat(-1)}, {"e6", make_rat(6)}};

  auto split = [&](const char* a, const char* b, const char* edge) {
    Constraint eq;
    eq.var_coeffs = {{a, make_rat(1)}, {b, make_rat(1)}};
    eq.weight_coeffs = {{edge, make_rat(-1)}};
    sys.equalities.push_back(eq);
  };
  split("A1", "A2", "e1");
  split("A5", "A6", "e1");
  split("A3", "A4", "e6");
  split("A7", "A8", "e6");

  auto corner = [&](std::map<std::string, Rat> vars, std::map<std::string, Rat> weights) {
    Constraint ineq;
    ineq.var_coeffs = std::move(vars);
    ineq.weight_coeffs = std::move(weights);
    sys.inequalities.push_back(ineq);
  };
  corner({{"A1", make_rat(1)}}, {{"e5", make_rat(1)}});
  corner({{"A2", make_rat(1)}, {"A4", make_rat(-1)}}, {{"e2", make_rat(1)}});
  corner({{"A3", make_rat(-1)}}, {{"e5", make_rat(-1)}});
  corner({{"A5", make_rat(-1)}},
         {{"e1", make_rat(1)}, {"e4", make_rat(1)}, {"e5", make_rat(1)}, {"e3", make_rat(1)}});
  corner({{"A6", make_rat(-1)}, {"A8", make_rat(1)}}, {{"e4", make_rat(-1)}, {"e2", make_rat(1)}});
  corner({{"A7", make_rat(1)}}, {{"e3", make_rat(1)}, {"e4", make_rat(1)}});

  sys.expected_solution = {make_rat(8, 5),  make_rat(22, 5), make_rat(4, 5), make_rat(26, 5),
                           make_rat(3, 2),  make_rat(9, 2),  make_rat(16, 5), make_rat(14, 5)};
  return sys;
}

}  // namespace

TEST_CASE("fifteen-piece split of the abalone weights") {
  RefinementSystem sys = abalone_split();

  cone::StrictSystem lowered = refinement::lower(sys);
  CHECK(lowered.variables.size() == 15);
  CHECK(lowered.strict.size() == 9);
  CHECK(lowered.equalities.size() == 8);
  // weight parameters land in the constants: A7+A8+A9+E2 = 0 has constant 13
  CHECK(lowered.equalities[2].constant == make_rat(13));

  std::string why;
  CHECK(refinement::verify_solution(sys, *sys.expected_solution, &why));
  CHECK(why.empty());

  cone::FeasibilityOutcome outcome = refinement::solve_refinement(sys);
  REQUIRE(outcome.feasible());
  CHECK(refinement::verify_solution(sys, outcome.witness()->x));
}

TEST_CASE("eight-piece split of the tangency-free weights") {
  RefinementSystem sys = tangency_free_split();

  CHECK(refinement::verify_solution(sys, *sys.expected_solution));

  cone::FeasibilityOutcome outcome = refinement::solve_refinement(sys);
  REQUIRE(outcome.feasible());
  CHECK(refinement::verify_solution(sys, outcome.witness()->x));
}

TEST_CASE("rejected solutions name the failing row") {
  RefinementSystem sys = tangency_free_split();
  std::vector<Rat> values = *sys.expected_solution;
  values[2] = make_rat(2);  // breaks A3+A4 = E6 and pushes -E5-A3 below zero
  std::string why;
  CHECK_FALSE(refinement::verify_solution(sys, values, &why));
  CHECK(why.find("row") != std::string::npos);

  CHECK_FALSE(refinement::verify_solution(sys, rats({1, 2, 3}), &why));
  CHECK(why == "witness has wrong dimension");
}

TEST_CASE("an over-constrained system yields a checkable certificate") {
  RefinementSystem sys;
  sys.name = "pinched";
  sys.variables = {"A1", "A2"};
  Constraint eq;  // A1 = 0
  eq.var_coeffs = {{"A1", make_rat(1)}};
  sys.equalities.push_back(eq);
  Constraint pos;  // A1 > 0
  pos.var_coeffs = {{"A1", make_rat(1)}};
  sys.inequalities.push_back(pos);

  cone::FeasibilityOutcome outcome = refinement::solve_refinement(sys);
  REQUIRE_FALSE(outcome.feasible());
  REQUIRE(outcome.certificate() != nullptr);
  CHECK(cone::verify_certificate(refinement::lower(sys), *outcome.certificate()));
}

TEST_CASE("lowering rejects malformed systems") {
  SUBCASE("undeclared variable") {
    RefinementSystem sys;
    sys.variables = {"A1"};
    Constraint ineq;
    ineq.var_coeffs = {{"A9", make_rat(1)}};
    sys.inequalities.push_back(ineq);
    CHECK_THROWS_WITH_AS(refinement::lower(sys), doctest::Contains("undeclared variable"),
                         std::invalid_argument);
  }
  SUBCASE("unbound edge weight") {
    RefinementSystem sys;
    sys.variables = {"A1"};
    Constraint ineq;
    ineq.var_coeffs = {{"A1", make_rat(1)}};
    ineq.weight_coeffs = {{"e7", make_rat(1)}};
    sys.inequalities.push_back(ineq);
    CHECK_THROWS_WITH_AS(refinement::lower(sys), doctest::Contains("not bound"),
                         std::invalid_argument);
  }
  SUBCASE("duplicate variable") {
    RefinementSystem sys;
    sys.variables = {"A1", "A1"};
    CHECK_THROWS_WITH_AS(refinement::lower(sys), doctest::Contains("declared twice"),
                         std::invalid_argument);
  }
}

TEST_CASE("refinement systems scale with their weights") {
  RefinementSystem sys = tangency_free_split();
  Rat scale = make_rat(3, 7);
  for (auto& [edge, value] : sys.edge_weights) value *= scale;
  std::vector<Rat> values = *sys.expected_solution;
  for (Rat& v : values) v *= scale;
  CHECK(refinement::verify_solution(sys, values));
}
