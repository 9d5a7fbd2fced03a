#include <doctest.h>
#include <spinekit/cone.hpp>

#include <random>

#include "support/fixtures.hpp"
#include "support/fm_oracle.hpp"
#include "support/generators.hpp"

using namespace spinekit;
using namespace spinekit::cone;
using namespace spinekit::tests;

namespace {

StrictSystem from_rows(std::vector<std::vector<long>> rows) {
  StrictSystem s;
  for (std::size_t j = 0; j < rows[0].size(); ++j) s.variables.push_back("x" + std::to_string(j));
  for (auto& row : rows) {
    LinearForm f;
    for (long v : row) f.coeffs.push_back(make_rat(v));
    s.strict.push_back(std::move(f));
  }
  return s;
}

std::vector<Rat> rats(std::vector<long> values) {
  std::vector<Rat> out;
  for (long v : values) out.push_back(make_rat(v));
  return out;
}

}  // namespace

TEST_CASE("abalone cone has a witness; the textbook point verifies") {
  StrictSystem s = from_rows({{-1, 0}, {2, 1}});
  auto outcome = feasible_strict(s);
  REQUIRE(outcome.feasible());
  CHECK(verify_witness(s, outcome.witness()->x));

  // known element of the cone
  CHECK(verify_witness(s, rats({-1, 13})));
  // and a point outside it
  std::string why;
  CHECK(!verify_witness(s, rats({1, 1}), &why));
  CHECK(why.find("row 0") != std::string::npos);
}

TEST_CASE("witness of a homogeneous system is normalized to minimum row value 1") {
  StrictSystem s = from_rows({{-1, 0}, {2, 1}});
  auto outcome = feasible_strict(s);
  REQUIRE(outcome.feasible());
  const auto& x = outcome.witness()->x;
  Rat r1 = -x[0];
  Rat r2 = 2 * x[0] + x[1];
  Rat lo = r1 < r2 ? r1 : r2;
  CHECK(lo == 1);
}

TEST_CASE("opposite rows are infeasible with the half-half certificate") {
  StrictSystem s = from_rows({{1, -1}, {-1, 1}});
  auto outcome = feasible_strict(s);
  REQUIRE(!outcome.feasible());
  const auto* cert = outcome.certificate();
  REQUIRE(cert);
  CHECK(cert->strict_multipliers == std::vector<Rat>{make_rat(1, 2), make_rat(1, 2)});
  CHECK(cert->slack_multiplier == 0);
  CHECK(verify_certificate(s, *cert));
}

TEST_CASE("six-variable system accepts the known witness") {
  StrictSystem s = from_rows({
      {0, 0, 0, 0, 0, 1},
      {0, -1, -1, 0, 0, 0},
      {1, 1, 0, 0, 0, -1},
      {0, 1, 2, 1, 1, 1},
  });
  std::vector<Rat> known = rats({6, 1, -2, -1, -1, 6});
  CHECK(verify_witness(s, known));

  auto outcome = feasible_strict(s);
  REQUIRE(outcome.feasible());
  CHECK(verify_witness(s, outcome.witness()->x));
}

TEST_CASE("admissibility of the fixtures") {
  auto a = admissible(abalone());
  REQUIRE(a.feasible());
  CHECK(verify_witness(admissibility_system(abalone()), a.witness()->x));

  auto t = admissible(tangency_free());
  REQUIRE(t.feasible());
  CHECK(verify_witness(admissibility_system(tangency_free()), t.witness()->x));

  auto s = admissible(s1xs2());
  REQUIRE(!s.feasible());
  const auto* cert = s.certificate();
  REQUIRE(cert);
  // all weight on the identically-zero annulus row
  CHECK(cert->strict_multipliers == std::vector<Rat>{make_rat(0), make_rat(1)});
  CHECK(verify_certificate(admissibility_system(s1xs2()), *cert));
  REQUIRE(s.notes.size() == 1);
  CHECK(s.notes[0].find("identically zero") != std::string::npos);
}

TEST_CASE("scaling invariance of homogeneous witnesses") {
  StrictSystem s = admissibility_system(tangency_free());
  auto outcome = feasible_strict(s);
  REQUIRE(outcome.feasible());
  std::vector<Rat> scaled = outcome.witness()->x;
  for (Rat& v : scaled) v *= make_rat(7, 3);
  CHECK(verify_witness(s, scaled));
}

TEST_CASE("positive orthant probes") {
  auto a = positive_orthant_empty(abalone());
  CHECK(a.empty);
  REQUIRE(a.outcome.certificate());
  CHECK(verify_certificate([] {
          auto s = admissibility_system(abalone());
          for (std::size_t j = 0; j < s.variables.size(); ++j) s.sign_constraints[j] = 1;
          return s;
        }(),
        *a.outcome.certificate()));

  CHECK(positive_orthant_empty(tangency_free()).empty);
  CHECK(positive_orthant_empty(s1xs2()).empty);

  // identity-like case: two circle edges, each with one all-plus region word
  model::Spine id;
  id.name = "identity";
  id.edges = {{"c1", model::EdgeKind::circle, std::nullopt, std::nullopt},
              {"c2", model::EdgeKind::circle, std::nullopt, std::nullopt}};
  id.regions = {
      {"R1", 1, {{{"c1", 1}, {"c1", 1}, {"c1", -1}}}},
      {"R2", 1, {{{"c2", 1}, {"c2", 1}, {"c2", -1}}}},
  };
  REQUIRE(model::validate(id).ok());
  auto r = positive_orthant_empty(id);
  CHECK(!r.empty);
  REQUIRE(r.outcome.feasible());
  CHECK(r.outcome.witness()->x == rats({1, 1}));
}

TEST_CASE("all-negative pattern is infeasible on every valid spine") {
  std::mt19937 rng(911);
  std::vector<model::Spine> spines = {abalone(), tangency_free(), s1xs2()};
  for (int i = 0; i < 25; ++i) spines.push_back(random_spine(rng, 1 + static_cast<int>(rng() % 5)));
  for (const auto& spine : spines) {
    StrictSystem s = admissibility_system(spine);
    for (std::size_t j = 0; j < s.variables.size(); ++j) s.sign_constraints[j] = -1;
    auto outcome = feasible_strict(s);
    REQUIRE(!outcome.feasible());
    CHECK(verify_certificate(s, *outcome.certificate()));
  }
}

TEST_CASE("dimension mismatches are rejected") {
  StrictSystem s = from_rows({{1, 2}});
  s.strict[0].coeffs.pop_back();
  CHECK_THROWS_AS(feasible_strict(s), std::invalid_argument);

  StrictSystem t = from_rows({{1, 2}});
  t.sign_constraints[5] = 1;
  CHECK_THROWS_AS(feasible_strict(t), std::invalid_argument);
}

TEST_CASE("random homogeneous systems agree with the elimination oracle") {
  std::mt19937 rng(20240818);
  SystemOptions opt;
  for (int trial = 0; trial < 150; ++trial) {
    StrictSystem s = random_system(rng, opt);
    auto outcome = feasible_strict(s);
    bool oracle = fm_feasible(s);
    REQUIRE(outcome.feasible() == oracle);
    if (outcome.feasible()) {
      CHECK(verify_witness(s, outcome.witness()->x));
    } else {
      CHECK(verify_certificate(s, *outcome.certificate()));
    }
  }
}

TEST_CASE("random affine systems with equalities and signs agree with the oracle") {
  std::mt19937 rng(777001);
  SystemOptions opt;
  opt.affine = true;
  opt.with_signs = true;
  for (int trial = 0; trial < 150; ++trial) {
    StrictSystem s = random_system(rng, opt);
    auto outcome = feasible_strict(s);
    bool oracle = fm_feasible(s);
    REQUIRE(outcome.feasible() == oracle);
    if (outcome.feasible()) {
      CHECK(verify_witness(s, outcome.witness()->x));
    } else {
      CHECK(verify_certificate(s, *outcome.certificate()));
    }
  }
}

TEST_CASE("systems made infeasible by a negated-sum row always certify") {
  std::mt19937 rng(424242);
  SystemOptions opt;
  opt.max_equalities = 0;
  for (int trial = 0; trial < 100; ++trial) {
    StrictSystem s = random_system(rng, opt);
    LinearForm killer;
    killer.coeffs.assign(s.variables.size(), Rat(0));
    for (const LinearForm& f : s.strict) {
      for (std::size_t j = 0; j < f.coeffs.size(); ++j) killer.coeffs[j] -= f.coeffs[j];
    }
    s.strict.push_back(std::move(killer));
    // now the rows sum to zero, so no assignment makes them all positive
    auto outcome = feasible_strict(s);
    REQUIRE(!outcome.feasible());
    CHECK(verify_certificate(s, *outcome.certificate()));
  }
}
