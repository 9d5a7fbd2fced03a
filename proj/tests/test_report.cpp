#include <doctest.h>

#include <nlohmann/json.hpp>

#include <stdexcept>
#include <string>

#include <spinekit/model.hpp>
#include <spinekit/report.hpp>

#include "support/fixtures.hpp"

using namespace spinekit;
using json = nlohmann::json;

TEST_CASE("analysis of the abalone spine") {
  report::Analysis a = report::analyze(tests::abalone());
  std::string text = report::analysis_json(a);
  json j = json::parse(text);

  CHECK(j["name"] == "abalone");
  CHECK(j["validation"]["ok"] == true);
  CHECK(j["classification"]["circuits"] == 1);
  CHECK(j["classification"]["flow_spine"] == true);
  CHECK(j["classification"]["positive"] == true);
  CHECK(j["classification"]["circuit_edges"][0] == json::array({"e1", "e2"}));
  CHECK(j["preferred_regions"] == json::array({"R1"}));
  CHECK(j["incidence"]["rows"] == json::parse(R"([["-1","0"],["2","1"]])"));
  CHECK(j["incidence"]["column_sums"] == json::array({"1", "1"}));
  CHECK(j["admissibility"]["admissible"] == true);
  CHECK(j["admissibility"]["witness"].contains("e1"));
  CHECK(j["tangency_bound"]["lower"] == 2);
  CHECK(j["tangency_bound"]["reason"] == "preferred-region");
  CHECK(j["synthesis"]["direct"]["ok"] == true);
  CHECK(j["synthesis"]["minimal"]["ok"] == true);
  CHECK(j["synthesis"]["minimal"]["certificate"]["total_tangencies"] == 2);
  CHECK(j["synthesis"]["minimal"]["certificate"]["ledger"]["elliptic"] == 2);
  CHECK(j["synthesis"]["minimal"]["certificate"]["h_pieces"]["v1"] == "1+");

  // byte-identical on repeated analysis
  CHECK(report::analysis_json(report::analyze(tests::abalone())) == text);
}

TEST_CASE("analysis of an inadmissible spine") {
  report::Analysis a = report::analyze(tests::s1xs2());
  json j = json::parse(report::analysis_json(a));

  CHECK(j["classification"]["circuits"] == 1);  // one circle component
  CHECK(j["classification"]["flow_spine"] == true);
  CHECK(j["classification"]["positive"] == false);  // no true vertices
  CHECK(j["admissibility"]["admissible"] == false);
  CHECK(j["admissibility"]["certificate"]["strict"].contains("R1"));
  CHECK(j["admissibility"]["certificate"]["strict"].contains("R2"));
  std::string notes = j["admissibility"]["notes"].dump();
  CHECK(notes.find("identically zero") != std::string::npos);
  CHECK(j["synthesis"]["direct"]["ok"] == false);
  CHECK(j["synthesis"]["direct"].contains("inadmissible"));
  CHECK_FALSE(j["synthesis"]["direct"].contains("certificate"));
}

TEST_CASE("analysis stops at validation errors") {
  model::Spine sp = tests::abalone();
  sp.regions[1].boundary[0].pop_back();  // breaks wing count and column sum
  report::Analysis a = report::analyze(sp);
  json j = json::parse(report::analysis_json(a));

  CHECK(j["validation"]["ok"] == false);
  CHECK(j["validation"]["errors"].get<int>() > 0);
  CHECK_FALSE(j.contains("classification"));
  CHECK_FALSE(j.contains("admissibility"));
  CHECK_FALSE(j.contains("synthesis"));
}

TEST_CASE("standalone synthesis rendering") {
  model::Spine sp = tests::abalone();
  foliation::SynthesisResult res = foliation::synthesize_minimal(sp);
  std::string text = report::synthesis_json(sp, "minimal", res);
  json j = json::parse(text);
  CHECK(j["mode"] == "minimal");
  CHECK(j["ok"] == true);
  CHECK(j["certificate"]["tangency"]["e1"] == 2);
  CHECK(j["certificate"]["tangency"]["e2"] == 0);
  CHECK(j["certificate"]["witness"].contains("e2"));
  CHECK(j["certificate"]["passages"]["v1"]["1"] == "+");
  CHECK(report::synthesis_json(sp, "minimal", foliation::synthesize_minimal(sp)) == text);
}

TEST_CASE("dot export") {
  SUBCASE("single-circuit arcs share a color") {
    std::string dot = report::dot_export(tests::abalone());
    CHECK(dot.find("digraph \"abalone\"") != std::string::npos);
    CHECK(dot.find("\"v1\" [shape=circle") != std::string::npos);
    CHECK(dot.find("taillabel=\"out1\"") != std::string::npos);
    CHECK(dot.find("subgraph \"cluster_R1\"") != std::string::npos);
    CHECK(dot.find("label=\"e1-\"") != std::string::npos);  // R1's lone traversal
    // both arcs belong to the one circuit: first palette color, used twice
    std::size_t first = dot.find("#1b9e77");
    REQUIRE(first != std::string::npos);
    CHECK(dot.find("#1b9e77", first + 1) != std::string::npos);
    CHECK(dot.find("#d95f02") == std::string::npos);
  }
  SUBCASE("two circuits use two colors") {
    std::string dot = report::dot_export(tests::tangency_free());
    CHECK(dot.find("#1b9e77") != std::string::npos);
    CHECK(dot.find("#d95f02") != std::string::npos);
  }
  SUBCASE("circle edges become self-loops") {
    std::string dot = report::dot_export(tests::s1xs2());
    CHECK(dot.find("\"e1\" [shape=point]") != std::string::npos);
    CHECK(dot.find("\"e1\" -> \"e1\"") != std::string::npos);
  }
  SUBCASE("invalid spines are rejected") {
    model::Spine sp = tests::abalone();
    sp.edges[0].tail->vertex = "ghost";
    CHECK_THROWS_AS(report::dot_export(sp), model::ValidationError);
  }
}
