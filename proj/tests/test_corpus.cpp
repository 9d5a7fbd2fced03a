#include <doctest.h>

#include <string>
#include <vector>

#include <spinekit/corpus.hpp>
#include <spinekit/document.hpp>
#include <spinekit/model.hpp>

#include "support/fixtures.hpp"

using namespace spinekit;

namespace {

document::SpineDocument parse_entry(const corpus::Entry& entry) {
  document::ParseResult parsed = document::parse(entry.text);
  REQUIRE_MESSAGE(parsed.ok(), "corpus document '", entry.name, "' failed to parse");
  return *parsed.document;
}

}  // namespace

TEST_CASE("the bundled corpus lists its documents in name order") {
  std::vector<std::string> names;
  for (const corpus::Entry& e : corpus::entries()) names.push_back(e.name);
  CHECK(names == std::vector<std::string>{"abalone", "invalid-port-usage",
                                          "invalid-wing-count", "s1xs2", "tangency-free"});

  const corpus::Entry* hit = corpus::find("s1xs2");
  REQUIRE(hit != nullptr);
  CHECK(hit->name == "s1xs2");
  CHECK(corpus::find("poincare") == nullptr);
}

TEST_CASE("each corpus document parses to its code fixture") {
  CHECK(parse_entry(*corpus::find("abalone")).spine == tests::abalone());
  CHECK(parse_entry(*corpus::find("tangency-free")).spine == tests::tangency_free());
  CHECK(parse_entry(*corpus::find("s1xs2")).spine == tests::s1xs2());
}

TEST_CASE("corpus documents survive a serialize/parse round trip") {
  for (const corpus::Entry& e : corpus::entries()) {
    CAPTURE(e.name);
    document::SpineDocument doc = parse_entry(e);
    document::ParseResult again = document::parse(document::serialize(doc));
    REQUIRE(again.ok());
    CHECK(*again.document == doc);
  }
}

TEST_CASE("boundary-sign column sums are 1 on every valid corpus spine") {
  for (const corpus::Entry& e : corpus::entries()) {
    CAPTURE(e.name);
    document::SpineDocument doc = parse_entry(e);
    if (!model::validate(doc.spine).ok()) continue;
    for (long sum : model::incidence_matrix(doc.spine).column_sums()) CHECK(sum == 1);
  }
}

TEST_CASE("every recorded expectation recomputes cleanly") {
  std::vector<corpus::RunOutcome> outcomes = corpus::run_all();
  REQUIRE(outcomes.size() == corpus::entries().size());
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    CAPTURE(outcomes[i].name);
    CHECK(outcomes[i].name == corpus::entries()[i].name);
    for (const std::string& f : outcomes[i].failures) CAPTURE(f);
    CHECK(outcomes[i].passed());
  }
}

TEST_CASE("run_entry reports doctored expectations instead of passing them") {
  const corpus::Entry* abalone = corpus::find("abalone");
  REQUIRE(abalone != nullptr);

  corpus::Entry doctored = *abalone;
  std::string::size_type at = doctored.text.find("\"minimal_tangencies\": 2");
  REQUIRE(at != std::string::npos);
  doctored.text.replace(at, std::string("\"minimal_tangencies\": 2").size(),
                        "\"minimal_tangencies\": 6");

  corpus::RunOutcome outcome = corpus::run_entry(doctored);
  REQUIRE(outcome.failures.size() == 1);
  CHECK(outcome.failures[0].find("minimal_tangencies") != std::string::npos);
  CHECK(outcome.failures[0].find("expected 6") != std::string::npos);

  corpus::Entry broken = *abalone;
  broken.text.insert(broken.text.find("\"name\""), "\"flavour\": 3, ");
  corpus::RunOutcome parse_fail = corpus::run_entry(broken);
  REQUIRE(!parse_fail.passed());
  CHECK(parse_fail.failures[0].find("parse:") == 0);
}
