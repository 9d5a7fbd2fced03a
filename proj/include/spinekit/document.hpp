#ifndef SPINEKIT_DOCUMENT_HPP
#define SPINEKIT_DOCUMENT_HPP

#include <optional>
#include <string>
#include <vector>

#include "spinekit/model.hpp"
#include "spinekit/rational.hpp"
#include "spinekit/refinement.hpp"

namespace spinekit::document {

// Self-test data a corpus document may carry; `corpus run` recomputes each
// present field and compares.
struct ExpectedResults {
  std::optional<bool> valid;
  std::optional<std::vector<std::string>> violations;  // distinct error codes
  std::optional<long> circuits;
  std::optional<bool> flow_spine;
  std::optional<bool> admissible;
  std::optional<std::vector<Rat>> witness;  // known-good weights, re-verified
  std::optional<long> minimal_tangencies;
  std::optional<std::vector<std::string>> preferred_regions;

  bool operator==(const ExpectedResults&) const = default;
};

// A spine plus optional refinement systems and expected results.
struct SpineDocument {
  model::Spine spine;
  std::vector<std::string> notes;
  std::vector<refinement::RefinementSystem> refinements;
  std::optional<ExpectedResults> expected;

  bool operator==(const SpineDocument&) const = default;
};

struct ParseIssue {
  std::string where;  // "line 3, column 14" or a JSON path like /edges[1]/tail
  std::string message;
};

// Either a document or a list of located issues, never both.
struct ParseResult {
  std::optional<SpineDocument> document;
  std::vector<ParseIssue> issues;

  bool ok() const { return document.has_value(); }
};

// Strict reader: unknown fields, wrong types, malformed rationals, duplicate
// ids and dangling references are all reported with locations. "comment"
// fields are allowed anywhere and skipped.
ParseResult parse(const std::string& text);

// Deterministic writer: fixed key order, sorted maps, canonical rationals
// (lowest terms, positive denominator), two-space indent, trailing newline.
// parse(serialize(doc)) reproduces `doc` exactly.
std::string serialize(const SpineDocument& doc);

}  // namespace spinekit::document

#endif
