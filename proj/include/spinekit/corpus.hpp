#ifndef SPINEKIT_CORPUS_HPP
#define SPINEKIT_CORPUS_HPP

// Bundled example documents, embedded at build time from corpus/*.json.
// Each entry keeps the raw JSON text; run_entry() re-derives every result a
// document records in its "expected" block and reports the mismatches.

#include <string>
#include <utility>
#include <vector>

namespace spinekit::corpus {

struct Entry {
  std::string name;  // file name without the .spine.json suffix
  std::string text;  // raw JSON document
};

const std::vector<Entry>& entries();

// nullptr when no bundled document has that name.
const Entry* find(const std::string& name);

// One re-run of a bundled document: parse, validate, then recompute each
// recorded expectation. `failures` is empty when everything matched.
struct RunOutcome {
  std::string name;
  std::vector<std::string> failures;

  bool passed() const { return failures.empty(); }
};

RunOutcome run_entry(const Entry& entry);

// Every bundled document, in listing order. Documents are independent and
// checked concurrently; the returned order is deterministic regardless.
std::vector<RunOutcome> run_all();

namespace detail {
// Generated at build time from the corpus directory.
const std::vector<std::pair<std::string, std::string>>& raw_documents();
}  // namespace detail

}  // namespace spinekit::corpus

#endif
