#include <spinekit/corpus.hpp>

#include <future>
#include <set>
#include <sstream>

#include <spinekit/circuits.hpp>
#include <spinekit/cone.hpp>
#include <spinekit/document.hpp>
#include <spinekit/foliation.hpp>
#include <spinekit/model.hpp>
#include <spinekit/refinement.hpp>

namespace spinekit::corpus {

const std::vector<Entry>& entries() {
  static const std::vector<Entry> all = [] {
    std::vector<Entry> out;
    for (const auto& [name, text] : detail::raw_documents()) out.push_back({name, text});
    return out;
  }();
  return all;
}

const Entry* find(const std::string& name) {
  for (const Entry& e : entries())
    if (e.name == name) return &e;
  return nullptr;
}

namespace {

std::string brace_list(const std::set<std::string>& items) {
  std::string out = "{";
  bool first = true;
  for (const std::string& s : items) {
    if (!first) out += ", ";
    out += s;
    first = false;
  }
  return out + "}";
}

}  // namespace

RunOutcome run_entry(const Entry& entry) {
  RunOutcome out{entry.name, {}};
  auto fail = [&out](std::string message) { out.failures.push_back(std::move(message)); };

  document::ParseResult parsed = document::parse(entry.text);
  if (!parsed.ok()) {
    for (const document::ParseIssue& issue : parsed.issues)
      fail("parse: " + issue.where + ": " + issue.message);
    return out;
  }
  const document::SpineDocument& doc = *parsed.document;
  const document::ExpectedResults want =
      doc.expected.value_or(document::ExpectedResults{});

  model::ValidationReport report = model::validate(doc.spine);
  if (want.valid && report.ok() != *want.valid) {
    std::ostringstream os;
    os << "valid: expected " << (*want.valid ? "true" : "false") << ", got "
       << (report.ok() ? "true" : "false");
    fail(os.str());
  }
  if (want.violations) {
    std::set<std::string> got;
    for (const model::Violation& v : report.violations)
      if (v.severity == model::Severity::error) got.insert(v.invariant);
    std::set<std::string> expected(want.violations->begin(), want.violations->end());
    if (got != expected)
      fail("violations: expected " + brace_list(expected) + ", got " + brace_list(got));
  }
  if (!report.ok()) return out;  // nothing further is defined on an invalid spine

  // recorded refinement solutions must check out, and each system must be
  // solvable from scratch
  for (const refinement::RefinementSystem& sys : doc.refinements) {
    if (sys.expected_solution) {
      std::string why;
      if (!refinement::verify_solution(sys, *sys.expected_solution, &why))
        fail("refinement '" + sys.name + "': recorded solution rejected: " + why);
    }
    cone::FeasibilityOutcome solved = refinement::solve_refinement(sys);
    if (!solved.feasible()) {
      fail("refinement '" + sys.name + "': solver found no solution");
    } else {
      std::string why;
      if (!cone::verify_witness(refinement::lower(sys), solved.witness()->x, &why))
        fail("refinement '" + sys.name + "': solver witness rejected: " + why);
    }
  }

  circuits::SpineClass cls = circuits::classify(doc.spine);
  if (want.circuits && static_cast<long>(cls.circuit_count) != *want.circuits) {
    std::ostringstream os;
    os << "circuits: expected " << *want.circuits << ", got " << cls.circuit_count;
    fail(os.str());
  }
  if (want.flow_spine && cls.is_flow_spine != *want.flow_spine) {
    std::ostringstream os;
    os << "flow_spine: expected " << (*want.flow_spine ? "true" : "false") << ", got "
       << (cls.is_flow_spine ? "true" : "false");
    fail(os.str());
  }

  cone::StrictSystem system = cone::admissibility_system(doc.spine);
  cone::FeasibilityOutcome outcome = cone::admissible(doc.spine);
  if (want.admissible && outcome.feasible() != *want.admissible) {
    std::ostringstream os;
    os << "admissible: expected " << (*want.admissible ? "true" : "false") << ", got "
       << (outcome.feasible() ? "true" : "false");
    fail(os.str());
  }
  {
    // solver outputs are re-verified by substitution whatever the expectations say
    std::string why;
    if (const cone::Witness* w = outcome.witness()) {
      if (!cone::verify_witness(system, w->x, &why)) fail("solver witness rejected: " + why);
    } else if (const cone::InfeasibilityCertificate* c = outcome.certificate()) {
      if (!cone::verify_certificate(system, *c, &why))
        fail("solver infeasibility certificate rejected: " + why);
    }
  }
  if (want.witness) {
    std::string why;
    if (!cone::verify_witness(system, *want.witness, &why))
      fail("recorded witness rejected: " + why);
  }

  if (want.preferred_regions) {
    std::vector<std::string> got = foliation::preferred_regions(doc.spine);
    if (got != *want.preferred_regions) {
      std::set<std::string> g(got.begin(), got.end());
      std::set<std::string> e(want.preferred_regions->begin(), want.preferred_regions->end());
      fail("preferred_regions: expected " + brace_list(e) + ", got " + brace_list(g));
    }
  }

  if (want.minimal_tangencies) {
    foliation::SynthesisResult minimal = foliation::synthesize_minimal(doc.spine);
    if (!minimal.ok()) {
      fail("minimal_tangencies: synthesis found no certificate");
    } else {
      long got = minimal.certificate->total_tangencies();
      if (got != *want.minimal_tangencies) {
        std::ostringstream os;
        os << "minimal_tangencies: expected " << *want.minimal_tangencies << ", got " << got;
        fail(os.str());
      }
      if (!foliation::verify_certificate(doc.spine, *minimal.certificate).ok())
        fail("minimal_tangencies: synthesized certificate failed verification");
    }
  }

  return out;
}

std::vector<RunOutcome> run_all() {
  const std::vector<Entry>& all = entries();
  std::vector<std::future<RunOutcome>> jobs;
  jobs.reserve(all.size());
  for (const Entry& e : all)
    jobs.push_back(std::async(std::launch::async, [&e] { return run_entry(e); }));
  std::vector<RunOutcome> out;
  out.reserve(jobs.size());
  for (auto& job : jobs) out.push_back(job.get());
  return out;
}

}  // namespace spinekit::corpus
