#ifndef SPINEKIT_REPORT_HPP
#define SPINEKIT_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include "spinekit/circuits.hpp"
#include "spinekit/cone.hpp"
#include "spinekit/foliation.hpp"
#include "spinekit/model.hpp"

namespace spinekit::report {

// Everything the analyzer can say about one spine. When validation finds
// errors, only `validation` is populated; the other stages need a valid
// encoding to be meaningful.
struct Analysis {
  model::Spine spine;  // the subject, kept for id-aligned rendering
  model::ValidationReport validation;
  std::optional<circuits::SpineClass> classification;
  std::vector<circuits::Circuit> circuit_list;
  std::vector<std::string> preferred;
  std::optional<model::IncidenceMatrix> incidence;
  std::optional<cone::FeasibilityOutcome> admissibility;
  std::optional<foliation::TangencyBound> bound;
  std::optional<foliation::SynthesisResult> direct;
  std::optional<foliation::SynthesisResult> minimal;
};

Analysis analyze(const model::Spine& spine,
                 std::optional<long> minimize_budget = std::nullopt);

// Machine-readable renderings. All deterministic: fixed key order, canonical
// rationals as "p/q" strings, byte-identical across repeated runs.
std::string analysis_json(const Analysis& analysis);
std::string synthesis_json(const model::Spine& spine, const std::string& mode,
                           const foliation::SynthesisResult& result);

// The admissibility witness / infeasibility certificate alone, rendered the
// same way they appear inside analysis_json.
std::string witness_json(const model::Spine& spine, const cone::Witness& witness);
std::string infeasibility_json(const model::Spine& spine,
                               const cone::InfeasibilityCertificate& certificate);

// GraphViz view: vertices as nodes, arc edges as directed edges labeled with
// their ports, circle edges as self-loops, every edge colored by its circuit,
// and one cluster per region chaining its boundary traversals.
std::string dot_export(const model::Spine& spine);

}  // namespace spinekit::report

#endif
