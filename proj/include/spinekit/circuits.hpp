#ifndef SPINEKIT_CIRCUITS_HPP
#define SPINEKIT_CIRCUITS_HPP

#include <string>
#include <vector>

#include "spinekit/model.hpp"

namespace spinekit::circuits {

// One immersed circle of the singular set. Arc edges are listed in traversal
// order (each edge tail->head, continuing through the strand pairing at its
// head vertex); a circle edge forms a singleton circuit. Canonical form:
// starts at the edge that appears earliest in the spine's edge list.
struct Circuit {
  std::vector<std::string> edges;
  bool operator==(const Circuit&) const = default;
};

struct SpineClass {
  std::size_t circuit_count = 0;
  bool is_flow_spine = false;
  bool is_positive = false;
  bool is_negative = false;
  std::size_t n_v = 0;  // vertices
  std::size_t m = 0;    // edges (triple lines)
};

// Partition of all edges into circuits. Circuits are ordered by their first
// (canonical) edge's position in the spine's edge list, so the result is
// deterministic and independent of any traversal starting choice.
// Throws model::ValidationError on spines with error-level violations.
std::vector<Circuit> trace_circuits(const model::Spine& spine);
std::vector<Circuit> trace_circuits(const model::SpineIndex& index);

SpineClass classify(const model::Spine& spine);
SpineClass classify(const model::SpineIndex& index);

}  // namespace spinekit::circuits

#endif
