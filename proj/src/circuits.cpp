#include "spinekit/circuits.hpp"

#include <algorithm>

namespace spinekit::circuits {

using model::Edge;
using model::EdgeKind;
using model::Spine;
using model::SpineIndex;
using model::Vertex;
using model::VertexType;

std::vector<Circuit> trace_circuits(const SpineIndex& index) {
  const Spine& spine = index.spine();
  std::vector<Circuit> circuits;
  std::vector<bool> visited(spine.edges.size(), false);

  // Seed from each edge in input order; the canonical start of every circuit
  // is then automatically its lowest-index edge.
  for (std::size_t start = 0; start < spine.edges.size(); ++start) {
    if (visited[start]) continue;
    const Edge& first = spine.edges[start];
    if (first.kind == EdgeKind::circle) {
      visited[start] = true;
      circuits.push_back({{first.id}});
      continue;
    }
    Circuit circuit;
    std::size_t current = start;
    do {
      visited[current] = true;
      const Edge& e = spine.edges[current];
      circuit.edges.push_back(e.id);
      const Vertex& v = spine.vertices[index.vertex_index(e.head->vertex)];
      current = index.edge_at_tail(index.vertex_index(v.id), v.pairing.image(e.head->port));
    } while (current != start);
    circuits.push_back(std::move(circuit));
  }
  return circuits;
}

std::vector<Circuit> trace_circuits(const Spine& spine) {
  return trace_circuits(SpineIndex(spine));
}

SpineClass classify(const SpineIndex& index) {
  const Spine& spine = index.spine();
  SpineClass c;
  c.circuit_count = trace_circuits(index).size();
  c.is_flow_spine = c.circuit_count == 1;
  c.n_v = spine.vertices.size();
  c.m = spine.edges.size();
  bool all_l = std::all_of(spine.vertices.begin(), spine.vertices.end(),
                           [](const Vertex& v) { return v.vtype == VertexType::L; });
  bool all_r = std::all_of(spine.vertices.begin(), spine.vertices.end(),
                           [](const Vertex& v) { return v.vtype == VertexType::R; });
  c.is_positive = c.is_flow_spine && c.n_v >= 1 && all_l;
  c.is_negative = c.is_flow_spine && c.n_v >= 1 && all_r;
  return c;
}

SpineClass classify(const Spine& spine) { return classify(SpineIndex(spine)); }

}  // namespace spinekit::circuits
