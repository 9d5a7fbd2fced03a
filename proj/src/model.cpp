#include "spinekit/model.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace spinekit::model {

const char* in_port_name(InPort p) { return p == InPort::in1 ? "in1" : "in2"; }
const char* out_port_name(OutPort p) { return p == OutPort::out1 ? "out1" : "out2"; }

std::optional<InPort> in_port_from_name(const std::string& name) {
  if (name == "in1") return InPort::in1;
  if (name == "in2") return InPort::in2;
  return std::nullopt;
}

std::optional<OutPort> out_port_from_name(const std::string& name) {
  if (name == "out1") return OutPort::out1;
  if (name == "out2") return OutPort::out2;
  return std::nullopt;
}

bool operator==(const Vertex& a, const Vertex& b) {
  return a.id == b.id && a.vtype == b.vtype && a.pairing.from_in1 == b.pairing.from_in1 &&
         a.pairing.from_in2 == b.pairing.from_in2;
}

bool operator==(const Edge& a, const Edge& b) {
  return a.id == b.id && a.kind == b.kind && a.tail == b.tail && a.head == b.head;
}

bool operator==(const Region& a, const Region& b) {
  return a.id == b.id && a.euler_char == b.euler_char && a.boundary == b.boundary;
}

bool operator==(const Spine& a, const Spine& b) {
  return a.name == b.name && a.vertices == b.vertices && a.edges == b.edges &&
         a.regions == b.regions;
}

bool ValidationReport::ok() const { return error_count() == 0; }

std::size_t ValidationReport::error_count() const {
  return static_cast<std::size_t>(std::count_if(
      violations.begin(), violations.end(),
      [](const Violation& v) { return v.severity == Severity::error; }));
}

std::size_t ValidationReport::warning_count() const {
  return violations.size() - error_count();
}

long euler_characteristic(const Spine& spine) {
  long arcs = static_cast<long>(std::count_if(
      spine.edges.begin(), spine.edges.end(),
      [](const Edge& e) { return e.kind == EdgeKind::arc; }));
  long chi = static_cast<long>(spine.vertices.size()) - arcs;
  for (const Region& r : spine.regions) chi += r.euler_char;
  return chi;
}

namespace {

void add(ValidationReport& report, Severity sev, std::string invariant,
         std::string element, std::string message) {
  report.violations.push_back(
      {sev, std::move(invariant), std::move(element), std::move(message)});
}

}  // namespace

ValidationReport validate(const Spine& spine) {
  ValidationReport report;

  std::set<std::string> vertex_ids;
  for (const Vertex& v : spine.vertices) {
    if (!vertex_ids.insert(v.id).second) {
      add(report, Severity::error, "duplicate-id", v.id,
          "vertex id '" + v.id + "' declared more than once");
    }
    if (!v.pairing.bijective()) {
      add(report, Severity::error, "vertex-pairing-bijection", v.id,
          "vertex '" + v.id + "' pairing maps both in-ports to " +
              out_port_name(v.pairing.from_in1));
    }
  }

  std::set<std::string> edge_ids;
  // (vertex, port) -> how many edge endpoints claim it; ports are named
  // strings "in1".."out2" for reporting.
  std::map<std::pair<std::string, std::string>, int> port_use;
  for (const Edge& e : spine.edges) {
    if (!edge_ids.insert(e.id).second) {
      add(report, Severity::error, "duplicate-id", e.id,
          "edge id '" + e.id + "' declared more than once");
    }
    if (e.kind == EdgeKind::arc) {
      if (!e.tail || !e.head) {
        add(report, Severity::error, "edge-endpoints", e.id,
            "arc edge '" + e.id + "' must carry both tail and head");
      }
    } else {
      if (e.tail || e.head) {
        add(report, Severity::error, "edge-endpoints", e.id,
            "circle edge '" + e.id + "' must not carry endpoints");
      }
    }
    if (e.tail) {
      if (!vertex_ids.count(e.tail->vertex)) {
        add(report, Severity::error, "unknown-vertex-ref", e.id,
            "edge '" + e.id + "' tail references unknown vertex '" + e.tail->vertex + "'");
      } else {
        port_use[{e.tail->vertex, out_port_name(e.tail->port)}]++;
      }
    }
    if (e.head) {
      if (!vertex_ids.count(e.head->vertex)) {
        add(report, Severity::error, "unknown-vertex-ref", e.id,
            "edge '" + e.id + "' head references unknown vertex '" + e.head->vertex + "'");
      } else {
        port_use[{e.head->vertex, in_port_name(e.head->port)}]++;
      }
    }
  }

  for (const Vertex& v : spine.vertices) {
    for (const char* port : {"in1", "in2", "out1", "out2"}) {
      int uses = 0;
      auto it = port_use.find({v.id, port});
      if (it != port_use.end()) uses = it->second;
      if (uses != 1) {
        std::ostringstream msg;
        msg << "vertex '" << v.id << "' port " << port << " referenced by " << uses
            << " edge endpoints, expected exactly 1";
        add(report, Severity::error, "port-usage", v.id, msg.str());
      }
    }
  }

  std::set<std::string> region_ids;
  std::map<std::string, int> wing_count;
  std::map<std::string, long> column_sum;
  for (const Region& r : spine.regions) {
    if (!region_ids.insert(r.id).second) {
      add(report, Severity::error, "duplicate-id", r.id,
          "region id '" + r.id + "' declared more than once");
    }
    if (r.boundary.empty()) {
      add(report, Severity::error, "region-boundary-nonempty", r.id,
          "region '" + r.id + "' has no boundary circuits");
    }
    for (const BoundaryCircuit& circuit : r.boundary) {
      if (circuit.empty()) {
        add(report, Severity::error, "region-boundary-nonempty", r.id,
            "region '" + r.id + "' has an empty boundary circuit");
      }
      for (const Traversal& t : circuit) {
        if (!edge_ids.count(t.edge)) {
          add(report, Severity::error, "unknown-edge-ref", r.id,
              "region '" + r.id + "' traverses unknown edge '" + t.edge + "'");
          continue;
        }
        if (t.sign != 1 && t.sign != -1) {
          add(report, Severity::error, "traversal-sign", r.id,
              "region '" + r.id + "' traversal of '" + t.edge + "' has sign " +
                  std::to_string(t.sign));
          continue;
        }
        wing_count[t.edge]++;
        column_sum[t.edge] += t.sign;
      }
    }
  }

  for (const Edge& e : spine.edges) {
    int wings = wing_count.count(e.id) ? wing_count[e.id] : 0;
    if (wings != 3) {
      std::ostringstream msg;
      msg << "edge " << e.id << " traversed " << wings << " times != 3";
      add(report, Severity::error, "edge-wing-count", e.id, msg.str());
    } else {
      long sum = column_sum[e.id];
      if (sum != 1) {
        std::ostringstream msg;
        msg << "edge " << e.id << " has boundary-sign sum " << sum << " != 1";
        add(report, Severity::error, "edge-column-sum", e.id, msg.str());
      }
    }
  }

  long chi = euler_characteristic(spine);
  if (chi != 1) {
    std::ostringstream msg;
    msg << "chi(P) = " << chi << " != 1; not a spine of a closed 3-manifold";
    add(report, Severity::warning, "euler-characteristic", spine.name, msg.str());
  }

  return report;
}

namespace {

std::string describe_violations(const ValidationReport& report) {
  std::ostringstream out;
  out << "spine fails validation:";
  for (const Violation& v : report.violations) {
    if (v.severity == Severity::error) out << " [" << v.invariant << "] " << v.message << ";";
  }
  return out.str();
}

}  // namespace

ValidationError::ValidationError(const ValidationReport& r)
    : std::runtime_error(describe_violations(r)), report(r) {}

IncidenceMatrix incidence_matrix(const Spine& spine) {
  ValidationReport report = validate(spine);
  if (!report.ok()) throw ValidationError(report);

  IncidenceMatrix m;
  std::map<std::string, std::size_t> col_of;
  for (const Edge& e : spine.edges) {
    col_of[e.id] = m.cols.size();
    m.cols.push_back(e.id);
  }
  for (const Region& r : spine.regions) {
    m.rows.push_back(r.id);
    std::vector<long> row(m.cols.size(), 0);
    for (const BoundaryCircuit& circuit : r.boundary) {
      for (const Traversal& t : circuit) row[col_of[t.edge]] += t.sign;
    }
    m.entries.push_back(std::move(row));
  }
  return m;
}

std::vector<long> IncidenceMatrix::column_sums() const {
  std::vector<long> sums(cols.size(), 0);
  for (const auto& row : entries) {
    for (std::size_t j = 0; j < row.size(); ++j) sums[j] += row[j];
  }
  return sums;
}

SpineIndex::SpineIndex(const Spine& spine) : spine_(&spine) {
  ValidationReport report = validate(spine);
  if (!report.ok()) throw ValidationError(report);

  for (std::size_t i = 0; i < spine.vertices.size(); ++i) vertex_by_id_[spine.vertices[i].id] = i;
  for (std::size_t i = 0; i < spine.edges.size(); ++i) edge_by_id_[spine.edges[i].id] = i;
  for (std::size_t i = 0; i < spine.regions.size(); ++i) region_by_id_[spine.regions[i].id] = i;

  tail_edge_out1_.assign(spine.vertices.size(), std::nullopt);
  tail_edge_out2_.assign(spine.vertices.size(), std::nullopt);
  for (std::size_t i = 0; i < spine.edges.size(); ++i) {
    const Edge& e = spine.edges[i];
    if (!e.tail) continue;
    std::size_t v = vertex_by_id_.at(e.tail->vertex);
    (e.tail->port == OutPort::out1 ? tail_edge_out1_ : tail_edge_out2_)[v] = i;
  }
}

std::size_t SpineIndex::vertex_index(const std::string& id) const { return vertex_by_id_.at(id); }
std::size_t SpineIndex::edge_index(const std::string& id) const { return edge_by_id_.at(id); }
std::size_t SpineIndex::region_index(const std::string& id) const { return region_by_id_.at(id); }

std::size_t SpineIndex::edge_at_tail(std::size_t vertex, OutPort port) const {
  const auto& slot = (port == OutPort::out1 ? tail_edge_out1_ : tail_edge_out2_)[vertex];
  if (!slot) {
    throw std::logic_error("internal inconsistency: no edge tail on vertex out-port");
  }
  return *slot;
}

int SpineIndex::tail_passage(const Edge& edge) const {
  const Vertex& v = spine_->vertices[vertex_index(edge.tail->vertex)];
  return v.pairing.from_in1 == edge.tail->port ? 1 : 2;
}

int SpineIndex::head_passage(const Edge& edge) const {
  return edge.head->port == InPort::in1 ? 1 : 2;
}

}  // namespace spinekit::model
