#ifndef SPINEKIT_MODEL_HPP
#define SPINEKIT_MODEL_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace spinekit::model {

// In-ports receive strand heads, out-ports emit strand tails. Every vertex
// of the singular set has exactly two of each (two strands cross there).
enum class InPort { in1, in2 };
enum class OutPort { out1, out2 };

enum class VertexType { L, R };

enum class EdgeKind { arc, circle };

const char* in_port_name(InPort p);
const char* out_port_name(OutPort p);
std::optional<InPort> in_port_from_name(const std::string& name);
std::optional<OutPort> out_port_from_name(const std::string& name);

// Strand pairing at a vertex: which out-port each in-port continues to.
struct Pairing {
  OutPort from_in1 = OutPort::out1;
  OutPort from_in2 = OutPort::out2;

  bool bijective() const { return from_in1 != from_in2; }
  OutPort image(InPort p) const { return p == InPort::in1 ? from_in1 : from_in2; }
};

struct Vertex {
  std::string id;
  VertexType vtype = VertexType::L;
  Pairing pairing;
};

struct TailRef {
  std::string vertex;
  OutPort port = OutPort::out1;
  bool operator==(const TailRef&) const = default;
};

struct HeadRef {
  std::string vertex;
  InPort port = InPort::in1;
  bool operator==(const HeadRef&) const = default;
};

// A triple line. Arcs run tail -> head; circles have no endpoints.
struct Edge {
  std::string id;
  EdgeKind kind = EdgeKind::arc;
  std::optional<TailRef> tail;
  std::optional<HeadRef> head;
};

// One pass of a region boundary along an edge; sign +1 when the traversal
// direction agrees with the edge orientation.
struct Traversal {
  std::string edge;
  int sign = 1;
  bool operator==(const Traversal&) const = default;
};

using BoundaryCircuit = std::vector<Traversal>;

struct Region {
  std::string id;
  int euler_char = 1;
  std::vector<BoundaryCircuit> boundary;
};

struct Spine {
  std::string name;
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
  std::vector<Region> regions;
};

bool operator==(const Vertex& a, const Vertex& b);
bool operator==(const Edge& a, const Edge& b);
bool operator==(const Region& a, const Region& b);
bool operator==(const Spine& a, const Spine& b);

enum class Severity { error, warning };

struct Violation {
  Severity severity = Severity::error;
  std::string invariant;  // stable code, e.g. "edge-wing-count"
  std::string element;    // offending vertex/edge/region id
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const;     // no error-level violations (warnings allowed)
  bool clean() const { return violations.empty(); }
  std::size_t error_count() const;
  std::size_t warning_count() const;
};

// Structural validation. Violations are data, not failures; chi(P) != 1 is
// reported as a warning only.
ValidationReport validate(const Spine& spine);

// |vertices| - |arc edges| + sum of region Euler characteristics.
long euler_characteristic(const Spine& spine);

struct IncidenceMatrix {
  std::vector<std::string> rows;  // region ids, input order
  std::vector<std::string> cols;  // edge ids, input order
  std::vector<std::vector<long>> entries;

  long entry(std::size_t r, std::size_t c) const { return entries[r][c]; }
  std::vector<long> column_sums() const;
};

struct ValidationError : std::runtime_error {
  explicit ValidationError(const ValidationReport& report);
  ValidationReport report;
};

// Signed traversal counts c_ij per region/edge. Throws ValidationError if the
// spine has error-level violations.
IncidenceMatrix incidence_matrix(const Spine& spine);

// Lookup tables over a structurally sound spine. Operations that walk the
// strand structure build one once; construction throws ValidationError on
// spines with error-level violations.
class SpineIndex {
 public:
  explicit SpineIndex(const Spine& spine);

  const Spine& spine() const { return *spine_; }
  std::size_t vertex_index(const std::string& id) const;
  std::size_t edge_index(const std::string& id) const;
  std::size_t region_index(const std::string& id) const;

  // Strand passages are indexed 1 (through in1) and 2 (through in2).
  // edge_at_tail: the edge whose tail sits on the given vertex out-port.
  std::size_t edge_at_tail(std::size_t vertex, OutPort port) const;
  int tail_passage(const Edge& edge) const;  // passage owning the tail port
  int head_passage(const Edge& edge) const;  // passage owning the head port

 private:
  const Spine* spine_;
  std::map<std::string, std::size_t> vertex_by_id_;
  std::map<std::string, std::size_t> edge_by_id_;
  std::map<std::string, std::size_t> region_by_id_;
  // per vertex: edge index whose tail is at out1/out2
  std::vector<std::optional<std::size_t>> tail_edge_out1_;
  std::vector<std::optional<std::size_t>> tail_edge_out2_;
};

}  // namespace spinekit::model

#endif
