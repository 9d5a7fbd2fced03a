#include "spinekit/document.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace spinekit::document {
namespace {

using json = nlohmann::ordered_json;
using model::Edge;
using model::EdgeKind;
using model::Region;
using model::Spine;
using model::Vertex;
using model::VertexType;

std::string line_column(const std::string& text, std::size_t byte) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

struct Reader {
  std::vector<ParseIssue> issues;

  void fail(const std::string& where, const std::string& message) {
    issues.push_back({where, message});
  }

  const json* field(const json& obj, const std::string& where, const char* key, bool required) {
    auto it = obj.find(key);
    if (it == obj.end()) {
      if (required) fail(where, std::string("missing field '") + key + "'");
      return nullptr;
    }
    return &it.value();
  }

  void reject_unknown(const json& obj, const std::string& where,
                      std::initializer_list<const char*> allowed) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
      const std::string& key = it.key();
      if (key == "comment") continue;  // commentary is welcome anywhere
      if (std::none_of(allowed.begin(), allowed.end(),
                       [&](const char* a) { return key == a; })) {
        fail(where, "unknown field '" + key + "'");
      }
    }
  }

  bool expect_object(const json& j, const std::string& where) {
    if (j.is_object()) return true;
    fail(where, "expected an object");
    return false;
  }

  bool expect_array(const json& j, const std::string& where) {
    if (j.is_array()) return true;
    fail(where, "expected an array");
    return false;
  }

  std::string get_string(const json& j, const std::string& where) {
    if (j.is_string()) return j.get<std::string>();
    fail(where, "expected a string");
    return {};
  }

  long get_integer(const json& j, const std::string& where) {
    if (j.is_number_integer()) return j.get<long>();
    fail(where, "expected an integer");
    return 0;
  }

  bool get_bool(const json& j, const std::string& where) {
    if (j.is_boolean()) return j.get<bool>();
    fail(where, "expected true or false");
    return false;
  }

  int get_sign(const json& j, const std::string& where) {
    std::string s = j.is_string() ? j.get<std::string>() : std::string();
    if (s == "+") return 1;
    if (s == "-" || s == "\xE2\x88\x92") return -1;  // ASCII hyphen or U+2212
    fail(where, "sign must be the string \"+\" or \"-\"");
    return 1;
  }

  Rat get_rational(const json& j, const std::string& where) {
    if (j.is_number_integer()) return make_rat(j.get<long long>());
    if (j.is_number_float()) {
      fail(where, "floating point numbers lose exactness; write the value as a string");
      return Rat(0);
    }
    if (j.is_string()) {
      std::string text = j.get<std::string>();
      if (std::optional<Rat> value = parse_rational(text)) return *value;
      fail(where, "not a rational: \"" + text + "\"");
      return Rat(0);
    }
    fail(where, "expected a rational number (integer or string)");
    return Rat(0);
  }

  std::vector<std::string> get_string_array(const json& j, const std::string& where) {
    std::vector<std::string> out;
    if (!expect_array(j, where)) return out;
    for (std::size_t i = 0; i < j.size(); ++i) {
      out.push_back(get_string(j[i], where + "[" + std::to_string(i) + "]"));
    }
    return out;
  }

  std::vector<Rat> get_rational_array(const json& j, const std::string& where) {
    std::vector<Rat> out;
    if (!expect_array(j, where)) return out;
    for (std::size_t i = 0; i < j.size(); ++i) {
      out.push_back(get_rational(j[i], where + "[" + std::to_string(i) + "]"));
    }
    return out;
  }
};

Vertex read_vertex(Reader& r, const json& j, const std::string& where) {
  Vertex v;
  if (!r.expect_object(j, where)) return v;
  r.reject_unknown(j, where, {"id", "type", "pairing"});
  if (const json* f = r.field(j, where, "id", true)) v.id = r.get_string(*f, where + "/id");
  if (const json* f = r.field(j, where, "type", true)) {
    std::string s = r.get_string(*f, where + "/type");
    if (s == "L") {
      v.vtype = VertexType::L;
    } else if (s == "R") {
      v.vtype = VertexType::R;
    } else {
      r.fail(where + "/type", "vertex type must be \"L\" or \"R\"");
    }
  }
  if (const json* f = r.field(j, where, "pairing", true)) {
    std::string pw = where + "/pairing";
    if (r.expect_object(*f, pw)) {
      r.reject_unknown(*f, pw, {"in1", "in2"});
      auto read_port = [&](const char* key, model::OutPort& slot) {
        if (const json* p = r.field(*f, pw, key, true)) {
          std::string name = r.get_string(*p, pw + "/" + key);
          if (auto port = model::out_port_from_name(name)) {
            slot = *port;
          } else {
            r.fail(pw + "/" + key, "expected \"out1\" or \"out2\"");
          }
        }
      };
      read_port("in1", v.pairing.from_in1);
      read_port("in2", v.pairing.from_in2);
    }
  }
  return v;
}

Edge read_edge(Reader& r, const json& j, const std::string& where) {
  Edge e;
  if (!r.expect_object(j, where)) return e;
  r.reject_unknown(j, where, {"id", "kind", "tail", "head"});
  if (const json* f = r.field(j, where, "id", true)) e.id = r.get_string(*f, where + "/id");
  bool circle = false;
  if (const json* f = r.field(j, where, "kind", true)) {
    std::string s = r.get_string(*f, where + "/kind");
    if (s == "arc") {
      e.kind = EdgeKind::arc;
    } else if (s == "circle") {
      e.kind = EdgeKind::circle;
      circle = true;
    } else {
      r.fail(where + "/kind", "edge kind must be \"arc\" or \"circle\"");
    }
  }
  if (circle) {
    if (j.contains("tail") || j.contains("head")) {
      r.fail(where, "a circle edge has no endpoints");
    }
    return e;
  }
  if (const json* f = r.field(j, where, "tail", true)) {
    std::string tw = where + "/tail";
    if (r.expect_object(*f, tw)) {
      r.reject_unknown(*f, tw, {"vertex", "port"});
      model::TailRef ref;
      if (const json* g = r.field(*f, tw, "vertex", true)) {
        ref.vertex = r.get_string(*g, tw + "/vertex");
      }
      if (const json* g = r.field(*f, tw, "port", true)) {
        std::string name = r.get_string(*g, tw + "/port");
        if (auto port = model::out_port_from_name(name)) {
          ref.port = *port;
        } else {
          r.fail(tw + "/port", "expected \"out1\" or \"out2\"");
        }
      }
      e.tail = ref;
    }
  }
  if (const json* f = r.field(j, where, "head", true)) {
    std::string hw = where + "/head";
    if (r.expect_object(*f, hw)) {
      r.reject_unknown(*f, hw, {"vertex", "port"});
      model::HeadRef ref;
      if (const json* g = r.field(*f, hw, "vertex", true)) {
        ref.vertex = r.get_string(*g, hw + "/vertex");
      }
      if (const json* g = r.field(*f, hw, "port", true)) {
        std::string name = r.get_string(*g, hw + "/port");
        if (auto port = model::in_port_from_name(name)) {
          ref.port = *port;
        } else {
          r.fail(hw + "/port", "expected \"in1\" or \"in2\"");
        }
      }
      e.head = ref;
    }
  }
  return e;
}

Region read_region(Reader& r, const json& j, const std::string& where) {
  Region region;
  if (!r.expect_object(j, where)) return region;
  r.reject_unknown(j, where, {"id", "euler", "boundary"});
  if (const json* f = r.field(j, where, "id", true)) {
    region.id = r.get_string(*f, where + "/id");
  }
  if (const json* f = r.field(j, where, "euler", false)) {
    region.euler_char = static_cast<int>(r.get_integer(*f, where + "/euler"));
  }
  if (const json* f = r.field(j, where, "boundary", true)) {
    std::string bw = where + "/boundary";
    if (r.expect_array(*f, bw)) {
      for (std::size_t c = 0; c < f->size(); ++c) {
        std::string cw = bw + "[" + std::to_string(c) + "]";
        model::BoundaryCircuit circuit;
        if (!r.expect_array((*f)[c], cw)) continue;
        for (std::size_t t = 0; t < (*f)[c].size(); ++t) {
          const json& tj = (*f)[c][t];
          std::string tw = cw + "[" + std::to_string(t) + "]";
          model::Traversal trav;
          if (r.expect_object(tj, tw)) {
            r.reject_unknown(tj, tw, {"edge", "sign"});
            if (const json* g = r.field(tj, tw, "edge", true)) {
              trav.edge = r.get_string(*g, tw + "/edge");
            }
            if (const json* g = r.field(tj, tw, "sign", true)) {
              trav.sign = r.get_sign(*g, tw + "/sign");
            }
          }
          circuit.push_back(trav);
        }
        region.boundary.push_back(std::move(circuit));
      }
    }
  }
  return region;
}

refinement::Constraint read_constraint(Reader& r, const json& j, const std::string& where) {
  refinement::Constraint c;
  if (!r.expect_object(j, where)) return c;
  r.reject_unknown(j, where, {"arcs", "weights", "constant"});
  if (const json* f = r.field(j, where, "arcs", false)) {
    std::string aw = where + "/arcs";
    if (r.expect_object(*f, aw)) {
      for (auto it = f->begin(); it != f->end(); ++it) {
        c.var_coeffs[it.key()] = r.get_rational(it.value(), aw + "/" + it.key());
      }
    }
  }
  if (const json* f = r.field(j, where, "weights", false)) {
    std::string ww = where + "/weights";
    if (r.expect_object(*f, ww)) {
      for (auto it = f->begin(); it != f->end(); ++it) {
        c.weight_coeffs[it.key()] = r.get_rational(it.value(), ww + "/" + it.key());
      }
    }
  }
  if (const json* f = r.field(j, where, "constant", false)) {
    c.constant = r.get_rational(*f, where + "/constant");
  }
  return c;
}

refinement::RefinementSystem read_refinement(Reader& r, const json& j, const std::string& where) {
  refinement::RefinementSystem sys;
  if (!r.expect_object(j, where)) return sys;
  r.reject_unknown(j, where,
                   {"name", "variables", "weights", "equalities", "inequalities", "solution"});
  if (const json* f = r.field(j, where, "name", true)) {
    sys.name = r.get_string(*f, where + "/name");
  }
  if (const json* f = r.field(j, where, "variables", true)) {
    sys.variables = r.get_string_array(*f, where + "/variables");
  }
  if (const json* f = r.field(j, where, "weights", false)) {
    std::string ww = where + "/weights";
    if (r.expect_object(*f, ww)) {
      for (auto it = f->begin(); it != f->end(); ++it) {
        sys.edge_weights[it.key()] = r.get_rational(it.value(), ww + "/" + it.key());
      }
    }
  }
  auto read_block = [&](const char* key, std::vector<refinement::Constraint>& out) {
    if (const json* f = r.field(j, where, key, false)) {
      std::string bw = where + "/" + key;
      if (r.expect_array(*f, bw)) {
        for (std::size_t i = 0; i < f->size(); ++i) {
          out.push_back(read_constraint(r, (*f)[i], bw + "[" + std::to_string(i) + "]"));
        }
      }
    }
  };
  read_block("equalities", sys.equalities);
  read_block("inequalities", sys.inequalities);
  if (const json* f = r.field(j, where, "solution", false)) {
    sys.expected_solution = r.get_rational_array(*f, where + "/solution");
  }
  return sys;
}

ExpectedResults read_expected(Reader& r, const json& j, const std::string& where) {
  ExpectedResults e;
  if (!r.expect_object(j, where)) return e;
  r.reject_unknown(j, where, {"valid", "violations", "circuits", "flow_spine", "admissible",
                              "witness", "minimal_tangencies", "preferred_regions"});
  if (const json* f = r.field(j, where, "valid", false)) {
    e.valid = r.get_bool(*f, where + "/valid");
  }
  if (const json* f = r.field(j, where, "violations", false)) {
    e.violations = r.get_string_array(*f, where + "/violations");
  }
  if (const json* f = r.field(j, where, "circuits", false)) {
    e.circuits = r.get_integer(*f, where + "/circuits");
  }
  if (const json* f = r.field(j, where, "flow_spine", false)) {
    e.flow_spine = r.get_bool(*f, where + "/flow_spine");
  }
  if (const json* f = r.field(j, where, "admissible", false)) {
    e.admissible = r.get_bool(*f, where + "/admissible");
  }
  if (const json* f = r.field(j, where, "witness", false)) {
    e.witness = r.get_rational_array(*f, where + "/witness");
  }
  if (const json* f = r.field(j, where, "minimal_tangencies", false)) {
    e.minimal_tangencies = r.get_integer(*f, where + "/minimal_tangencies");
  }
  if (const json* f = r.field(j, where, "preferred_regions", false)) {
    e.preferred_regions = r.get_string_array(*f, where + "/preferred_regions");
  }
  return e;
}

SpineDocument read_document(Reader& r, const json& j) {
  SpineDocument doc;
  if (!r.expect_object(j, "/")) return doc;
  r.reject_unknown(j, "/", {"name", "notes", "vertices", "edges", "regions", "refinements",
                            "expected"});
  if (const json* f = r.field(j, "/", "name", true)) {
    doc.spine.name = r.get_string(*f, "/name");
  }
  if (const json* f = r.field(j, "/", "notes", false)) {
    doc.notes = r.get_string_array(*f, "/notes");
  }
  if (const json* f = r.field(j, "/", "vertices", true)) {
    if (r.expect_array(*f, "/vertices")) {
      for (std::size_t i = 0; i < f->size(); ++i) {
        doc.spine.vertices.push_back(
            read_vertex(r, (*f)[i], "/vertices[" + std::to_string(i) + "]"));
      }
    }
  }
  if (const json* f = r.field(j, "/", "edges", true)) {
    if (r.expect_array(*f, "/edges")) {
      for (std::size_t i = 0; i < f->size(); ++i) {
        doc.spine.edges.push_back(read_edge(r, (*f)[i], "/edges[" + std::to_string(i) + "]"));
      }
    }
  }
  if (const json* f = r.field(j, "/", "regions", true)) {
    if (r.expect_array(*f, "/regions")) {
      for (std::size_t i = 0; i < f->size(); ++i) {
        doc.spine.regions.push_back(
            read_region(r, (*f)[i], "/regions[" + std::to_string(i) + "]"));
      }
    }
  }
  if (const json* f = r.field(j, "/", "refinements", false)) {
    if (r.expect_array(*f, "/refinements")) {
      for (std::size_t i = 0; i < f->size(); ++i) {
        doc.refinements.push_back(
            read_refinement(r, (*f)[i], "/refinements[" + std::to_string(i) + "]"));
      }
    }
  }
  if (const json* f = r.field(j, "/", "expected", false)) {
    doc.expected = read_expected(r, *f, "/expected");
  }
  return doc;
}

json rational_json(const Rat& value) { return rat_to_string(value); }

json constraint_json(const refinement::Constraint& c) {
  json j = json::object();
  if (!c.var_coeffs.empty()) {
    json arcs = json::object();
    for (const auto& [name, coeff] : c.var_coeffs) arcs[name] = rational_json(coeff);
    j["arcs"] = std::move(arcs);
  }
  if (!c.weight_coeffs.empty()) {
    json weights = json::object();
    for (const auto& [name, coeff] : c.weight_coeffs) weights[name] = rational_json(coeff);
    j["weights"] = std::move(weights);
  }
  if (c.constant != 0) j["constant"] = rational_json(c.constant);
  return j;
}

}  // namespace

ParseResult parse(const std::string& text) {
  ParseResult out;
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    std::string message = e.what();
    if (std::size_t cut = message.find("] "); cut != std::string::npos) {
      message = message.substr(cut + 2);
    }
    // the location is reported separately; drop the library's own prefix
    if (message.rfind("parse error", 0) == 0) {
      if (std::size_t colon = message.find(": "); colon != std::string::npos) {
        message = message.substr(colon + 2);
      }
    }
    out.issues.push_back({line_column(text, e.byte), message});
    return out;
  }

  Reader reader;
  SpineDocument doc = read_document(reader, root);
  if (reader.issues.empty()) {
    // structural pass done; now ids must be unique and references resolve
    model::ValidationReport report = model::validate(doc.spine);
    for (const model::Violation& v : report.violations) {
      if (v.severity != model::Severity::error) continue;
      if (v.invariant == "duplicate-id" || v.invariant == "unknown-vertex-ref" ||
          v.invariant == "unknown-edge-ref") {
        reader.fail("element '" + v.element + "'", v.message);
      }
    }
  }
  if (!reader.issues.empty()) {
    out.issues = std::move(reader.issues);
    return out;
  }
  out.document = std::move(doc);
  return out;
}

std::string serialize(const SpineDocument& doc) {
  json j;
  j["name"] = doc.spine.name;
  if (!doc.notes.empty()) j["notes"] = doc.notes;

  json vertices = json::array();
  for (const Vertex& v : doc.spine.vertices) {
    json vj;
    vj["id"] = v.id;
    vj["type"] = v.vtype == VertexType::L ? "L" : "R";
    vj["pairing"] = {{"in1", model::out_port_name(v.pairing.from_in1)},
                     {"in2", model::out_port_name(v.pairing.from_in2)}};
    vertices.push_back(std::move(vj));
  }
  j["vertices"] = std::move(vertices);

  json edges = json::array();
  for (const Edge& e : doc.spine.edges) {
    json ej;
    ej["id"] = e.id;
    ej["kind"] = e.kind == EdgeKind::arc ? "arc" : "circle";
    if (e.tail) {
      ej["tail"] = {{"vertex", e.tail->vertex}, {"port", model::out_port_name(e.tail->port)}};
    }
    if (e.head) {
      ej["head"] = {{"vertex", e.head->vertex}, {"port", model::in_port_name(e.head->port)}};
    }
    edges.push_back(std::move(ej));
  }
  j["edges"] = std::move(edges);

  json regions = json::array();
  for (const Region& region : doc.spine.regions) {
    json rj;
    rj["id"] = region.id;
    rj["euler"] = region.euler_char;
    json boundary = json::array();
    for (const model::BoundaryCircuit& circuit : region.boundary) {
      json cj = json::array();
      for (const model::Traversal& t : circuit) {
        cj.push_back({{"edge", t.edge}, {"sign", t.sign >= 0 ? "+" : "-"}});
      }
      boundary.push_back(std::move(cj));
    }
    rj["boundary"] = std::move(boundary);
    regions.push_back(std::move(rj));
  }
  j["regions"] = std::move(regions);

  if (!doc.refinements.empty()) {
    json refinements = json::array();
    for (const refinement::RefinementSystem& sys : doc.refinements) {
      json sj;
      sj["name"] = sys.name;
      sj["variables"] = sys.variables;
      if (!sys.edge_weights.empty()) {
        json weights = json::object();
        for (const auto& [edge, value] : sys.edge_weights) weights[edge] = rational_json(value);
        sj["weights"] = std::move(weights);
      }
      auto block = [](const std::vector<refinement::Constraint>& list) {
        json out = json::array();
        for (const refinement::Constraint& c : list) out.push_back(constraint_json(c));
        return out;
      };
      if (!sys.equalities.empty()) sj["equalities"] = block(sys.equalities);
      if (!sys.inequalities.empty()) sj["inequalities"] = block(sys.inequalities);
      if (sys.expected_solution) {
        json solution = json::array();
        for (const Rat& v : *sys.expected_solution) solution.push_back(rational_json(v));
        sj["solution"] = std::move(solution);
      }
      refinements.push_back(std::move(sj));
    }
    j["refinements"] = std::move(refinements);
  }

  if (doc.expected) {
    const ExpectedResults& e = *doc.expected;
    json ej = json::object();
    if (e.valid) ej["valid"] = *e.valid;
    if (e.violations) ej["violations"] = *e.violations;
    if (e.circuits) ej["circuits"] = *e.circuits;
    if (e.flow_spine) ej["flow_spine"] = *e.flow_spine;
    if (e.admissible) ej["admissible"] = *e.admissible;
    if (e.witness) {
      json witness = json::array();
      for (const Rat& v : *e.witness) witness.push_back(rational_json(v));
      ej["witness"] = std::move(witness);
    }
    if (e.minimal_tangencies) ej["minimal_tangencies"] = *e.minimal_tangencies;
    if (e.preferred_regions) ej["preferred_regions"] = *e.preferred_regions;
    j["expected"] = std::move(ej);
  }

  return j.dump(2) + "\n";
}

}  // namespace spinekit::document
