#include "spinekit/report.hpp"

#include <nlohmann/json.hpp>

#include <array>
#include <map>
#include <sstream>
#include <string>
#include <utility>

namespace spinekit::report {
namespace {

using json = nlohmann::ordered_json;

json validation_json(const model::ValidationReport& report) {
  json j;
  j["ok"] = report.ok();
  j["errors"] = report.error_count();
  j["warnings"] = report.warning_count();
  json violations = json::array();
  for (const model::Violation& v : report.violations) {
    violations.push_back({{"severity", v.severity == model::Severity::error ? "error" : "warning"},
                          {"invariant", v.invariant},
                          {"element", v.element},
                          {"message", v.message}});
  }
  j["violations"] = std::move(violations);
  return j;
}

json witness_json(const std::vector<std::string>& edge_ids, const cone::Witness& witness) {
  json j = json::object();
  for (std::size_t i = 0; i < edge_ids.size() && i < witness.x.size(); ++i) {
    j[edge_ids[i]] = rat_to_string(witness.x[i]);
  }
  return j;
}

json certificate_json(const std::vector<std::string>& row_ids,
                      const std::vector<std::string>& col_ids,
                      const cone::StrictSystem& system,
                      const cone::InfeasibilityCertificate& cert) {
  json j;
  json strict = json::object();
  for (std::size_t i = 0; i < cert.strict_multipliers.size(); ++i) {
    std::string key = i < row_ids.size() ? row_ids[i] : "row" + std::to_string(i);
    strict[key] = rat_to_string(cert.strict_multipliers[i]);
  }
  j["strict"] = std::move(strict);
  if (!cert.sign_multipliers.empty()) {
    json signs = json::object();
    std::size_t i = 0;
    for (const auto& [col, sign] : system.sign_constraints) {
      if (i >= cert.sign_multipliers.size()) break;
      std::string key = col < col_ids.size() ? col_ids[col] : "col" + std::to_string(col);
      signs[key] = rat_to_string(cert.sign_multipliers[i]);
      ++i;
    }
    j["signs"] = std::move(signs);
  }
  j["slack"] = rat_to_string(cert.slack_multiplier);
  if (!cert.equality_multipliers.empty()) {
    json eqs = json::array();
    for (const Rat& v : cert.equality_multipliers) eqs.push_back(rat_to_string(v));
    j["equalities"] = std::move(eqs);
  }
  return j;
}

json foliation_certificate_json(const model::Spine& spine,
                                const foliation::FoliationCertificate& cert) {
  json j;
  std::vector<std::string> edge_ids;
  for (const model::Edge& e : spine.edges) edge_ids.push_back(e.id);
  j["witness"] = witness_json(edge_ids, cert.witness);

  json passages = json::object();
  for (const model::Vertex& v : spine.vertices) {
    json entry = json::object();
    for (int p : {1, 2}) {
      auto it = cert.passage_signs.vertex_passages.find({v.id, p});
      if (it != cert.passage_signs.vertex_passages.end()) {
        entry[std::to_string(p)] = it->second > 0 ? "+" : "-";
      }
    }
    passages[v.id] = std::move(entry);
    }
  j["passages"] = std::move(passages);

  json h_pieces = json::object();
  for (const model::Vertex& v : spine.vertices) {
    h_pieces[v.id] = foliation::h_piece_label(cert.passage_signs, v.id);
  }
  j["h_pieces"] = std::move(h_pieces);

  if (!cert.passage_signs.circles.empty()) {
    json circles = json::object();
    for (const model::Edge& e : spine.edges) {
      auto it = cert.passage_signs.circles.find(e.id);
      if (it == cert.passage_signs.circles.end()) continue;
      switch (it->second) {
        case foliation::CircleSign::plus: circles[e.id] = "plus"; break;
        case foliation::CircleSign::minus: circles[e.id] = "minus"; break;
        case foliation::CircleSign::flipped: circles[e.id] = "flipped"; break;
      }
    }
    j["circles"] = std::move(circles);
  }

  json tangency = json::object();
  for (const model::Edge& e : spine.edges) {
    auto it = cert.tangency.find(e.id);
    if (it != cert.tangency.end()) tangency[e.id] = it->second;
  }
  j["tangency"] = std::move(tangency);
  j["total_tangencies"] = cert.total_tangencies();
  j["ledger"] = {{"elliptic", cert.ledger.elliptic},
                 {"hyperbolic", cert.ledger.hyperbolic},
                 {"t_plus", cert.ledger.t_plus},
                 {"t_minus", cert.ledger.t_minus}};
  return j;
}

json synthesis_result_json(const model::Spine& spine, const std::string& mode,
                           const foliation::SynthesisResult& result) {
  json j;
  j["mode"] = mode;
  j["ok"] = result.ok();
  if (result.certificate) {
    j["certificate"] = foliation_certificate_json(spine, *result.certificate);
  }
  if (result.inadmissible) {
    std::vector<std::string> rows, cols;
    for (const model::Region& r : spine.regions) rows.push_back(r.id);
    for (const model::Edge& e : spine.edges) cols.push_back(e.id);
    j["inadmissible"] = certificate_json(rows, cols, cone::admissibility_system(spine),
                                         *result.inadmissible);
  }
  if (!result.notes.empty()) j["notes"] = result.notes;
  return j;
}

const char* reason_name(foliation::TangencyBound::Reason reason) {
  switch (reason) {
    case foliation::TangencyBound::Reason::preferred_region: return "preferred-region";
    case foliation::TangencyBound::Reason::parity: return "parity";
    case foliation::TangencyBound::Reason::none: break;
  }
  return "none";
}

std::string dot_quote(const std::string& id) {
  std::string out = "\"";
  for (char c : id) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

Analysis analyze(const model::Spine& spine, std::optional<long> minimize_budget) {
  Analysis a;
  a.spine = spine;
  a.validation = model::validate(spine);
  if (!a.validation.ok()) return a;

  model::SpineIndex index(spine);
  a.circuit_list = circuits::trace_circuits(index);
  a.classification = circuits::classify(index);
  a.preferred = foliation::preferred_regions(spine);
  a.incidence = model::incidence_matrix(spine);
  a.admissibility = cone::admissible(spine);
  a.bound = foliation::tangency_lower_bound(spine);
  a.direct = foliation::synthesize_direct(spine);
  a.minimal = foliation::synthesize_minimal(spine, minimize_budget);
  return a;
}

std::string analysis_json(const Analysis& a) {
  json j;
  j["name"] = a.spine.name;
  j["validation"] = validation_json(a.validation);

  if (a.classification) {
    json c;
    c["vertices"] = a.classification->n_v;
    c["edges"] = a.classification->m;
    c["circuits"] = a.classification->circuit_count;
    json circuit_edges = json::array();
    for (const circuits::Circuit& circuit : a.circuit_list) circuit_edges.push_back(circuit.edges);
    c["circuit_edges"] = std::move(circuit_edges);
    c["flow_spine"] = a.classification->is_flow_spine;
    c["positive"] = a.classification->is_positive;
    c["negative"] = a.classification->is_negative;
    j["classification"] = std::move(c);
  }

  if (a.incidence) {
    j["preferred_regions"] = a.preferred;
    json m;
    m["regions"] = a.incidence->rows;
    m["edges"] = a.incidence->cols;
    json rows = json::array();
    for (const auto& row : a.incidence->entries) {
      json row_json = json::array();
      for (const Rat& v : row) row_json.push_back(rat_to_string(v));
      rows.push_back(std::move(row_json));
    }
    m["rows"] = std::move(rows);
    json sums = json::array();
    for (const Rat& v : a.incidence->column_sums()) sums.push_back(rat_to_string(v));
    m["column_sums"] = std::move(sums);
    j["incidence"] = std::move(m);
  }

  if (a.admissibility) {
    json adm;
    adm["admissible"] = a.admissibility->feasible();
    if (const cone::Witness* w = a.admissibility->witness()) {
      adm["witness"] = witness_json(a.incidence->cols, *w);
    } else if (const cone::InfeasibilityCertificate* cert = a.admissibility->certificate()) {
      adm["certificate"] = certificate_json(a.incidence->rows, a.incidence->cols,
                                            cone::admissibility_system(a.spine), *cert);
    }
    if (!a.admissibility->notes.empty()) adm["notes"] = a.admissibility->notes;
    j["admissibility"] = std::move(adm);
  }

  if (a.bound) {
    j["tangency_bound"] = {{"lower", a.bound->lower}, {"reason", reason_name(a.bound->reason)}};
  }

  if (a.direct || a.minimal) {
    json synthesis = json::object();
    if (a.direct) synthesis["direct"] = synthesis_result_json(a.spine, "direct", *a.direct);
    if (a.minimal) synthesis["minimal"] = synthesis_result_json(a.spine, "minimal", *a.minimal);
    j["synthesis"] = std::move(synthesis);
  }
  return j.dump(2) + "\n";
}

std::string synthesis_json(const model::Spine& spine, const std::string& mode,
                           const foliation::SynthesisResult& result) {
  return synthesis_result_json(spine, mode, result).dump(2) + "\n";
}

std::string witness_json(const model::Spine& spine, const cone::Witness& witness) {
  std::vector<std::string> cols;
  for (const model::Edge& e : spine.edges) cols.push_back(e.id);
  return witness_json(cols, witness).dump(2) + "\n";
}

std::string infeasibility_json(const model::Spine& spine,
                               const cone::InfeasibilityCertificate& certificate) {
  std::vector<std::string> rows;
  std::vector<std::string> cols;
  for (const model::Region& r : spine.regions) rows.push_back(r.id);
  for (const model::Edge& e : spine.edges) cols.push_back(e.id);
  return certificate_json(rows, cols, cone::admissibility_system(spine), certificate).dump(2) +
         "\n";
}

std::string dot_export(const model::Spine& spine) {
  model::SpineIndex index(spine);  // throws on invalid encodings
  std::vector<circuits::Circuit> circuit_list = circuits::trace_circuits(index);

  static const std::array<const char*, 8> palette = {"#1b9e77", "#d95f02", "#7570b3", "#e7298a",
                                                     "#66a61e", "#e6ab02", "#a6761d", "#666666"};
  std::map<std::string, const char*> edge_color;
  for (std::size_t c = 0; c < circuit_list.size(); ++c) {
    for (const std::string& id : circuit_list[c].edges) {
      edge_color[id] = palette[c % palette.size()];
    }
  }

  std::ostringstream out;
  out << "digraph " << dot_quote(spine.name) << " {\n";
  out << "  rankdir=LR;\n";
  out << "  node [fontname=\"Helvetica\"];\n";
  out << "\n  // true vertices\n";
  for (const model::Vertex& v : spine.vertices) {
    out << "  " << dot_quote(v.id) << " [shape=circle, label="
        << dot_quote(v.id + "\\n" + (v.vtype == model::VertexType::L ? "L" : "R")) << "];\n";
  }
  bool any_circle = false;
  for (const model::Edge& e : spine.edges) {
    if (e.kind == model::EdgeKind::circle) any_circle = true;
  }
  if (any_circle) {
    out << "\n  // circle components of the singular set\n";
    for (const model::Edge& e : spine.edges) {
      if (e.kind == model::EdgeKind::circle) {
        out << "  " << dot_quote(e.id) << " [shape=point];\n";
      }
    }
  }
  out << "\n  // triple lines, colored by circuit\n";
  for (const model::Edge& e : spine.edges) {
    const char* color = edge_color.count(e.id) ? edge_color[e.id] : "#000000";
    if (e.kind == model::EdgeKind::arc) {
      out << "  " << dot_quote(e.tail->vertex) << " -> " << dot_quote(e.head->vertex) << " [label="
          << dot_quote(e.id) << ", color=\"" << color << "\", taillabel=\""
          << model::out_port_name(e.tail->port) << "\", headlabel=\""
          << model::in_port_name(e.head->port) << "\", fontsize=10, labelfontsize=8];\n";
    } else {
      out << "  " << dot_quote(e.id) << " -> " << dot_quote(e.id) << " [label=" << dot_quote(e.id)
          << ", color=\"" << color << "\"];\n";
    }
  }
  out << "\n  // regions as clusters of boundary traversals\n";
  for (std::size_t r = 0; r < spine.regions.size(); ++r) {
    const model::Region& region = spine.regions[r];
    out << "  subgraph " << dot_quote("cluster_" + region.id) << " {\n";
    out << "    label=" << dot_quote(region.id) << ";\n";
    out << "    style=dashed;\n";
    for (std::size_t c = 0; c < region.boundary.size(); ++c) {
      const model::BoundaryCircuit& circuit = region.boundary[c];
      std::vector<std::string> nodes;
      for (std::size_t t = 0; t < circuit.size(); ++t) {
        std::string node =
            region.id + "_" + std::to_string(c) + "_" + std::to_string(t);
        nodes.push_back(node);
        out << "    " << dot_quote(node) << " [shape=box, fontsize=9, label="
            << dot_quote(circuit[t].edge + (circuit[t].sign >= 0 ? "+" : "-")) << "];\n";
      }
      if (nodes.size() > 1) {
        for (std::size_t t = 0; t < nodes.size(); ++t) {
          out << "    " << dot_quote(nodes[t]) << " -> " << dot_quote(nodes[(t + 1) % nodes.size()])
              << " [style=dotted, arrowsize=0.5];\n";
        }
      }
    }
    out << "  }\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace spinekit::report
