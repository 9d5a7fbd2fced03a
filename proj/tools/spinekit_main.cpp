#include <CLI11.hpp>

#include <unistd.h>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <spinekit/circuits.hpp>
#include <spinekit/cone.hpp>
#include <spinekit/corpus.hpp>
#include <spinekit/document.hpp>
#include <spinekit/foliation.hpp>
#include <spinekit/model.hpp>
#include <spinekit/rational.hpp>
#include <spinekit/refinement.hpp>
#include <spinekit/report.hpp>

using namespace spinekit;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;  // inadmissible, invalid, or a failed check
constexpr int kExitUsage = 2;     // bad invocation or unparseable input

// SPINEKIT_COLOR=always|never|auto; human output only, machine output is
// never colored.
struct Style {
  bool on = false;

  static Style from_env() {
    const char* env = std::getenv("SPINEKIT_COLOR");
    std::string mode = env ? env : "auto";
    Style s;
    if (mode == "always")
      s.on = true;
    else if (mode == "never")
      s.on = false;
    else
      s.on = isatty(STDOUT_FILENO) != 0;
    return s;
  }

  std::string wrap(const char* code, const std::string& text) const {
    if (!on) return text;
    return std::string("\033[") + code + "m" + text + "\033[0m";
  }
  std::string good(const std::string& t) const { return wrap("32", t); }
  std::string bad(const std::string& t) const { return wrap("31", t); }
  std::string warn(const std::string& t) const { return wrap("33", t); }
  std::string bold(const std::string& t) const { return wrap("1", t); }
};

std::string counted(std::size_t n, const char* singular, const char* plural) {
  return std::to_string(n) + " " + (n == 1 ? singular : plural);
}

std::string size_summary(const model::Spine& s) {
  return counted(s.vertices.size(), "vertex", "vertices") + ", " +
         counted(s.edges.size(), "edge", "edges") + ", " +
         counted(s.regions.size(), "region", "regions");
}

bool read_file(const std::string& path, std::string& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream buffer;
  buffer << in.rdbuf();
  out = buffer.str();
  return true;
}

// Parses `path` into `doc`; on failure prints located issues and returns
// false (callers exit with kExitUsage).
bool load_document(const std::string& path, document::SpineDocument& doc) {
  std::string text;
  if (!read_file(path, text)) {
    std::cerr << "spinekit: cannot read '" << path << "'\n";
    return false;
  }
  document::ParseResult parsed = document::parse(text);
  if (!parsed.ok()) {
    for (const document::ParseIssue& issue : parsed.issues)
      std::cerr << path << ": " << issue.where << ": " << issue.message << "\n";
    return false;
  }
  doc = std::move(*parsed.document);
  return true;
}

void print_violations(const model::ValidationReport& report, const Style& style) {
  for (const model::Violation& v : report.violations) {
    bool error = v.severity == model::Severity::error;
    std::cout << "  " << (error ? style.bad("error") : style.warn("warning")) << " "
              << v.invariant << " (" << v.element << "): " << v.message << "\n";
  }
}

std::string witness_line(const model::Spine& spine, const cone::Witness& witness) {
  std::string out;
  for (std::size_t i = 0; i < spine.edges.size() && i < witness.x.size(); ++i) {
    if (i) out += ", ";
    out += spine.edges[i].id + " = " + rat_to_string(witness.x[i]);
  }
  return out;
}

void print_infeasibility(const model::Spine& spine, const cone::InfeasibilityCertificate& cert,
                         const Style& style) {
  std::cout << "  " << style.bold("multipliers") << " (nonnegative, summing to 1, annihilating "
            << "every column):\n";
  for (std::size_t i = 0; i < cert.strict_multipliers.size(); ++i) {
    std::string row = i < spine.regions.size() ? spine.regions[i].id : "row" + std::to_string(i);
    std::cout << "    " << row << ": " << rat_to_string(cert.strict_multipliers[i]) << "\n";
  }
  if (cert.slack_multiplier != 0)
    std::cout << "    slack: " << rat_to_string(cert.slack_multiplier) << "\n";
}

void print_certificate_human(const model::Spine& spine, const foliation::FoliationCertificate& cert,
                             const Style& style) {
  std::cout << "  weights: " << witness_line(spine, cert.witness) << "\n";
  for (const model::Vertex& v : spine.vertices) {
    auto sign_of = [&](int passage) {
      auto it = cert.passage_signs.vertex_passages.find({v.id, passage});
      return it != cert.passage_signs.vertex_passages.end() && it->second < 0 ? "-" : "+";
    };
    std::cout << "  " << v.id << ": passages (" << sign_of(1) << ", " << sign_of(2)
              << "), h-piece " << h_piece_label(cert.passage_signs, v.id) << "\n";
  }
  for (const auto& [id, sign] : cert.passage_signs.circles) {
    const char* label = sign == foliation::CircleSign::plus    ? "+"
                        : sign == foliation::CircleSign::minus ? "-"
                                                               : "flipped";
    std::cout << "  " << id << ": circle " << label << "\n";
  }
  std::string tangency;
  for (const model::Edge& e : spine.edges) {
    if (!tangency.empty()) tangency += ", ";
    auto it = cert.tangency.find(e.id);
    tangency += e.id + " = " + std::to_string(it == cert.tangency.end() ? 0 : it->second);
  }
  std::cout << "  tangencies: " << tangency << "\n";
  std::cout << "  total tangencies: " << style.bold(std::to_string(cert.total_tangencies()))
            << "\n";
  std::cout << "  ledger: elliptic " << cert.ledger.elliptic << ", hyperbolic "
            << cert.ledger.hyperbolic << ", t+ " << cert.ledger.t_plus << ", t- "
            << cert.ledger.t_minus << "\n";
}

int run_validate(const std::string& path, const Style& style) {
  document::SpineDocument doc;
  if (!load_document(path, doc)) return kExitUsage;
  model::ValidationReport report = model::validate(doc.spine);
  const model::Spine& s = doc.spine;
  if (report.ok()) {
    std::cout << s.name << ": " << style.good("ok") << " (" << size_summary(s);
    if (report.warning_count() > 0)
      std::cout << ", " << report.warning_count() << " warning"
                << (report.warning_count() == 1 ? "" : "s");
    std::cout << ")\n";
    print_violations(report, style);
    return kExitOk;
  }
  std::cout << s.name << ": " << style.bad("invalid") << " (" << report.error_count() << " error"
            << (report.error_count() == 1 ? "" : "s") << ")\n";
  print_violations(report, style);
  return kExitNegative;
}

int run_analyze(const std::string& path, bool as_json, const Style& style) {
  document::SpineDocument doc;
  if (!load_document(path, doc)) return kExitUsage;
  report::Analysis analysis = report::analyze(doc.spine);
  bool admissible = analysis.admissibility && analysis.admissibility->feasible();
  int status = analysis.validation.ok() && admissible ? kExitOk : kExitNegative;
  if (as_json) {
    std::cout << report::analysis_json(analysis);
    return status;
  }

  std::cout << style.bold(doc.spine.name) << "\n";
  if (!analysis.validation.ok()) {
    std::cout << "validation: " << style.bad("invalid") << "\n";
    print_violations(analysis.validation, style);
    return status;
  }
  std::cout << "validation: " << style.good("ok");
  if (analysis.validation.warning_count() > 0)
    std::cout << " (" << analysis.validation.warning_count() << " warnings)";
  std::cout << "\n";
  print_violations(analysis.validation, style);

  const circuits::SpineClass& cls = *analysis.classification;
  std::cout << "circuits: " << cls.circuit_count << (cls.is_flow_spine ? " (flow spine)" : "")
            << "\n";
  for (std::size_t i = 0; i < analysis.circuit_list.size(); ++i) {
    std::cout << "  circuit " << i + 1 << ":";
    for (const std::string& id : analysis.circuit_list[i].edges) std::cout << " " << id;
    std::cout << "\n";
  }
  if (cls.is_positive) std::cout << "positive spine\n";
  if (cls.is_negative) std::cout << "negative spine\n";
  std::cout << "preferred regions:";
  if (analysis.preferred.empty()) std::cout << " (none)";
  for (const std::string& id : analysis.preferred) std::cout << " " << id;
  std::cout << "\n";

  const model::IncidenceMatrix& inc = *analysis.incidence;
  std::cout << "incidence (columns";
  for (const std::string& c : inc.cols) std::cout << " " << c;
  std::cout << "):\n";
  for (std::size_t r = 0; r < inc.rows.size(); ++r) {
    std::cout << "  " << inc.rows[r] << ":";
    for (long v : inc.entries[r]) std::cout << " " << v;
    std::cout << "\n";
  }

  if (admissible) {
    std::cout << "admissibility: " << style.good("admissible") << "\n";
    std::cout << "  witness: "
              << witness_line(doc.spine, *analysis.admissibility->witness()) << "\n";
  } else {
    std::cout << "admissibility: " << style.bad("inadmissible") << "\n";
    print_infeasibility(doc.spine, *analysis.admissibility->certificate(), style);
  }
  for (const std::string& note : analysis.admissibility->notes)
    std::cout << "  note: " << note << "\n";

  const char* reason = analysis.bound->reason == foliation::TangencyBound::Reason::none
                           ? ""
                           : " (a preferred region forces tangencies)";
  std::cout << "tangency lower bound: " << analysis.bound->lower << reason << "\n";

  auto print_synthesis = [&](const char* mode, const foliation::SynthesisResult& result) {
    std::cout << "synthesis (" << mode << "):";
    if (!result.ok()) {
      std::cout << " " << style.bad("no certificate (spine inadmissible)") << "\n";
      return;
    }
    std::cout << "\n";
    print_certificate_human(doc.spine, *result.certificate, style);
    for (const std::string& note : result.notes) std::cout << "  note: " << note << "\n";
  };
  if (analysis.direct) print_synthesis("direct", *analysis.direct);
  if (analysis.minimal) print_synthesis("minimal", *analysis.minimal);
  return status;
}

int run_admissible(const std::string& path, bool want_witness, bool want_certificate,
                   const Style& style) {
  document::SpineDocument doc;
  if (!load_document(path, doc)) return kExitUsage;
  model::ValidationReport report = model::validate(doc.spine);
  if (!report.ok()) {
    std::cout << doc.spine.name << ": " << style.bad("invalid") << "\n";
    print_violations(report, style);
    return kExitNegative;
  }
  cone::FeasibilityOutcome outcome = cone::admissible(doc.spine);
  int status = outcome.feasible() ? kExitOk : kExitNegative;
  if (want_witness) {
    if (const cone::Witness* w = outcome.witness()) {
      std::cout << report::witness_json(doc.spine, *w);
    } else {
      std::cerr << "spinekit: '" << doc.spine.name
                << "' is inadmissible; there is no witness (try --certificate)\n";
    }
    return status;
  }
  if (want_certificate) {
    if (const cone::InfeasibilityCertificate* c = outcome.certificate()) {
      std::cout << report::infeasibility_json(doc.spine, *c);
    } else {
      std::cerr << "spinekit: '" << doc.spine.name
                << "' is admissible; there is no infeasibility certificate (try --witness)\n";
    }
    return status;
  }
  if (outcome.feasible()) {
    std::cout << doc.spine.name << ": " << style.good("admissible") << "\n";
    std::cout << "  witness: " << witness_line(doc.spine, *outcome.witness()) << "\n";
  } else {
    std::cout << doc.spine.name << ": " << style.bad("inadmissible") << "\n";
    print_infeasibility(doc.spine, *outcome.certificate(), style);
  }
  for (const std::string& note : outcome.notes) std::cout << "  note: " << note << "\n";
  return status;
}

int run_synth(const std::string& path, bool minimize, std::optional<long> budget, bool as_json,
              const Style& style) {
  document::SpineDocument doc;
  if (!load_document(path, doc)) return kExitUsage;
  model::ValidationReport report = model::validate(doc.spine);
  if (!report.ok()) {
    std::cout << doc.spine.name << ": " << style.bad("invalid") << "\n";
    print_violations(report, style);
    return kExitNegative;
  }
  foliation::SynthesisResult result = minimize ? foliation::synthesize_minimal(doc.spine, budget)
                                               : foliation::synthesize_direct(doc.spine);
  const char* mode = minimize ? "minimal" : "direct";
  int status = result.ok() ? kExitOk : kExitNegative;
  if (as_json) {
    std::cout << report::synthesis_json(doc.spine, mode, result);
    return status;
  }
  std::cout << doc.spine.name << ": synthesis (" << mode << ")\n";
  if (result.ok()) {
    print_certificate_human(doc.spine, *result.certificate, style);
  } else {
    std::cout << "  " << style.bad("inadmissible; no S-stable foliation exists") << "\n";
    if (result.inadmissible) print_infeasibility(doc.spine, *result.inadmissible, style);
  }
  for (const std::string& note : result.notes) std::cout << "  note: " << note << "\n";
  return status;
}

int run_refine(const std::string& path, const std::string& system_name, const Style& style) {
  document::SpineDocument doc;
  if (!load_document(path, doc)) return kExitUsage;
  const refinement::RefinementSystem* system = nullptr;
  for (const refinement::RefinementSystem& sys : doc.refinements)
    if (sys.name == system_name) system = &sys;
  if (system == nullptr) {
    std::cerr << "spinekit: no refinement system named '" << system_name << "' in '" << path
              << "'";
    if (doc.refinements.empty()) {
      std::cerr << " (the document has none)\n";
    } else {
      std::cerr << "; available:";
      for (const refinement::RefinementSystem& sys : doc.refinements)
        std::cerr << " " << sys.name;
      std::cerr << "\n";
    }
    return kExitUsage;
  }

  cone::FeasibilityOutcome outcome = refinement::solve_refinement(*system);
  std::cout << system->name << ": " << system->variables.size() << " variables, "
            << system->equalities.size() << " equalities, " << system->inequalities.size()
            << " strict inequalities\n";
  if (const cone::Witness* w = outcome.witness()) {
    std::cout << "  " << style.good("feasible") << "\n";
    for (std::size_t i = 0; i < system->variables.size() && i < w->x.size(); ++i)
      std::cout << "  " << system->variables[i] << " = " << rat_to_string(w->x[i]) << "\n";
    if (system->expected_solution) {
      std::string why;
      bool ok = refinement::verify_solution(*system, *system->expected_solution, &why);
      std::cout << "  recorded solution: "
                << (ok ? style.good("verifies") : style.bad("rejected: " + why)) << "\n";
      if (!ok) return kExitNegative;
    }
    return kExitOk;
  }
  std::cout << "  " << style.bad("infeasible") << "\n";
  const cone::InfeasibilityCertificate& cert = *outcome.certificate();
  for (std::size_t i = 0; i < cert.strict_multipliers.size(); ++i)
    std::cout << "  y(inequality " << i + 1
              << ") = " << rat_to_string(cert.strict_multipliers[i]) << "\n";
  for (std::size_t i = 0; i < cert.equality_multipliers.size(); ++i)
    std::cout << "  z(equality " << i + 1
              << ") = " << rat_to_string(cert.equality_multipliers[i]) << "\n";
  if (cert.slack_multiplier != 0)
    std::cout << "  y(slack) = " << rat_to_string(cert.slack_multiplier) << "\n";
  return kExitNegative;
}

int run_export(const std::string& path, const std::string& format, const Style& style) {
  document::SpineDocument doc;
  if (!load_document(path, doc)) return kExitUsage;
  if (format == "json") {
    std::cout << document::serialize(doc);
    return kExitOk;
  }
  try {
    std::cout << report::dot_export(doc.spine);
  } catch (const model::ValidationError& err) {
    std::cout << doc.spine.name << ": " << style.bad("invalid") << "\n";
    print_violations(err.report, style);
    return kExitNegative;
  }
  return kExitOk;
}

int run_corpus_list(const Style& style) {
  for (const corpus::Entry& entry : corpus::entries()) {
    document::ParseResult parsed = document::parse(entry.text);
    if (!parsed.ok()) {
      std::cout << entry.name << "\n";
      continue;
    }
    const model::Spine& s = parsed.document->spine;
    std::cout << style.bold(entry.name) << ": " << size_summary(s) << "\n";
    for (const std::string& note : parsed.document->notes) std::cout << "  " << note << "\n";
  }
  return kExitOk;
}

int run_corpus_run(const Style& style) {
  std::vector<corpus::RunOutcome> outcomes = corpus::run_all();
  std::size_t failed = 0;
  for (const corpus::RunOutcome& outcome : outcomes) {
    if (outcome.passed()) {
      std::cout << outcome.name << ": " << style.good("ok") << "\n";
      continue;
    }
    ++failed;
    std::cout << outcome.name << ": " << style.bad("FAIL") << "\n";
    for (const std::string& f : outcome.failures) std::cout << "  " << f << "\n";
  }
  std::cout << outcomes.size() << " documents, "
            << (failed == 0 ? style.good("all expectations matched")
                            : style.bad(std::to_string(failed) + " failed"))
            << "\n";
  return failed == 0 ? kExitOk : kExitNegative;
}

}  // namespace

int main(int argc, char** argv) {
  Style style = Style::from_env();

  CLI::App app{"exact analysis of branched spines of closed oriented 3-manifolds"};
  app.require_subcommand(1);

  std::string path;
  bool as_json = false;

  CLI::App* validate = app.add_subcommand("validate", "check a spine document's invariants");
  validate->add_option("file", path, "spine document (JSON)")->required();

  CLI::App* analyze = app.add_subcommand("analyze", "full report: validation, circuits, "
                                                    "admissibility, tangency synthesis");
  analyze->add_option("file", path, "spine document (JSON)")->required();
  analyze->add_flag("--json", as_json, "machine-readable report");

  bool want_witness = false;
  bool want_certificate = false;
  CLI::App* admissible = app.add_subcommand("admissible", "decide whether the cone C(P) has a "
                                                          "strictly admissible point");
  admissible->add_option("file", path, "spine document (JSON)")->required();
  CLI::Option* ww = admissible->add_flag("--witness", want_witness, "print the witness as JSON");
  admissible->add_flag("--certificate", want_certificate,
                       "print the infeasibility certificate as JSON")
      ->excludes(ww);

  bool minimize = false;
  long budget_value = 0;
  CLI::App* synth = app.add_subcommand("synth", "construct an S-stable foliation certificate");
  synth->add_option("file", path, "spine document (JSON)")->required();
  CLI::Option* minimize_flag =
      synth->add_flag("--minimize", minimize, "search for the minimum total tangency count");
  CLI::Option* budget_opt = synth->add_option("--budget", budget_value,
                                              "largest total to try before falling back to the "
                                              "direct construction");
  budget_opt->needs(minimize_flag)->check(CLI::NonNegativeNumber);
  synth->add_flag("--json", as_json, "machine-readable certificate");

  std::string system_name;
  CLI::App* refine = app.add_subcommand("refine", "solve a leaf-insertion refinement system "
                                                  "from the document");
  refine->add_option("file", path, "spine document (JSON)")->required();
  refine->add_option("--system", system_name, "refinement system name")->required();

  std::string format;
  CLI::App* exporter = app.add_subcommand("export", "re-emit a document (canonical JSON or "
                                                    "GraphViz DOT)");
  exporter->add_option("file", path, "spine document (JSON)")->required();
  exporter->add_option("--format", format, "dot or json")
      ->required()
      ->check(CLI::IsMember({"dot", "json"}));

  CLI::App* corpus_cmd = app.add_subcommand("corpus", "built-in example documents");
  corpus_cmd->require_subcommand(1);
  CLI::App* corpus_list = corpus_cmd->add_subcommand("list", "name every bundled document");
  CLI::App* corpus_run =
      corpus_cmd->add_subcommand("run", "recompute every bundled document's expected results");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  std::optional<long> budget;
  if (budget_opt->count() > 0) budget = budget_value;

  if (validate->parsed()) return run_validate(path, style);
  if (analyze->parsed()) return run_analyze(path, as_json, style);
  if (admissible->parsed()) return run_admissible(path, want_witness, want_certificate, style);
  if (synth->parsed()) return run_synth(path, minimize, budget, as_json, style);
  if (refine->parsed()) return run_refine(path, system_name, style);
  if (exporter->parsed()) return run_export(path, format, style);
  if (corpus_cmd->parsed()) {
    if (corpus_list->parsed()) return run_corpus_list(style);
    if (corpus_run->parsed()) return run_corpus_run(style);
  }
  return kExitUsage;
}
