#include "spinekit/foliation.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "spinekit/circuits.hpp"

namespace spinekit::foliation {

using model::Edge;
using model::EdgeKind;
using model::Spine;
using model::SpineIndex;
using model::Vertex;

long FoliationCertificate::total_tangencies() const {
  long total = 0;
  for (const auto& [edge, t] : tangency) total += t;
  return total;
}

bool VerificationReport::ok() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.pass; });
}

std::string h_piece_label(const PassageSigns& signs, const std::string& vertex_id) {
  int s1 = signs.vertex_passages.at({vertex_id, 1});
  int s2 = signs.vertex_passages.at({vertex_id, 2});
  if (s1 > 0 && s2 > 0) return "1+";
  if (s1 < 0 && s2 < 0) return "1-";
  return "2";
}

std::vector<std::string> preferred_regions(const Spine& spine) {
  std::vector<std::string> out;
  for (const model::Region& r : spine.regions) {
    bool any = false;
    bool all_minus = true;
    for (const model::BoundaryCircuit& circuit : r.boundary) {
      for (const model::Traversal& t : circuit) {
        any = true;
        all_minus = all_minus && t.sign == -1;
      }
    }
    if (any && all_minus) out.push_back(r.id);
  }
  return out;
}

TangencyBound tangency_lower_bound(const Spine& spine) {
  circuits::SpineClass cls = circuits::classify(spine);
  if (cls.is_flow_spine && !preferred_regions(spine).empty()) {
    return {2, TangencyBound::Reason::preferred_region};
  }
  return {0, TangencyBound::Reason::none};
}

bool ph_check(long e, long h, long t_plus, long t_minus) {
  if (e < 0 || h < 0 || t_plus < 0 || t_minus < 0) {
    throw std::invalid_argument("singularity counts must be nonnegative");
  }
  if ((t_plus - t_minus) % 2 != 0) {
    throw std::invalid_argument("t_plus - t_minus must be even");
  }
  return e - h == 1 + (t_plus - t_minus) / 2;
}

namespace {

// Both synthesis modes produce foliations whose singularities are all
// elliptic: the ledger is then forced by the tangency total.
FoliationCertificate assemble(cone::Witness witness, PassageSigns signs,
                              std::map<std::string, long> tangency) {
  FoliationCertificate cert;
  cert.witness = std::move(witness);
  cert.passage_signs = std::move(signs);
  cert.tangency = std::move(tangency);
  long total = cert.total_tangencies();
  cert.ledger.t_plus = total;
  cert.ledger.t_minus = 0;
  cert.ledger.hyperbolic = 0;
  cert.ledger.elliptic = 1 + total / 2;
  return cert;
}

PassageSigns all_plus_signs(const Spine& spine) {
  PassageSigns signs;
  for (const Vertex& v : spine.vertices) {
    signs.vertex_passages[{v.id, 1}] = 1;
    signs.vertex_passages[{v.id, 2}] = 1;
  }
  return signs;
}

}  // namespace

SynthesisResult synthesize_direct(const Spine& spine, const cone::Witness& witness) {
  cone::StrictSystem system = cone::admissibility_system(spine);
  std::string why;
  if (!cone::verify_witness(system, witness.x, &why)) {
    throw std::invalid_argument("supplied weights are not in the cone: " + why);
  }

  PassageSigns signs = all_plus_signs(spine);
  std::map<std::string, long> tangency;
  for (std::size_t j = 0; j < spine.edges.size(); ++j) {
    const Edge& e = spine.edges[j];
    int s = rat_sign(witness.x[j]);
    if (e.kind == EdgeKind::arc) {
      // positive weight keeps the form positive along the edge; otherwise it
      // dips and comes back: two tangency points
      tangency[e.id] = s > 0 ? 0 : 2;
    } else {
      tangency[e.id] = s != 0 ? 0 : 2;
      signs.circles[e.id] =
          s > 0 ? CircleSign::plus : s < 0 ? CircleSign::minus : CircleSign::flipped;
    }
  }

  SynthesisResult result;
  result.certificate = assemble(witness, std::move(signs), std::move(tangency));
  return result;
}

SynthesisResult synthesize_direct(const Spine& spine) {
  cone::FeasibilityOutcome outcome = cone::admissible(spine);
  if (!outcome.feasible()) {
    SynthesisResult result;
    result.inadmissible = *outcome.certificate();
    result.notes = outcome.notes;
    return result;
  }
  return synthesize_direct(spine, *outcome.witness());
}

namespace {

struct ArcEnds {
  std::size_t col = 0;
  std::pair<std::string, int> tail;
  std::pair<std::string, int> head;
};

// next bitmask with the same popcount (Gosper); only called with v != 0
unsigned long long next_same_popcount(unsigned long long v) {
  unsigned long long c = v & (0 - v);
  unsigned long long r = v + c;
  return (((r ^ v) >> 2) / c) | r;
}

}  // namespace

SynthesisResult synthesize_minimal(const Spine& spine, std::optional<long> budget) {
  SpineIndex index(spine);
  cone::StrictSystem base = cone::admissibility_system(spine);

  cone::FeasibilityOutcome admissibility = cone::feasible_strict(base);
  if (!admissibility.feasible()) {
    SynthesisResult result;
    result.inadmissible = *admissibility.certificate();
    result.notes = admissibility.notes;
    return result;
  }

  SynthesisResult fallback = synthesize_direct(spine, *admissibility.witness());
  long cap = fallback.certificate->total_tangencies();

  std::vector<ArcEnds> arcs;
  std::vector<std::pair<std::size_t, std::string>> circles;  // (column, id)
  for (std::size_t j = 0; j < spine.edges.size(); ++j) {
    const Edge& e = spine.edges[j];
    if (e.kind == EdgeKind::arc) {
      arcs.push_back({j,
                      {e.tail->vertex, index.tail_passage(e)},
                      {e.head->vertex, index.head_passage(e)}});
    } else {
      circles.push_back({j, e.id});
    }
  }

  std::size_t n_bits = 2 * spine.vertices.size();
  // sign of (vertex k, passage p) under `mask`; bit 0 unset = '+'; the
  // highest-order bit belongs to (v0, passage 1) so that ascending masks are
  // exactly the lexicographic order over sign tuples
  auto mask_sign = [&](unsigned long long mask, std::size_t vertex, int passage) {
    std::size_t pos = n_bits - 1 - (2 * vertex + static_cast<std::size_t>(passage - 1));
    return (mask >> pos) & 1ull ? -1 : 1;
  };

  std::map<std::map<std::size_t, int>, cone::FeasibilityOutcome> memo;
  auto probe = [&](const std::map<std::size_t, int>& constraints)
      -> const cone::FeasibilityOutcome& {
    auto it = memo.find(constraints);
    if (it == memo.end()) {
      cone::StrictSystem sys = base;
      sys.sign_constraints = constraints;
      it = memo.emplace(constraints, cone::feasible_strict(sys)).first;
    }
    return it->second;
  };

  for (long total = 0; total <= cap; ++total) {
    if (budget && total > *budget) {
      fallback.notes.push_back(
          "budget " + std::to_string(*budget) +
          " exhausted before any pattern became feasible; returning the direct construction");
      return fallback;
    }
    for (unsigned long long mask = 0; mask < (1ull << n_bits); ++mask) {
      // end signs per arc under this pattern
      long forced_arcs = 0;
      std::vector<std::pair<std::size_t, int>> equal_arcs;  // (column, shared sign)
      for (const ArcEnds& arc : arcs) {
        int ts = mask_sign(mask, index.vertex_index(arc.tail.first), arc.tail.second);
        int hs = mask_sign(mask, index.vertex_index(arc.head.first), arc.head.second);
        if (ts == hs) {
          equal_arcs.emplace_back(arc.col, ts);
        } else {
          ++forced_arcs;  // exactly one flip
        }
      }
      if (forced_arcs > total) continue;

      // circle states: 0='+', 1='-', 2=flipped, odometer in input order
      std::vector<int> state(circles.size(), 0);
      while (true) {
        long forced = forced_arcs;
        for (int s : state) {
          if (s == 2) forced += 2;
        }
        long remainder = total - forced;
        if (remainder >= 0 && remainder % 2 == 0 &&
            static_cast<std::size_t>(remainder / 2) <= equal_arcs.size()) {
          std::size_t pay = static_cast<std::size_t>(remainder / 2);
          unsigned long long subset = pay == 0 ? 0ull : (1ull << pay) - 1;
          while (subset < (1ull << equal_arcs.size())) {
            std::map<std::size_t, int> constraints;
            for (std::size_t a = 0; a < equal_arcs.size(); ++a) {
              if (!((subset >> a) & 1ull)) constraints[equal_arcs[a].first] = equal_arcs[a].second;
            }
            for (std::size_t c = 0; c < circles.size(); ++c) {
              if (state[c] == 0) constraints[circles[c].first] = 1;
              if (state[c] == 1) constraints[circles[c].first] = -1;
            }
            const cone::FeasibilityOutcome& outcome = probe(constraints);
            if (outcome.feasible()) {
              PassageSigns signs;
              for (std::size_t v = 0; v < spine.vertices.size(); ++v) {
                signs.vertex_passages[{spine.vertices[v].id, 1}] = mask_sign(mask, v, 1);
                signs.vertex_passages[{spine.vertices[v].id, 2}] = mask_sign(mask, v, 2);
              }
              std::map<std::string, long> tangency;
              for (const ArcEnds& arc : arcs) {
                int ts = mask_sign(mask, index.vertex_index(arc.tail.first), arc.tail.second);
                int hs = mask_sign(mask, index.vertex_index(arc.head.first), arc.head.second);
                tangency[spine.edges[arc.col].id] = ts == hs ? 0 : 1;
              }
              for (std::size_t a = 0; a < equal_arcs.size(); ++a) {
                if ((subset >> a) & 1ull) tangency[spine.edges[equal_arcs[a].first].id] = 2;
              }
              for (std::size_t c = 0; c < circles.size(); ++c) {
                signs.circles[circles[c].second] =
                    state[c] == 0 ? CircleSign::plus
                                  : state[c] == 1 ? CircleSign::minus : CircleSign::flipped;
                tangency[circles[c].second] = state[c] == 2 ? 2 : 0;
              }
              SynthesisResult result;
              result.certificate =
                  assemble(*outcome.witness(), std::move(signs), std::move(tangency));
              return result;
            }
            if (pay == 0) break;
            subset = next_same_popcount(subset);
          }
        }
        // advance the circle odometer
        std::size_t c = circles.size();
        while (c > 0 && state[c - 1] == 2) state[--c] = 0;
        if (c == 0) break;
        ++state[c - 1];
      }
    }
  }

  // unreachable: the all-plus pattern paying every nonpositive-weight edge is
  // feasible at the fallback total
  throw std::logic_error("minimization failed to reach the direct construction");
}

VerificationReport verify_certificate(const Spine& spine, const FoliationCertificate& cert) {
  SpineIndex index(spine);
  VerificationReport report;
  auto add = [&](std::string check, bool pass, std::string detail) {
    report.checks.push_back({std::move(check), pass, std::move(detail)});
  };

  // completeness: every lookup below must succeed, so bail out if not
  {
    std::string missing;
    if (cert.witness.x.size() != spine.edges.size()) {
      missing = "witness dimension " + std::to_string(cert.witness.x.size()) + " != edge count " +
                std::to_string(spine.edges.size());
    }
    for (const Vertex& v : spine.vertices) {
      for (int p : {1, 2}) {
        auto it = cert.passage_signs.vertex_passages.find({v.id, p});
        if (it == cert.passage_signs.vertex_passages.end()) {
          missing = "no sign for vertex " + v.id + " passage " + std::to_string(p);
        } else if (it->second != 1 && it->second != -1) {
          missing = "sign for vertex " + v.id + " passage " + std::to_string(p) + " is not +-1";
        }
      }
    }
    std::size_t n_circles = 0;
    for (const Edge& e : spine.edges) {
      if (e.kind == EdgeKind::circle) {
        ++n_circles;
        if (!cert.passage_signs.circles.count(e.id)) missing = "no state for circle " + e.id;
      }
      auto t = cert.tangency.find(e.id);
      if (t == cert.tangency.end()) {
        missing = "no tangency count for edge " + e.id;
      } else if (t->second < 0) {
        missing = "negative tangency count on edge " + e.id;
      }
    }
    if (missing.empty() &&
        cert.passage_signs.vertex_passages.size() != 2 * spine.vertices.size()) {
      missing = "passage map mentions unknown vertices";
    }
    if (missing.empty() && cert.passage_signs.circles.size() != n_circles) {
      missing = "circle map mentions unknown edges";
    }
    if (missing.empty() && cert.tangency.size() != spine.edges.size()) {
      missing = "tangency map mentions unknown edges";
    }
    add("completeness", missing.empty(), missing);
    if (!missing.empty()) return report;
  }

  add("s-stability", cert.ledger.t_minus == 0,
      "t_minus = " + std::to_string(cert.ledger.t_minus));

  {
    long total = cert.total_tangencies();
    std::ostringstream detail;
    detail << "sum of tangency counts = " << total << ", ledger t_plus = " << cert.ledger.t_plus;
    add("tangency-total", total == cert.ledger.t_plus, detail.str());
  }

  {
    bool pass = true;
    std::string detail;
    for (const circuits::Circuit& circuit : circuits::trace_circuits(index)) {
      long sum = 0;
      for (const std::string& id : circuit.edges) sum += cert.tangency.at(id);
      if (sum % 2 != 0) {
        pass = false;
        detail = "circuit through " + circuit.edges.front() + " carries " + std::to_string(sum) +
                 " tangency points";
        break;
      }
    }
    add("circuit-parity", pass, detail);
  }

  auto end_signs = [&](const Edge& e) {
    int ts = cert.passage_signs.vertex_passages.at({e.tail->vertex, index.tail_passage(e)});
    int hs = cert.passage_signs.vertex_passages.at({e.head->vertex, index.head_passage(e)});
    return std::pair<int, int>{ts, hs};
  };

  {
    bool pass = true;
    std::string detail;
    for (const Edge& e : spine.edges) {
      if (e.kind != EdgeKind::arc) continue;
      auto [ts, hs] = end_signs(e);
      long t = cert.tangency.at(e.id);
      bool want_odd = ts != hs;
      if ((t % 2 != 0) != want_odd) {
        pass = false;
        detail = "edge " + e.id + " has " + std::to_string(t) + " tangency points but its end signs " +
                 (want_odd ? "differ" : "agree");
        break;
      }
    }
    add("edge-parity", pass, detail);
  }

  {
    bool pass = true;
    std::string detail;
    for (std::size_t j = 0; j < spine.edges.size(); ++j) {
      const Edge& e = spine.edges[j];
      if (cert.tangency.at(e.id) != 0) continue;
      int expected = 0;
      if (e.kind == EdgeKind::arc) {
        auto [ts, hs] = end_signs(e);
        if (ts != hs) continue;  // already flagged by edge-parity
        expected = ts;
      } else {
        CircleSign s = cert.passage_signs.circles.at(e.id);
        if (s == CircleSign::flipped) continue;  // flagged by circle-consistency
        expected = s == CircleSign::plus ? 1 : -1;
      }
      if (rat_sign(cert.witness.x[j]) != expected) {
        pass = false;
        detail = "edge " + e.id + " has no tangency points, so its weight must be " +
                 (expected > 0 ? "positive" : "negative") + " but is " +
                 rat_to_string(cert.witness.x[j]);
        break;
      }
    }
    add("zero-tangency-sign", pass, detail);
  }

  {
    bool pass = true;
    std::string detail;
    for (const Edge& e : spine.edges) {
      if (e.kind != EdgeKind::circle) continue;
      long t = cert.tangency.at(e.id);
      CircleSign s = cert.passage_signs.circles.at(e.id);
      if (s == CircleSign::flipped) {
        if (t < 2 || t % 2 != 0) {
          pass = false;
          detail = "flipped circle " + e.id + " needs a positive even tangency count, has " +
                   std::to_string(t);
          break;
        }
      } else if (t != 0) {
        pass = false;
        detail = "circle " + e.id + " claims a constant sign but has " + std::to_string(t) +
                 " tangency points";
        break;
      }
    }
    add("circle-consistency", pass, detail);
  }

  {
    cone::StrictSystem system = cone::admissibility_system(spine);
    std::string why;
    bool pass = cone::verify_witness(system, cert.witness.x, &why);
    add("witness-positivity", pass, why);
  }

  {
    std::ostringstream detail;
    bool pass = false;
    long diff = cert.ledger.t_plus - cert.ledger.t_minus;
    if (cert.ledger.elliptic < 0 || cert.ledger.hyperbolic < 0 || cert.ledger.t_plus < 0 ||
        cert.ledger.t_minus < 0 || diff % 2 != 0) {
      detail << "ledger is malformed";
    } else {
      pass = ph_check(cert.ledger.elliptic, cert.ledger.hyperbolic, cert.ledger.t_plus,
                      cert.ledger.t_minus);
      detail << "e - h = " << cert.ledger.elliptic - cert.ledger.hyperbolic
             << ", 1 + (t+ - t-)/2 = " << 1 + diff / 2;
    }
    add("ledger-identity", pass, detail.str());
  }

  {
    circuits::SpineClass cls = circuits::classify(index);
    bool premise = cls.is_flow_spine && !preferred_regions(spine).empty();
    if (!premise) {
      add("tangency-lower-bound", true, "no preferred region on a flow-spine; bound vacuous");
    } else {
      long total = cert.total_tangencies();
      add("tangency-lower-bound", total >= 2,
          "flow-spine with a preferred region carries " + std::to_string(total) +
              " tangency points");
    }
  }

  return report;
}

}  // namespace spinekit::foliation
