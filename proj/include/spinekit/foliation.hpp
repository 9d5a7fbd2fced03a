#ifndef SPINEKIT_FOLIATION_HPP
#define SPINEKIT_FOLIATION_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "spinekit/cone.hpp"
#include "spinekit/model.hpp"

namespace spinekit::foliation {

// Sign of the defining 1-form along a circle edge: constant (+ or -) or
// non-constant ("flipped", an even number of tangency points on the circle).
enum class CircleSign { plus, minus, flipped };

// Sign data of a combinatorial foliation: one sign per strand passage at
// each vertex (passage 1 runs through in1, passage 2 through in2), plus one
// state per circle edge. Arc-edge end signs are read off the passages at
// their tail and head.
struct PassageSigns {
  std::map<std::pair<std::string, int>, int> vertex_passages;
  std::map<std::string, CircleSign> circles;
};

// H-piece type of a vertex under the given signs: "1+" for (+,+), "1-" for
// (-,-), "2" for mixed.
std::string h_piece_label(const PassageSigns& signs, const std::string& vertex_id);

struct Ledger {
  long elliptic = 0;
  long hyperbolic = 0;
  long t_plus = 0;   // tangency points of index +1
  long t_minus = 0;  // index -1; always 0 for S-stable foliations
};

// Everything needed to certify an S-stable foliation combinatorially: the
// edge weights (integrals of the 1-form), the sign pattern, the number of
// simple tangency points per edge and the global singularity ledger.
struct FoliationCertificate {
  cone::Witness witness;  // aligned with the spine's edge input order
  PassageSigns passage_signs;
  std::map<std::string, long> tangency;
  Ledger ledger;

  long total_tangencies() const;
};

struct CheckResult {
  std::string check;
  bool pass = false;
  std::string detail;
};

struct VerificationReport {
  std::vector<CheckResult> checks;
  bool ok() const;
};

// Regions all of whose boundary traversals run against the edge
// orientations. Input order preserved.
std::vector<std::string> preferred_regions(const model::Spine& spine);

struct TangencyBound {
  enum class Reason { none, preferred_region, parity };
  long lower = 0;
  Reason reason = Reason::none;
};

// 2 when the spine is a flow-spine with a preferred region (no S-stable
// foliation can then avoid tangency points), otherwise 0.
TangencyBound tangency_lower_bound(const model::Spine& spine);

struct SynthesisResult {
  std::optional<FoliationCertificate> certificate;
  // set instead of `certificate` when the spine is inadmissible
  std::optional<cone::InfeasibilityCertificate> inadmissible;
  std::vector<std::string> notes;

  bool ok() const { return certificate.has_value(); }
};

// Direct construction: all passage signs +1, two tangency points on every
// edge whose weight fails to be positive (none elsewhere), no hyperbolic
// singularities. Total tangencies never exceed 2m.
SynthesisResult synthesize_direct(const model::Spine& spine);
SynthesisResult synthesize_direct(const model::Spine& spine, const cone::Witness& witness);

// Minimum-total construction: iterative deepening over the total number of
// tangency points; for each budget, sign patterns are enumerated in
// lexicographic order (+ before -, vertices in input order, passage 1 before
// passage 2; then circle states + < - < flipped; then paid-edge subsets in
// increasing bitmask order) and each candidate is decided exactly by the
// cone module. Deterministic. If `budget` is given and every total up to it
// fails, falls back to the direct construction and says so in the notes.
SynthesisResult synthesize_minimal(const model::Spine& spine,
                                   std::optional<long> budget = std::nullopt);

// Exhaustive exact re-check of a certificate against its spine; every
// invariant is reported individually.
VerificationReport verify_certificate(const model::Spine& spine,
                                      const FoliationCertificate& cert);

// Poincare-Hopf ledger identity: e - h = 1 + (t_plus - t_minus)/2.
// Throws std::invalid_argument on negative inputs or odd difference.
bool ph_check(long e, long h, long t_plus, long t_minus);

}  // namespace spinekit::foliation

#endif
