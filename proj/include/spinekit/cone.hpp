#ifndef SPINEKIT_CONE_HPP
#define SPINEKIT_CONE_HPP

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "spinekit/model.hpp"
#include "spinekit/rational.hpp"

namespace spinekit::cone {

// row value = coeffs . x + constant
struct LinearForm {
  std::vector<Rat> coeffs;
  Rat constant = 0;
};

// Conjunction of strict inequalities (each row > 0), exact equalities
// (each row = 0) and per-variable sign requirements (sign . x_j > 0).
// The admissibility cone C(P) is the homogeneous all-strict case built from
// the incidence matrix.
struct StrictSystem {
  std::vector<std::string> variables;
  std::vector<LinearForm> strict;
  std::vector<LinearForm> equalities;
  std::map<std::size_t, int> sign_constraints;

  bool homogeneous() const;  // every constant term is zero
};

struct Witness {
  std::vector<Rat> x;
};

// Multipliers proving the system empty: all nonnegative except the free
// equality multipliers, summing to 1 across strict + sign + slack, with
//   sum_i y_i a_i + sum_s y_s sign_s e_{col_s} + sum_k z_k g_k = 0   (coefficients)
//   sum_i y_i d_i + y_slack + sum_k z_k c_k = 0                      (constants)
// Dotting with any admissible (x, 1) would force a positive number to be 0.
// For homogeneous systems without equalities this reduces to Gordan's
// theorem: y >= 0, sum y = 1, y^T C = 0.
struct InfeasibilityCertificate {
  std::vector<Rat> strict_multipliers;    // per strict row
  std::vector<Rat> sign_multipliers;      // per sign constraint, ascending column
  Rat slack_multiplier = 0;               // weight on the homogenization row
  std::vector<Rat> equality_multipliers;  // per equality, free sign
};

struct FeasibilityOutcome {
  std::variant<Witness, InfeasibilityCertificate> result;
  std::vector<std::string> notes;

  bool feasible() const { return std::holds_alternative<Witness>(result); }
  const Witness* witness() const { return std::get_if<Witness>(&result); }
  const InfeasibilityCertificate* certificate() const {
    return std::get_if<InfeasibilityCertificate>(&result);
  }
};

// Decides the system exactly: a witness satisfying every constraint, or a
// certificate proving none exists. Never "unknown". Method: maximize t
// subject to row >= t on every strict row (after homogenizing constants with
// a slack coordinate) inside a bounding box, by exact rational simplex with
// Bland's rule; t > 0 yields the witness, t = 0 triggers a second solve for
// the dual multipliers. Witnesses of homogeneous systems are scaled so the
// smallest strict row value is exactly 1.
// Throws std::invalid_argument on dimension mismatches.
FeasibilityOutcome feasible_strict(const StrictSystem& system);

// Substitution checks; they recompute everything from scratch and are the
// soundness backstop for the solver.
bool verify_witness(const StrictSystem& system, const std::vector<Rat>& x,
                    std::string* why = nullptr);
bool verify_certificate(const StrictSystem& system, const InfeasibilityCertificate& cert,
                        std::string* why = nullptr);

// C(P) nonempty? Strict system with one row per region, one column per edge.
FeasibilityOutcome admissible(const model::Spine& spine);

// Is {x in C(P) : x_j > 0 for all j} empty?
struct OrthantResult {
  bool empty = false;
  FeasibilityOutcome outcome;
};
OrthantResult positive_orthant_empty(const model::Spine& spine);

// The admissibility system for a spine's incidence matrix, without sign
// constraints; shared by admissible(), the orthant probe and the foliation
// search.
StrictSystem admissibility_system(const model::Spine& spine);

}  // namespace spinekit::cone

#endif
