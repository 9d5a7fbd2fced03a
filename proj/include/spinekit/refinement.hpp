#ifndef SPINEKIT_REFINEMENT_HPP
#define SPINEKIT_REFINEMENT_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "spinekit/cone.hpp"
#include "spinekit/rational.hpp"

namespace spinekit::refinement {

// One linear condition over subdivision variables and edge-weight
// parameters: sum(var_coeffs . A) + sum(weight_coeffs . E) + constant,
// required = 0 (equalities) or > 0 (inequalities).
struct Constraint {
  std::map<std::string, Rat> var_coeffs;
  std::map<std::string, Rat> weight_coeffs;  // keyed by edge id
  Rat constant = 0;

  bool operator==(const Constraint&) const = default;
};

// Leaf-insertion system: a spine edge's weight is split across named
// boundary arcs; the equalities group arcs back to edge weights, the
// strict inequalities demand positive sums around each sub-region.
struct RefinementSystem {
  std::string name;
  std::vector<std::string> variables;
  std::map<std::string, Rat> edge_weights;  // bound parameter values
  std::vector<Constraint> equalities;
  std::vector<Constraint> inequalities;
  std::optional<std::vector<Rat>> expected_solution;  // aligned with variables

  bool operator==(const RefinementSystem&) const = default;
};

// Substitutes the bound edge weights into the constants and reindexes the
// named variables into columns. Throws std::invalid_argument on references
// to undeclared variables or unbound edge weights.
cone::StrictSystem lower(const RefinementSystem& system);

cone::FeasibilityOutcome solve_refinement(const RefinementSystem& system);

bool verify_solution(const RefinementSystem& system, const std::vector<Rat>& values,
                     std::string* why = nullptr);

}  // namespace spinekit::refinement

#endif
