#include "spinekit/refinement.hpp"

#include <stdexcept>

namespace spinekit::refinement {

namespace {

cone::LinearForm lower_constraint(const RefinementSystem& system,
                                  const std::map<std::string, std::size_t>& column,
                                  const Constraint& c) {
  cone::LinearForm f;
  f.coeffs.assign(system.variables.size(), Rat(0));
  for (const auto& [name, coeff] : c.var_coeffs) {
    auto it = column.find(name);
    if (it == column.end()) {
      throw std::invalid_argument("constraint references undeclared variable '" + name + "'");
    }
    f.coeffs[it->second] += coeff;
  }
  f.constant = c.constant;
  for (const auto& [edge, coeff] : c.weight_coeffs) {
    auto it = system.edge_weights.find(edge);
    if (it == system.edge_weights.end()) {
      throw std::invalid_argument("edge weight '" + edge + "' is not bound to a value");
    }
    f.constant += coeff * it->second;
  }
  return f;
}

}  // namespace

cone::StrictSystem lower(const RefinementSystem& system) {
  std::map<std::string, std::size_t> column;
  for (std::size_t j = 0; j < system.variables.size(); ++j) {
    if (!column.emplace(system.variables[j], j).second) {
      throw std::invalid_argument("variable '" + system.variables[j] + "' declared twice");
    }
  }

  cone::StrictSystem out;
  out.variables = system.variables;
  for (const Constraint& c : system.inequalities) {
    out.strict.push_back(lower_constraint(system, column, c));
  }
  for (const Constraint& c : system.equalities) {
    out.equalities.push_back(lower_constraint(system, column, c));
  }
  return out;
}

cone::FeasibilityOutcome solve_refinement(const RefinementSystem& system) {
  return cone::feasible_strict(lower(system));
}

bool verify_solution(const RefinementSystem& system, const std::vector<Rat>& values,
                     std::string* why) {
  return cone::verify_witness(lower(system), values, why);
}

}  // namespace spinekit::refinement
