#include "spinekit/cone.hpp"

#include <sstream>
#include <stdexcept>

#include "simplex.hpp"

namespace spinekit::cone {

using lp::LpProblem;
using lp::LpSolution;
using lp::LpStatus;

bool StrictSystem::homogeneous() const {
  for (const LinearForm& f : strict) {
    if (f.constant != 0) return false;
  }
  for (const LinearForm& f : equalities) {
    if (f.constant != 0) return false;
  }
  return true;
}

namespace {

void check_shape(const StrictSystem& system) {
  std::size_t n = system.variables.size();
  for (const LinearForm& f : system.strict) {
    if (f.coeffs.size() != n) throw std::invalid_argument("strict row width != variable count");
  }
  for (const LinearForm& f : system.equalities) {
    if (f.coeffs.size() != n) throw std::invalid_argument("equality width != variable count");
  }
  for (const auto& [col, sign] : system.sign_constraints) {
    if (col >= n) throw std::invalid_argument("sign constraint on unknown column");
    if (sign != 1 && sign != -1) throw std::invalid_argument("sign constraint must be +-1");
  }
}

// Primal LP: substitute x = w - 1 to put the box -1 <= x <= 1 into standard
// form, adjoin a homogenizing coordinate u and maximize the common slack t
// with
//   strict row i:   a_i.w + d_i u - t - s_i = sum_j a_ij     (s_i >= 0)
//   homogenizer:    u - t - s_u = 0
//   sign (j, s):    s w_j - t - r = s
//   box:            w_j + p_j = 2,  u + q = 1
//   equality k:     g_k.w + c_k u = sum_j g_kj
// The system has a solution iff the optimum t* is strictly positive, in
// which case (w - 1)/u is one.
struct Homogenized {
  LpProblem lp;
  std::size_t t_col = 0;
  std::size_t u_col = 0;
};

Homogenized build_primal(const StrictSystem& system) {
  std::size_t n_vars = system.variables.size();
  std::size_t n_strict = system.strict.size();
  std::size_t n_signs = system.sign_constraints.size();

  Homogenized h;
  std::size_t w0 = 0;
  h.u_col = n_vars;
  h.t_col = n_vars + 1;
  std::size_t slack0 = n_vars + 2;
  std::size_t n_cols = slack0 + n_strict + 1 + n_signs + n_vars + 1;

  auto new_row = [&](Rat rhs) -> std::vector<Rat>& {
    h.lp.a.emplace_back(n_cols, Rat(0));
    h.lp.b.push_back(rhs);
    return h.lp.a.back();
  };

  std::size_t slack = slack0;
  for (const LinearForm& f : system.strict) {
    Rat rhs = 0;
    for (const Rat& a : f.coeffs) rhs += a;
    auto& row = new_row(rhs);
    for (std::size_t j = 0; j < n_vars; ++j) row[w0 + j] = f.coeffs[j];
    row[h.u_col] = f.constant;
    row[h.t_col] = -1;
    row[slack++] = -1;
  }
  {
    auto& row = new_row(0);
    row[h.u_col] = 1;
    row[h.t_col] = -1;
    row[slack++] = -1;
  }
  for (const auto& [col, sign] : system.sign_constraints) {
    auto& row = new_row(sign);
    row[w0 + col] = sign;
    row[h.t_col] = -1;
    row[slack++] = -1;
  }
  for (std::size_t j = 0; j < n_vars; ++j) {
    auto& row = new_row(2);
    row[w0 + j] = 1;
    row[slack++] = 1;
  }
  {
    auto& row = new_row(1);
    row[h.u_col] = 1;
    row[slack++] = 1;
  }
  for (const LinearForm& f : system.equalities) {
    Rat rhs = 0;
    for (const Rat& g : f.coeffs) rhs += g;
    auto& row = new_row(rhs);
    for (std::size_t j = 0; j < n_vars; ++j) row[w0 + j] = f.coeffs[j];
    row[h.u_col] = f.constant;
  }

  h.lp.c.assign(n_cols, Rat(0));
  h.lp.c[h.t_col] = 1;
  return h;
}

// Multiplier LP for an infeasible system (Motzkin transposition applied to
// the homogenized form): find y >= 0 per strict row, per sign row and for
// the homogenizer, plus free z per equality (split z = zp - zn), with every
// variable column and the constant column balanced to zero and the
// nonnegative multipliers summing to one.
InfeasibilityCertificate extract_certificate(const StrictSystem& system) {
  std::size_t n_vars = system.variables.size();
  std::size_t n_strict = system.strict.size();
  std::size_t n_signs = system.sign_constraints.size();
  std::size_t n_eq = system.equalities.size();

  std::size_t y0 = 0;
  std::size_t ysign0 = n_strict;
  std::size_t yu = ysign0 + n_signs;
  std::size_t zp0 = yu + 1;
  std::size_t zn0 = zp0 + n_eq;
  std::size_t n_cols = zn0 + n_eq;

  LpProblem lp;
  auto new_row = [&](Rat rhs) -> std::vector<Rat>& {
    lp.a.emplace_back(n_cols, Rat(0));
    lp.b.push_back(rhs);
    return lp.a.back();
  };

  for (std::size_t j = 0; j < n_vars; ++j) {
    auto& row = new_row(0);
    for (std::size_t i = 0; i < n_strict; ++i) row[y0 + i] = system.strict[i].coeffs[j];
    std::size_t s = 0;
    for (const auto& [col, sign] : system.sign_constraints) {
      if (col == j) row[ysign0 + s] = sign;
      ++s;
    }
    for (std::size_t k = 0; k < n_eq; ++k) {
      row[zp0 + k] = system.equalities[k].coeffs[j];
      row[zn0 + k] = -system.equalities[k].coeffs[j];
    }
  }
  {
    auto& row = new_row(0);
    for (std::size_t i = 0; i < n_strict; ++i) row[y0 + i] = system.strict[i].constant;
    row[yu] = 1;
    for (std::size_t k = 0; k < n_eq; ++k) {
      row[zp0 + k] = system.equalities[k].constant;
      row[zn0 + k] = -system.equalities[k].constant;
    }
  }
  {
    auto& row = new_row(1);
    for (std::size_t i = y0; i <= yu; ++i) row[i] = 1;
  }
  lp.c.assign(n_cols, Rat(0));

  LpSolution solution = lp::solve_lp(lp);
  if (solution.status != LpStatus::optimal) {
    throw std::logic_error("multiplier system unsolvable; solver disagreement");
  }

  InfeasibilityCertificate cert;
  for (std::size_t i = 0; i < n_strict; ++i) cert.strict_multipliers.push_back(solution.v[y0 + i]);
  for (std::size_t s = 0; s < n_signs; ++s) cert.sign_multipliers.push_back(solution.v[ysign0 + s]);
  cert.slack_multiplier = solution.v[yu];
  for (std::size_t k = 0; k < n_eq; ++k) {
    Rat z = solution.v[zp0 + k] - solution.v[zn0 + k];
    cert.equality_multipliers.push_back(z);
  }
  return cert;
}

}  // namespace

FeasibilityOutcome feasible_strict(const StrictSystem& system) {
  check_shape(system);

  FeasibilityOutcome outcome;
  for (std::size_t i = 0; i < system.strict.size(); ++i) {
    const LinearForm& f = system.strict[i];
    bool zero = f.constant == 0;
    for (const Rat& a : f.coeffs) zero = zero && a == 0;
    if (zero) {
      outcome.notes.push_back("strict row " + std::to_string(i) +
                              " is identically zero; 0 > 0 is unsatisfiable");
    }
  }

  Homogenized h = build_primal(system);
  LpSolution solution = lp::solve_lp(h.lp);
  if (solution.status != LpStatus::optimal) {
    throw std::logic_error("homogenized feasibility LP must have an optimum");
  }

  if (solution.objective > 0) {
    Rat u = solution.v[h.u_col];
    Witness w;
    for (std::size_t j = 0; j < system.variables.size(); ++j) {
      Rat x = (solution.v[j] - 1) / u;
      w.x.push_back(x);
    }
    if (system.homogeneous()) {
      // deterministic representative: smallest strict quantity becomes 1
      std::optional<Rat> min_value;
      auto consider = [&](Rat value) {
        if (!min_value || value < *min_value) min_value = value;
      };
      for (const LinearForm& f : system.strict) {
        Rat value = f.constant;
        for (std::size_t j = 0; j < w.x.size(); ++j) value += f.coeffs[j] * w.x[j];
        consider(value);
      }
      for (const auto& [col, sign] : system.sign_constraints) {
        Rat value = sign * w.x[col];
        consider(value);
      }
      if (min_value && *min_value > 0) {
        for (Rat& x : w.x) x /= *min_value;
      }
    }
    outcome.result = std::move(w);
    return outcome;
  }

  outcome.result = extract_certificate(system);
  return outcome;
}

bool verify_witness(const StrictSystem& system, const std::vector<Rat>& x, std::string* why) {
  auto fail = [&](const std::string& message) {
    if (why) *why = message;
    return false;
  };
  if (x.size() != system.variables.size()) return fail("witness has wrong dimension");
  for (std::size_t i = 0; i < system.strict.size(); ++i) {
    Rat value = system.strict[i].constant;
    for (std::size_t j = 0; j < x.size(); ++j) value += system.strict[i].coeffs[j] * x[j];
    if (value <= 0) {
      std::ostringstream msg;
      msg << "strict row " << i << " evaluates to " << value.get_str() << ", not > 0";
      return fail(msg.str());
    }
  }
  for (std::size_t k = 0; k < system.equalities.size(); ++k) {
    Rat value = system.equalities[k].constant;
    for (std::size_t j = 0; j < x.size(); ++j) value += system.equalities[k].coeffs[j] * x[j];
    if (value != 0) {
      std::ostringstream msg;
      msg << "equality " << k << " evaluates to " << value.get_str() << ", not 0";
      return fail(msg.str());
    }
  }
  for (const auto& [col, sign] : system.sign_constraints) {
    Rat value = sign * x[col];
    if (value <= 0) {
      std::ostringstream msg;
      msg << "sign constraint on column " << col << " violated";
      return fail(msg.str());
    }
  }
  return true;
}

bool verify_certificate(const StrictSystem& system, const InfeasibilityCertificate& cert,
                        std::string* why) {
  auto fail = [&](const std::string& message) {
    if (why) *why = message;
    return false;
  };
  if (cert.strict_multipliers.size() != system.strict.size() ||
      cert.sign_multipliers.size() != system.sign_constraints.size() ||
      cert.equality_multipliers.size() != system.equalities.size()) {
    return fail("certificate has wrong shape");
  }

  Rat total = cert.slack_multiplier;
  if (cert.slack_multiplier < 0) return fail("slack multiplier is negative");
  for (const Rat& y : cert.strict_multipliers) {
    if (y < 0) return fail("strict multiplier is negative");
    total += y;
  }
  for (const Rat& y : cert.sign_multipliers) {
    if (y < 0) return fail("sign multiplier is negative");
    total += y;
  }
  if (total != 1) return fail("multipliers do not sum to 1");

  for (std::size_t j = 0; j < system.variables.size(); ++j) {
    Rat sum = 0;
    for (std::size_t i = 0; i < system.strict.size(); ++i) {
      sum += cert.strict_multipliers[i] * system.strict[i].coeffs[j];
    }
    std::size_t s = 0;
    for (const auto& [col, sign] : system.sign_constraints) {
      if (col == j) sum += cert.sign_multipliers[s] * sign;
      ++s;
    }
    for (std::size_t k = 0; k < system.equalities.size(); ++k) {
      sum += cert.equality_multipliers[k] * system.equalities[k].coeffs[j];
    }
    if (sum != 0) {
      std::ostringstream msg;
      msg << "column " << system.variables[j] << " does not balance: " << sum.get_str();
      return fail(msg.str());
    }
  }

  Rat constants = cert.slack_multiplier;
  for (std::size_t i = 0; i < system.strict.size(); ++i) {
    constants += cert.strict_multipliers[i] * system.strict[i].constant;
  }
  for (std::size_t k = 0; k < system.equalities.size(); ++k) {
    constants += cert.equality_multipliers[k] * system.equalities[k].constant;
  }
  if (constants != 0) return fail("constant column does not balance");
  return true;
}

StrictSystem admissibility_system(const model::Spine& spine) {
  model::IncidenceMatrix m = model::incidence_matrix(spine);
  StrictSystem system;
  system.variables = m.cols;
  for (const auto& row : m.entries) {
    LinearForm f;
    for (long v : row) f.coeffs.push_back(make_rat(v));
    system.strict.push_back(std::move(f));
  }
  return system;
}

FeasibilityOutcome admissible(const model::Spine& spine) {
  return feasible_strict(admissibility_system(spine));
}

OrthantResult positive_orthant_empty(const model::Spine& spine) {
  StrictSystem system = admissibility_system(spine);
  for (std::size_t j = 0; j < system.variables.size(); ++j) system.sign_constraints[j] = 1;
  OrthantResult result;
  result.outcome = feasible_strict(system);
  result.empty = !result.outcome.feasible();
  return result;
}

}  // namespace spinekit::cone
