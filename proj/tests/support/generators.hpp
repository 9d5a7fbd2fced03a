#ifndef SPINEKIT_TESTS_GENERATORS_HPP
#define SPINEKIT_TESTS_GENERATORS_HPP

// Seeded random generators shared by the property tests.

#include <spinekit/cone.hpp>
#include <spinekit/model.hpp>

#include <random>
#include <string>
#include <vector>

namespace spinekit::tests {

// Random valid spine: n vertices, 2n arc edges built from a random bijection
// of all out-ports onto all in-ports, random pairings and types, plus
// `circles` circle edges. Every edge contributes a (+,+,-) wing triple;
// the 3(2n+circles) traversals are dealt randomly into n+1 disk regions
// (nonempty), giving three wings and signed column sum 1 per edge, Euler
// characteristic 1, and an interesting spread of incidence rows — some
// spines come out admissible, some do not.
// With `clash` set, the first edge's lone negative wing and one of its
// positive wings are parked in single-traversal regions of their own, so the
// weight system contains both x > 0 and -x > 0 and the spine is guaranteed
// inadmissible (everything stays valid).
inline model::Spine random_spine(std::mt19937& rng, int n, int circles = 0, bool clash = false) {
  using namespace model;
  Spine s;
  s.name = "random";
  for (int i = 0; i < n; ++i) {
    Pairing p = rng() % 2 ? Pairing{OutPort::out1, OutPort::out2}
                          : Pairing{OutPort::out2, OutPort::out1};
    s.vertices.push_back({"v" + std::to_string(i), rng() % 2 ? VertexType::L : VertexType::R, p});
  }
  std::vector<TailRef> tails;
  std::vector<HeadRef> heads;
  for (int i = 0; i < n; ++i) {
    std::string id = "v" + std::to_string(i);
    tails.push_back({id, OutPort::out1});
    tails.push_back({id, OutPort::out2});
    heads.push_back({id, InPort::in1});
    heads.push_back({id, InPort::in2});
  }
  std::shuffle(heads.begin(), heads.end(), rng);
  for (std::size_t i = 0; i < tails.size(); ++i) {
    s.edges.push_back({"e" + std::to_string(i), EdgeKind::arc, tails[i], heads[i]});
  }
  for (int i = 0; i < circles; ++i) {
    s.edges.push_back({"c" + std::to_string(i), EdgeKind::circle, std::nullopt, std::nullopt});
  }

  std::vector<Traversal> deck;
  for (const Edge& e : s.edges) {
    deck.push_back({e.id, 1});
    deck.push_back({e.id, 1});
    deck.push_back({e.id, -1});
  }
  if (clash) {
    s.regions.push_back({"Rneg", 0, {{{s.edges[0].id, -1}}}});
    s.regions.push_back({"Rpos", 1, {{{s.edges[0].id, 1}}}});
    deck.erase(deck.begin());      // one + wing of e0
    deck.erase(deck.begin() + 1);  // its - wing
  }
  std::shuffle(deck.begin(), deck.end(), rng);
  std::size_t n_regions = static_cast<std::size_t>(n) + (clash ? 0 : 1);
  std::size_t base = s.regions.size();
  s.regions.resize(base + n_regions);
  for (std::size_t r = 0; r < n_regions; ++r) {
    s.regions[base + r].id = "R" + std::to_string(r);
    s.regions[base + r].boundary = {{deck[r]}};  // guarantee nonemptiness
  }
  for (std::size_t i = n_regions; i < deck.size(); ++i) {
    s.regions[base + rng() % n_regions].boundary[0].push_back(deck[i]);
  }
  return s;
}

// Random strict system: small integer coefficients, optional affine
// constants, equalities and sign constraints.
struct SystemOptions {
  std::size_t min_vars = 2, max_vars = 5;
  std::size_t max_strict = 6;
  std::size_t max_equalities = 2;
  bool affine = false;
  bool with_signs = false;
};

inline cone::StrictSystem random_system(std::mt19937& rng, const SystemOptions& opt) {
  using spinekit::make_rat;
  cone::StrictSystem s;
  std::uniform_int_distribution<long> coeff(-4, 4);
  std::size_t n = opt.min_vars + rng() % (opt.max_vars - opt.min_vars + 1);
  for (std::size_t j = 0; j < n; ++j) s.variables.push_back("x" + std::to_string(j));
  std::size_t rows = 1 + rng() % opt.max_strict;
  for (std::size_t i = 0; i < rows; ++i) {
    cone::LinearForm f;
    for (std::size_t j = 0; j < n; ++j) f.coeffs.push_back(make_rat(coeff(rng)));
    if (opt.affine) f.constant = make_rat(coeff(rng));
    s.strict.push_back(std::move(f));
  }
  if (opt.max_equalities > 0) {
    std::size_t eqs = rng() % (opt.max_equalities + 1);
    for (std::size_t k = 0; k < eqs; ++k) {
      cone::LinearForm f;
      for (std::size_t j = 0; j < n; ++j) f.coeffs.push_back(make_rat(coeff(rng)));
      if (opt.affine) f.constant = make_rat(coeff(rng));
      s.equalities.push_back(std::move(f));
    }
  }
  if (opt.with_signs) {
    for (std::size_t j = 0; j < n; ++j) {
      int roll = static_cast<int>(rng() % 3);
      if (roll == 0) s.sign_constraints[j] = 1;
      if (roll == 1) s.sign_constraints[j] = -1;
    }
  }
  return s;
}

}  // namespace spinekit::tests

#endif
