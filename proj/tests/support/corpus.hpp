#pragma once

// Test-only helpers: a seeded generator of blowup towers and oracles that
// do not go through the engine's rewrite rules.

#include "lawson/variety.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <random>
#include <vector>

namespace lawson::testing {

/// Curve and surface atoms with complete singular tables.
struct AtomShelf {
  std::shared_ptr<const AtomDecl> elliptic;
  std::shared_ptr<const AtomDecl> genus2;
  std::shared_ptr<const AtomDecl> k3;
  std::shared_ptr<const AtomDecl> enriques;
  std::shared_ptr<const AtomDecl> quintic; // dim 3, hom(1,2) = INF_Q

  static const AtomShelf& instance();
};

std::shared_ptr<const AtomDecl> make_atom(std::string id, int dim, std::vector<GroupExpr> table,
                                          std::optional<int> ns = std::nullopt);

/// Ambient P(n) with 2 <= n <= 6 and up to `max_length` blowups along
/// points, lines, planes, curve atoms and surface atoms.
struct TowerGenerator {
  explicit TowerGenerator(std::uint32_t seed) : rng(seed) {}

  Variety next(int max_length = 3, int min_length = 1);
  Variety random_center(int max_dim);

  std::mt19937 rng;
};

/// Seeded corpus used by the acceptance criteria.
std::vector<Variety> random_corpus(std::uint32_t seed, int count);

/// Rank of L_pH_k(P^n) by expanding P^n = P(C^{n+1}) over a point with the
/// bundle formula alone: L_qH_m(pt) = Z iff max(q,0) = 0 and m = 0.
int projective_oracle_rank(int n, int p, int k);

/// For a finite abelian group given as a product of cyclic groups, the
/// number of elements of each order, by enumeration.
std::map<std::int64_t, std::int64_t> order_profile(const std::vector<std::int64_t>& cyclic_orders);

/// Betti numbers computed from a hand-rolled recursion over the tree:
/// b_k(P^n) = [k even], bundle and blowup sums, atom tables.
std::int64_t betti_oracle(const Variety& v, int k);

} // namespace lawson::testing
