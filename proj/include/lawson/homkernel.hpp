#pragma once

#include "lawson/abelian.hpp"
#include "lawson/engine.hpp"
#include "lawson/variety.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace lawson {

/// Kernel of the cycle class map L_pH_k(v) -> H_k(v).
///
/// Vanishes for p <= 0 and p >= dim-1. Otherwise the kernel is distributed
/// over the bundle and blowup decompositions, and atoms answer from their
/// annotations (Unknown when absent, 0 for dim <= 2).
GroupExpr hom(const Variety& v, int p, int k, Trace* trace = nullptr);

/// Griff_p(v) = L_pH_{2p}(v)_hom. Requires 0 <= p <= dim.
GroupExpr griffiths(const Variety& v, int p);

struct HomTable {
  Variety variety;
  std::vector<TableEntry> entries;

  const TableEntry* at(int p, int k) const;
};

HomTable hom_table(const Variety& v);

/// X_0, X_1, ..., X_m where each X_{i+1} is a blowup of X_i and X_m = top.
/// A variety that is not a blowup is a tower of length 0.
std::vector<Variety> unroll_tower(const Variety& top);

enum class Fate { h0_vanish, r4_vanish, survives };
const char* fate_name(Fate f);

/// Classifies the blowup_j summand hom(Y, p-j, k-2j) by its indices alone.
Fate extra_summand_fate(int p, int j, int center_dim);

/// One extra summand contributed by one blowup step.
struct ExtraSummand {
  int step = 0; // 1-based
  int p = 0;
  int k = 0;
  int j = 0;
  std::string center;
  int center_p = 0;
  int center_k = 0;
  Fate fate = Fate::survives;
  GroupExpr expr;

  /// "L_{p-j}H_{k-2j}(center)_hom"
  std::string label() const;
};

struct HomComparison {
  int p = 0;
  int k = 0;
  GroupExpr bottom;
  GroupExpr top;
  bool equal = false;
  /// Both sides carry Unknown; equality holds only as expressions.
  bool equal_as_expressions = false;
  /// p = 1 or p = n-2, where equality is required.
  bool required = false;
};

struct InvarianceReport {
  std::vector<std::string> tower; // DSL text of X_0 .. X_m
  int n = 0;
  std::vector<ExtraSummand> extras;
  std::vector<HomComparison> comparisons;

  /// Every required comparison holds and every required extra summand died by index.
  bool invariant() const;
  /// Cycle dimensions 2 <= p <= n-3 whose hom-kernel changed across the tower.
  std::vector<int> non_invariant_dimensions() const;
};

/// Optional restriction of the bigrades examined.
struct BigradeFilter {
  std::optional<int> p;
  std::optional<int> k;
};

/// Compares hom(X_m, p, k) with hom(X_0, p, k) for 1 <= p <= n-2, k >= 2p,
/// and records the fate of every extra summand each blowup step adds.
/// Throws std::invalid_argument unless every step is a blowup of its
/// predecessor.
InvarianceReport check_invariance(std::span<const Variety> tower, const BigradeFilter& filter = {});

} // namespace lawson
