#pragma once

#include "lawson/abelian.hpp"
#include "lawson/variety.hpp"

#include <span>
#include <string>
#include <vector>

namespace lawson {

enum class Verdict { pass, fail, inconclusive };
const char* verdict_name(Verdict v);

/// Combines verdicts: any fail wins, then any inconclusive.
Verdict combine(Verdict a, Verdict b);

using RankSequence = std::vector<ExtendedRank>;

/// Rank-level necessary condition for exactness of a bounded sequence
/// 0 -> A_1 -> ... -> A_m -> 0: the alternating sum of ranks vanishes.
/// Inconclusive when a rank is infinite or unknown.
Verdict rank_exactness(std::span<const ExtendedRank> seq);

struct CheckLine {
  int k = 0;
  Verdict verdict = Verdict::pass;
  std::string detail;
};

struct CheckReport {
  std::string name;
  std::string subject;
  Verdict verdict = Verdict::pass;
  std::vector<CheckLine> lines;

  void add(int k, Verdict v, std::string detail);
};

/// For a blowup X~ of X along Y with exceptional divisor D = P(N_{Y/X}),
/// checks rank H_k(X~) - rank H_k(X) = rank H_k(D) - rank H_k(Y) for every
/// k in [k_lo, k_hi].
CheckReport ladder_rank_check(const Variety& blowup_node, int k_lo, int k_hi);

/// rank H_k(X~) = rank H_k(X) + sum_{j=1}^{r-1} rank H_{k-2j}(Y).
CheckReport blowup_betti_check(const Variety& blowup_node, int k_lo, int k_hi);

/// L_0H_k(v) against H_k(v) for every k in [0, 2 dim].
CheckReport dold_thom_check(const Variety& v);

/// At every composite node of dim >= 2, the decomposition value of
/// L_{n-1}H_{2n-2} equals Z^{ns_rank}.
CheckReport ns_coherence_check(const Variety& v);

/// hom(v, p, k) = 0 for p in {0, n-1, n} over the whole table.
CheckReport forced_vanishing_check(const Variety& v);

/// L_nH_{2n}(v) = Z at every node of the tree.
CheckReport top_degree_check(const Variety& v);

/// Every check above, applied to v and (for the blowup checks) to every
/// blowup node inside v.
std::vector<CheckReport> validate(const Variety& v);

} // namespace lawson
