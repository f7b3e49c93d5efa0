#include "lawson/validator.hpp"

#include "lawson/engine.hpp"
#include "lawson/homkernel.hpp"

#include <functional>

namespace lawson {

namespace {

void collect_nodes(const Variety& v, std::vector<Variety>& out) {
  out.push_back(v);
  if (v.kind() == NodeKind::proj_bundle) collect_nodes(v.base(), out);
  if (v.kind() == NodeKind::blowup) {
    collect_nodes(v.base(), out);
    collect_nodes(v.center(), out);
  }
}

std::vector<Variety> nodes_of(const Variety& v) {
  std::vector<Variety> out;
  collect_nodes(v, out);
  return out;
}

ExtendedRank betti(const Variety& v, int k) { return rank_over_q(singular_homology(v, k)); }

} // namespace

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

Verdict combine(Verdict a, Verdict b) {
  if (a == Verdict::fail || b == Verdict::fail) return Verdict::fail;
  if (a == Verdict::inconclusive || b == Verdict::inconclusive) return Verdict::inconclusive;
  return Verdict::pass;
}

Verdict rank_exactness(std::span<const ExtendedRank> seq) {
  std::int64_t alternating = 0;
  int sign = 1;
  for (const auto& r : seq) {
    if (!r.is_finite()) return Verdict::inconclusive;
    alternating += sign * r.value;
    sign = -sign;
  }
  return alternating == 0 ? Verdict::pass : Verdict::fail;
}

void CheckReport::add(int k, Verdict v, std::string detail) {
  verdict = combine(verdict, v);
  lines.push_back({k, v, std::move(detail)});
}

CheckReport ladder_rank_check(const Variety& blowup_node, int k_lo, int k_hi) {
  if (!blowup_node.is_blowup()) throw std::invalid_argument("ladder_rank_check needs a blowup node");
  CheckReport report{"ladder-rank", blowup_node.to_string(), Verdict::pass, {}};
  const Variety& ambient = blowup_node.base();
  const Variety& center = blowup_node.center();
  const Variety divisor = Variety::proj_bundle(center, blowup_node.parameter());
  for (int k = k_lo; k <= k_hi; ++k) {
    // X~ - X + Y - D alternates to zero exactly when X~ - X = D - Y
    const RankSequence seq{betti(blowup_node, k), betti(ambient, k), betti(center, k), betti(divisor, k)};
    Verdict v = rank_exactness(seq);
    report.add(k, v,
               "b(X~)=" + seq[0].to_string() + " b(X)=" + seq[1].to_string() + " b(Y)=" + seq[2].to_string() +
                   " b(D)=" + seq[3].to_string());
  }
  return report;
}

CheckReport blowup_betti_check(const Variety& blowup_node, int k_lo, int k_hi) {
  if (!blowup_node.is_blowup()) throw std::invalid_argument("blowup_betti_check needs a blowup node");
  CheckReport report{"blowup-betti", blowup_node.to_string(), Verdict::pass, {}};
  for (int k = k_lo; k <= k_hi; ++k) {
    ExtendedRank lhs = betti(blowup_node, k);
    ExtendedRank rhs = betti(blowup_node.base(), k);
    for (int j = 1; j < blowup_node.parameter(); ++j) rhs = rhs + betti(blowup_node.center(), k - 2 * j);
    Verdict v = !lhs.is_finite() || !rhs.is_finite() ? Verdict::inconclusive
                : lhs.value == rhs.value             ? Verdict::pass
                                                     : Verdict::fail;
    report.add(k, v, "lhs=" + lhs.to_string() + " rhs=" + rhs.to_string());
  }
  return report;
}

CheckReport dold_thom_check(const Variety& v) {
  CheckReport report{"dold-thom", v.to_string(), Verdict::pass, {}};
  for (int k = 0; k <= 2 * v.dim(); ++k) {
    GroupExpr l0 = lawson_homology(v, 0, k);
    GroupExpr h = singular_homology(v, k);
    Verdict verdict = !expr_equal(l0, h) ? Verdict::fail
                      : l0.has_unknown() ? Verdict::inconclusive
                                         : Verdict::pass;
    report.add(k, verdict, "L_0H_k=" + l0.to_string() + " H_k=" + h.to_string());
  }
  return report;
}

CheckReport ns_coherence_check(const Variety& v) {
  CheckReport report{"ns-coherence", v.to_string(), Verdict::pass, {}};
  for (const auto& node : nodes_of(v)) {
    if (node.kind() != NodeKind::proj_bundle && node.kind() != NodeKind::blowup) continue;
    const int n = node.dim();
    if (n < 2) continue;
    GroupExpr expanded = lawson_homology(node, n - 1, 2 * n - 2);
    auto ns = ns_rank(node);
    auto known = as_known(expanded);
    Verdict verdict = !ns || !known ? Verdict::inconclusive
                      : expr_equal(expanded, GroupExpr::z(*ns)) ? Verdict::pass
                                                                : Verdict::fail;
    report.add(2 * n - 2, verdict,
               node.to_string() + ": expansion=" + expanded.to_string() +
                   " ns_rank=" + (ns ? std::to_string(*ns) : std::string("unknown")));
  }
  return report;
}

CheckReport forced_vanishing_check(const Variety& v) {
  CheckReport report{"forced-hom-vanishing", v.to_string(), Verdict::pass, {}};
  const int n = v.dim();
  for (const auto& e : hom_table(v).entries) {
    if (e.p != 0 && e.p != n - 1 && e.p != n) continue;
    report.add(e.k, e.expr.is_zero() ? Verdict::pass : Verdict::fail,
               "p=" + std::to_string(e.p) + " hom=" + e.expr.to_string());
  }
  return report;
}

CheckReport top_degree_check(const Variety& v) {
  CheckReport report{"top-degree", v.to_string(), Verdict::pass, {}};
  for (const auto& node : nodes_of(v)) {
    const int n = node.dim();
    GroupExpr top = lawson_homology(node, n, 2 * n);
    report.add(2 * n, expr_equal(top, GroupExpr::z()) ? Verdict::pass : Verdict::fail,
               node.to_string() + ": " + top.to_string());
  }
  return report;
}

std::vector<CheckReport> validate(const Variety& v) {
  std::vector<CheckReport> out;
  out.push_back(dold_thom_check(v));
  for (const auto& node : nodes_of(v)) {
    if (!node.is_blowup()) continue;
    out.push_back(ladder_rank_check(node, 0, 2 * node.dim()));
    out.push_back(blowup_betti_check(node, 0, 2 * node.dim()));
  }
  out.push_back(ns_coherence_check(v));
  out.push_back(forced_vanishing_check(v));
  out.push_back(top_degree_check(v));
  return out;
}

} // namespace lawson
