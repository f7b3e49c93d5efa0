#include "lawson/engine.hpp"

namespace lawson {

namespace {

std::string bundle_tag(int j) { return j == 0 ? "root" : "bundle_" + std::to_string(j); }
std::string blowup_tag(int j) { return "blowup_" + std::to_string(j); }

void check_domain(const Variety& v, int p, int k) {
  if (p >= 0 && p <= v.dim() - 1 && k < 2 * p) {
    throw DomainError("undefined bigrade (p=" + std::to_string(p) + ", k=" + std::to_string(k) +
                      ") on " + v.to_string() + ": need k >= 2p");
  }
}

GroupExpr lawson_leaf(const Variety& v, int p, int k, Trace* trace) {
  const int n = v.dim();
  if (p > n) {
    if (trace) trace->note(kNoteR4);
    return GroupExpr::zero();
  }
  if (p == n) return k == 2 * p ? GroupExpr::z() : GroupExpr::zero();
  if (p == 0) return singular_homology(v, k);
  if (k > 2 * n) return GroupExpr::zero();
  if (p == n - 1) {
    if (k == 2 * n) return GroupExpr::z();
    if (k == 2 * n - 1) return singular_homology(v, k);
    // k == 2n - 2
    if (trace && v.kind() == NodeKind::atom) trace->note(kNoteNsTorsion);
    auto ns = ns_rank(v);
    return ns ? GroupExpr::z(*ns) : GroupExpr::unknown();
  }

  // 1 <= p <= n - 2
  if (v.kind() == NodeKind::proj_space) {
    return k % 2 == 0 ? GroupExpr::z() : GroupExpr::zero();
  }
  const AtomDecl& a = v.atom_decl();
  if (auto it = a.lawson_overrides.find({p, k}); it != a.lawson_overrides.end()) return it->second;
  return GroupExpr::lawson_ref(a.id, p, k);
}

GroupExpr evaluate(const Variety& v, int p, int k, Trace* trace);

} // namespace

GroupExpr singular_homology(const Variety& v, int k) {
  const int n = v.dim();
  if (k < 0 || k > 2 * n) return GroupExpr::zero();
  switch (v.kind()) {
    case NodeKind::point: return GroupExpr::z();
    case NodeKind::proj_space: return k % 2 == 0 ? GroupExpr::z() : GroupExpr::zero();
    case NodeKind::atom: {
      const AtomDecl& a = v.atom_decl();
      if (a.singular) {
        const auto& table = *a.singular;
        return static_cast<std::size_t>(k) < table.size() ? table[k] : GroupExpr::unknown();
      }
      if (k == 0 || k == 2 * n) return GroupExpr::z();
      return GroupExpr::singular_ref(a.id, k);
    }
    case NodeKind::proj_bundle: {
      std::vector<Summand> parts;
      for (int j = 0; j < v.parameter(); ++j) {
        auto term = singular_homology(v.base(), k - 2 * j).tagged(bundle_tag(j));
        parts.insert(parts.end(), term.summands().begin(), term.summands().end());
      }
      return normalize(GroupExpr(std::move(parts)));
    }
    case NodeKind::blowup: {
      auto parts = singular_homology(v.base(), k).tagged("root").summands();
      for (int j = 1; j < v.parameter(); ++j) {
        auto term = singular_homology(v.center(), k - 2 * j).tagged(blowup_tag(j));
        parts.insert(parts.end(), term.summands().begin(), term.summands().end());
      }
      return normalize(GroupExpr(std::move(parts)));
    }
  }
  return GroupExpr::unknown();
}

namespace {

// Recursive steps may clamp p to 0 with k < 0; those terms are simply 0, so
// the domain check only applies at the entry point.
GroupExpr evaluate(const Variety& v, int p, int k, Trace* trace) {
  if (p < 0) p = 0;

  switch (v.kind()) {
    case NodeKind::proj_bundle: {
      std::vector<Summand> parts;
      for (int j = 0; j < v.parameter(); ++j) {
        auto term = evaluate(v.base(), p - j, k - 2 * j, trace).tagged(bundle_tag(j));
        parts.insert(parts.end(), term.summands().begin(), term.summands().end());
      }
      return normalize(GroupExpr(std::move(parts)));
    }
    case NodeKind::blowup: {
      auto parts = evaluate(v.base(), p, k, trace).tagged("root").summands();
      for (int j = 1; j < v.parameter(); ++j) {
        auto term = evaluate(v.center(), p - j, k - 2 * j, trace).tagged(blowup_tag(j));
        parts.insert(parts.end(), term.summands().begin(), term.summands().end());
      }
      return normalize(GroupExpr(std::move(parts)));
    }
    default: return normalize(lawson_leaf(v, p, k, trace));
  }
}

} // namespace

GroupExpr lawson_homology(const Variety& v, int p, int k, Trace* trace) {
  check_domain(v, p, k);
  return evaluate(v, p, k, trace);
}

std::optional<int> ns_rank(const Variety& v) {
  switch (v.kind()) {
    case NodeKind::point: return std::nullopt;
    case NodeKind::proj_space: return 1;
    case NodeKind::atom: {
      const AtomDecl& a = v.atom_decl();
      if (a.ns_rank) return a.ns_rank;
      if (a.dim == 1) return 1;
      return std::nullopt;
    }
    case NodeKind::proj_bundle: {
      const Variety& base = v.base();
      if (v.parameter() == 1) return ns_rank(base);
      if (v.dim() == 1 || base.dim() == 0) return 1;
      auto b = ns_rank(base);
      if (!b) return std::nullopt;
      return *b + 1;
    }
    case NodeKind::blowup: {
      auto b = ns_rank(v.base());
      if (!b) return std::nullopt;
      return *b + 1;
    }
  }
  return std::nullopt;
}

const TableEntry* LawsonTable::at(int p, int k) const {
  for (const auto& e : entries) {
    if (e.p == p && e.k == k) return &e;
  }
  return nullptr;
}

LawsonTable lawson_table(const Variety& v) {
  LawsonTable table{v, {}};
  const int n = v.dim();
  for (int p = 0; p <= n; ++p) {
    for (int k = 2 * p; k <= 2 * n; ++k) {
      Trace trace;
      TableEntry e{p, k, lawson_homology(v, p, k, &trace), {}};
      e.notes.assign(trace.notes.begin(), trace.notes.end());
      table.entries.push_back(std::move(e));
    }
  }
  return table;
}

} // namespace lawson
