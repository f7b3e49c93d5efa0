#include "lawson/homkernel.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace lawson {

namespace {

GroupExpr hom_atom(const Variety& v, int p, int k) {
  const AtomDecl& a = v.atom_decl();
  if (a.dim <= 2 || k > 2 * a.dim) return GroupExpr::zero();
  if (const auto* h = a.hom_annotation(p, k)) return h->as_expr();
  return GroupExpr::unknown();
}

} // namespace

GroupExpr hom(const Variety& v, int p, int k, Trace* trace) {
  const int n = v.dim();
  if (p >= 0 && p <= n - 1 && k < 2 * p) {
    throw DomainError("undefined bigrade (p=" + std::to_string(p) + ", k=" + std::to_string(k) +
                      ") on " + v.to_string() + ": need k >= 2p");
  }
  if (p <= 0 || p >= n - 1) return GroupExpr::zero();

  switch (v.kind()) {
    case NodeKind::point:
    case NodeKind::proj_space: return GroupExpr::zero();
    case NodeKind::atom: return hom_atom(v, p, k);
    case NodeKind::proj_bundle: {
      if (trace) trace->note(kNoteHomSplitting);
      std::vector<Summand> parts;
      for (int j = 0; j < v.parameter(); ++j) {
        auto term = hom(v.base(), p - j, k - 2 * j, trace).tagged(j == 0 ? "root" : "bundle_" + std::to_string(j));
        parts.insert(parts.end(), term.summands().begin(), term.summands().end());
      }
      return normalize(GroupExpr(std::move(parts)));
    }
    case NodeKind::blowup: {
      if (trace) trace->note(kNoteHomSplitting);
      auto parts = hom(v.base(), p, k, trace).tagged("root").summands();
      for (int j = 1; j < v.parameter(); ++j) {
        auto term = hom(v.center(), p - j, k - 2 * j, trace).tagged("blowup_" + std::to_string(j));
        parts.insert(parts.end(), term.summands().begin(), term.summands().end());
      }
      return normalize(GroupExpr(std::move(parts)));
    }
  }
  return GroupExpr::unknown();
}

GroupExpr griffiths(const Variety& v, int p) {
  if (p < 0 || p > v.dim()) {
    throw DomainError("griffiths: cycle dimension " + std::to_string(p) + " outside [0, " +
                      std::to_string(v.dim()) + "]");
  }
  return hom(v, p, 2 * p);
}

const TableEntry* HomTable::at(int p, int k) const {
  for (const auto& e : entries) {
    if (e.p == p && e.k == k) return &e;
  }
  return nullptr;
}

HomTable hom_table(const Variety& v) {
  HomTable table{v, {}};
  const int n = v.dim();
  for (int p = 0; p <= n; ++p) {
    for (int k = 2 * p; k <= 2 * n; ++k) {
      Trace trace;
      TableEntry e{p, k, hom(v, p, k, &trace), {}};
      e.notes.assign(trace.notes.begin(), trace.notes.end());
      table.entries.push_back(std::move(e));
    }
  }
  return table;
}

std::vector<Variety> unroll_tower(const Variety& top) {
  std::vector<Variety> tower{top};
  while (tower.back().is_blowup()) tower.push_back(tower.back().base());
  std::reverse(tower.begin(), tower.end());
  return tower;
}

const char* fate_name(Fate f) {
  switch (f) {
    case Fate::h0_vanish: return "H0-vanish";
    case Fate::r4_vanish: return "R4-vanish";
    case Fate::survives: return "survives";
  }
  return "survives";
}

Fate extra_summand_fate(int p, int j, int center_dim) {
  const int q = p - j;
  if (q > center_dim) return Fate::r4_vanish;
  if (q <= 0 || q >= center_dim - 1) return Fate::h0_vanish;
  return Fate::survives;
}

std::string ExtraSummand::label() const {
  return "L_" + std::to_string(center_p) + "H_" + std::to_string(center_k) + "(" + center + ")_hom";
}

bool InvarianceReport::invariant() const {
  auto required_p = [this](int p) { return p == 1 || p == n - 2; };
  for (const auto& c : comparisons) {
    if (c.required && !c.equal) return false;
  }
  for (const auto& e : extras) {
    if (required_p(e.p) && e.fate == Fate::survives) return false;
  }
  return true;
}

std::vector<int> InvarianceReport::non_invariant_dimensions() const {
  std::set<int> out;
  for (const auto& c : comparisons) {
    if (!c.required && !c.equal) out.insert(c.p);
  }
  return {out.begin(), out.end()};
}

InvarianceReport check_invariance(std::span<const Variety> tower, const BigradeFilter& filter) {
  if (tower.empty()) throw std::invalid_argument("empty tower");
  for (std::size_t i = 1; i < tower.size(); ++i) {
    const Variety& step = tower[i];
    if (!step.is_blowup() || !(step.base() == tower[i - 1])) {
      throw std::invalid_argument("tower step " + std::to_string(i) + " is not a blowup of " +
                                  tower[i - 1].to_string());
    }
    if (step.center().dim() + step.parameter() != tower[i - 1].dim()) {
      throw std::invalid_argument("tower step " + std::to_string(i) + ": center dimension mismatch");
    }
  }

  InvarianceReport report;
  for (const auto& v : tower) report.tower.push_back(v.to_string());
  const int n = tower.front().dim();
  report.n = n;
  const Variety& bottom = tower.front();
  const Variety& top = tower.back();

  for (int p = 1; p <= n - 2; ++p) {
    if (filter.p && *filter.p != p) continue;
    for (int k = 2 * p; k <= 2 * n; ++k) {
      if (filter.k && *filter.k != k) continue;
      HomComparison c;
      c.p = p;
      c.k = k;
      c.bottom = hom(bottom, p, k);
      c.top = hom(top, p, k);
      c.equal = expr_equal(c.bottom, c.top);
      c.equal_as_expressions = c.equal && c.bottom.has_unknown();
      c.required = p == 1 || p == n - 2;
      report.comparisons.push_back(std::move(c));

      for (std::size_t i = 1; i < tower.size(); ++i) {
        const Variety& center = tower[i].center();
        for (int j = 1; j < tower[i].parameter(); ++j) {
          ExtraSummand e;
          e.step = static_cast<int>(i);
          e.p = p;
          e.k = k;
          e.j = j;
          e.center = center.to_string();
          e.center_p = p - j;
          e.center_k = k - 2 * j;
          e.fate = extra_summand_fate(p, j, center.dim());
          e.expr = e.fate == Fate::survives ? hom(center, e.center_p, e.center_k) : GroupExpr::zero();
          report.extras.push_back(std::move(e));
        }
      }
    }
  }
  return report;
}

} // namespace lawson
