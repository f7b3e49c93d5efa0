#include "lawson/abelian.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <tuple>

namespace lawson {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw std::overflow_error("torsion order overflows 64 bits");
  }
  return out;
}

// prime -> exponents of the prime-power cyclic factors seen so far
using PrimaryParts = std::map<std::int64_t, std::vector<int>>;

void add_primary_parts(std::int64_t n, PrimaryParts& parts) {
  for (std::int64_t q = 2; q <= n / q; ++q) {
    int e = 0;
    while (n % q == 0) {
      n /= q;
      ++e;
    }
    if (e > 0) parts[q].push_back(e);
  }
  if (n > 1) parts[n].push_back(1);
}

std::int64_t ipow(std::int64_t base, int e) {
  std::int64_t out = 1;
  for (int i = 0; i < e; ++i) out = checked_mul(out, base);
  return out;
}

std::vector<std::int64_t> invariant_factors(const std::vector<std::int64_t>& orders) {
  PrimaryParts parts;
  for (auto d : orders) {
    if (d <= 0) throw std::invalid_argument("cyclic order must be positive");
    if (d > 1) add_primary_parts(d, parts);
  }
  std::size_t count = 0;
  for (auto& [q, exps] : parts) {
    std::sort(exps.begin(), exps.end(), std::greater<>());
    count = std::max(count, exps.size());
  }
  // factor i (from the largest) collects the i-th largest power of every prime
  std::vector<std::int64_t> factors(count, 1);
  for (const auto& [q, exps] : parts) {
    for (std::size_t i = 0; i < exps.size(); ++i) {
      factors[i] = checked_mul(factors[i], ipow(q, exps[i]));
    }
  }
  std::reverse(factors.begin(), factors.end());
  return factors;
}

// Sort rank: Known, then symbolic refs, then INF_Q, then UNKNOWN.
int kind_rank(const SummandValue& v) {
  switch (v.index()) {
    case 0: return 0;
    case 1:
    case 2: return 1;
    case 3: return 2;
    default: return 3;
  }
}

// (atom, L before H, p, k)
std::tuple<std::string_view, int, int, int> ref_key(const SummandValue& v) {
  if (const auto* l = std::get_if<LawsonRef>(&v)) return {l->atom, 0, l->p, l->k};
  const auto& h = std::get<SingularRef>(v);
  return {h.atom, 1, 0, h.k};
}

bool summand_less(const Summand& a, const Summand& b) {
  int ka = kind_rank(a.value), kb = kind_rank(b.value);
  if (ka != kb) return ka < kb;
  if (ka == 1) {
    auto ra = ref_key(a.value), rb = ref_key(b.value);
    if (ra != rb) return ra < rb;
  }
  return a.origins < b.origins;
}

void merge_origins(std::vector<std::string>& into, const std::vector<std::string>& from) {
  into.insert(into.end(), from.begin(), from.end());
  std::sort(into.begin(), into.end());
  into.erase(std::unique(into.begin(), into.end()), into.end());
}

} // namespace

FGAbelianGroup FGAbelianGroup::free(int rank) {
  if (rank < 0) throw std::invalid_argument("free rank must be non-negative");
  FGAbelianGroup g;
  g.free_rank_ = rank;
  return g;
}

FGAbelianGroup FGAbelianGroup::cyclic(std::int64_t order) {
  return from_cyclic_orders(0, {order});
}

FGAbelianGroup FGAbelianGroup::from_cyclic_orders(int free_rank,
                                                  const std::vector<std::int64_t>& orders) {
  FGAbelianGroup g = free(free_rank);
  g.torsion_ = invariant_factors(orders);
  return g;
}

std::int64_t FGAbelianGroup::torsion_order() const {
  std::int64_t out = 1;
  for (auto d : torsion_) out = checked_mul(out, d);
  return out;
}

FGAbelianGroup FGAbelianGroup::operator+(const FGAbelianGroup& other) const {
  std::vector<std::int64_t> orders = torsion_;
  orders.insert(orders.end(), other.torsion_.begin(), other.torsion_.end());
  return from_cyclic_orders(free_rank_ + other.free_rank_, orders);
}

std::string FGAbelianGroup::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  auto append = [&out](const std::string& term) {
    if (!out.empty()) out += " + ";
    out += term;
  };
  if (free_rank_ == 1) append("Z");
  if (free_rank_ > 1) append("Z^" + std::to_string(free_rank_));
  for (auto d : torsion_) append("Z/" + std::to_string(d));
  return out;
}

ExtendedRank ExtendedRank::operator+(const ExtendedRank& other) const {
  if (kind == Kind::infinite || other.kind == Kind::infinite) return infinite();
  if (kind == Kind::unknown || other.kind == Kind::unknown) return unknown();
  return finite(value + other.value);
}

std::string ExtendedRank::to_string() const {
  switch (kind) {
    case Kind::finite: return std::to_string(value);
    case Kind::infinite: return "infinite";
    case Kind::unknown: return "unknown";
  }
  return "unknown";
}

Summand::Summand(SummandValue v, std::string origin) : value(std::move(v)) {
  origins.push_back(std::move(origin));
}

Summand::Summand(SummandValue v, std::vector<std::string> o) : value(std::move(v)), origins(std::move(o)) {
  std::sort(origins.begin(), origins.end());
  origins.erase(std::unique(origins.begin(), origins.end()), origins.end());
}

std::string Summand::value_string() const {
  struct Printer {
    std::string operator()(const FGAbelianGroup& g) const { return g.to_string(); }
    std::string operator()(const SingularRef& h) const {
      return "H(" + h.atom + ";" + std::to_string(h.k) + ")";
    }
    std::string operator()(const LawsonRef& l) const {
      return "L(" + l.atom + ";" + std::to_string(l.p) + "," + std::to_string(l.k) + ")";
    }
    std::string operator()(const InfiniteQ&) const { return "INF_Q"; }
    std::string operator()(const UnknownGroup&) const { return "UNKNOWN"; }
  };
  return std::visit(Printer{}, value);
}

GroupExpr GroupExpr::known(const FGAbelianGroup& g, std::string origin) {
  return GroupExpr({Summand(g, std::move(origin))});
}

GroupExpr GroupExpr::z(int rank, std::string origin) {
  return known(FGAbelianGroup::free(rank), std::move(origin));
}

GroupExpr GroupExpr::singular_ref(std::string atom, int k, std::string origin) {
  return GroupExpr({Summand(SingularRef{std::move(atom), k}, std::move(origin))});
}

GroupExpr GroupExpr::lawson_ref(std::string atom, int p, int k, std::string origin) {
  return GroupExpr({Summand(LawsonRef{std::move(atom), p, k}, std::move(origin))});
}

GroupExpr GroupExpr::infinite_q(std::string origin) {
  return GroupExpr({Summand(InfiniteQ{}, std::move(origin))});
}

GroupExpr GroupExpr::unknown(std::string origin) {
  return GroupExpr({Summand(UnknownGroup{}, std::move(origin))});
}

bool GroupExpr::is_zero() const { return normalize(*this).summands_.empty(); }

bool GroupExpr::has_unknown() const {
  return std::any_of(summands_.begin(), summands_.end(),
                     [](const Summand& s) { return std::holds_alternative<UnknownGroup>(s.value); });
}

bool GroupExpr::has_infinite_q() const {
  return std::any_of(summands_.begin(), summands_.end(),
                     [](const Summand& s) { return std::holds_alternative<InfiniteQ>(s.value); });
}

GroupExpr GroupExpr::tagged(std::string_view tag) const {
  GroupExpr out = *this;
  for (auto& s : out.summands_) {
    for (auto& o : s.origins) o = prefix_origin(tag, o);
    std::sort(s.origins.begin(), s.origins.end());
    s.origins.erase(std::unique(s.origins.begin(), s.origins.end()), s.origins.end());
  }
  return out;
}

std::string GroupExpr::to_string() const {
  GroupExpr n = normalize(*this);
  if (n.summands_.empty()) return "0";
  std::string out;
  for (const auto& s : n.summands_) {
    if (!out.empty()) out += " + ";
    out += s.value_string();
  }
  return out;
}

GroupExpr normalize(const GroupExpr& a) {
  std::optional<Summand> known;
  std::optional<Summand> inf;
  std::optional<Summand> unknown;
  std::vector<Summand> refs;

  for (const auto& s : a.summands()) {
    if (const auto* g = std::get_if<FGAbelianGroup>(&s.value)) {
      if (g->is_zero()) continue;
      if (!known) {
        known = s;
      } else {
        known->value = std::get<FGAbelianGroup>(known->value) + *g;
        merge_origins(known->origins, s.origins);
      }
    } else if (std::holds_alternative<InfiniteQ>(s.value)) {
      if (!inf) inf = s; else merge_origins(inf->origins, s.origins);
    } else if (std::holds_alternative<UnknownGroup>(s.value)) {
      if (!unknown) unknown = s; else merge_origins(unknown->origins, s.origins);
    } else {
      refs.push_back(s);
    }
  }

  std::vector<Summand> out;
  if (known) out.push_back(*known);
  std::sort(refs.begin(), refs.end(), summand_less);
  out.insert(out.end(), refs.begin(), refs.end());
  if (inf) out.push_back(*inf);
  if (unknown) out.push_back(*unknown);
  return GroupExpr(std::move(out));
}

GroupExpr direct_sum(const GroupExpr& a, const GroupExpr& b) {
  std::vector<Summand> all = a.summands();
  all.insert(all.end(), b.summands().begin(), b.summands().end());
  return normalize(GroupExpr(std::move(all)));
}

GroupExpr direct_sum(std::initializer_list<GroupExpr> parts) {
  std::vector<Summand> all;
  for (const auto& p : parts) all.insert(all.end(), p.summands().begin(), p.summands().end());
  return normalize(GroupExpr(std::move(all)));
}

bool expr_equal(const GroupExpr& a, const GroupExpr& b) {
  GroupExpr na = normalize(a), nb = normalize(b);
  const auto& sa = na.summands();
  const auto& sb = nb.summands();
  if (sa.size() != sb.size()) return false;
  // refs are sorted with origins as the final key, so compare the ref
  // values as sorted multisets
  std::vector<std::string> va, vb;
  for (const auto& s : sa) va.push_back(s.value_string());
  for (const auto& s : sb) vb.push_back(s.value_string());
  std::sort(va.begin(), va.end());
  std::sort(vb.begin(), vb.end());
  return va == vb;
}

ExtendedRank rank_over_q(const GroupExpr& a) {
  ExtendedRank r = ExtendedRank::finite(0);
  for (const auto& s : a.summands()) {
    if (const auto* g = std::get_if<FGAbelianGroup>(&s.value)) {
      r = r + ExtendedRank::finite(g->free_rank());
    } else if (std::holds_alternative<InfiniteQ>(s.value)) {
      r = r + ExtendedRank::infinite();
    } else {
      r = r + ExtendedRank::unknown();
    }
  }
  return r;
}

std::optional<FGAbelianGroup> as_known(const GroupExpr& a) {
  GroupExpr n = normalize(a);
  if (n.summands().empty()) return FGAbelianGroup::zero();
  if (n.summands().size() == 1) {
    if (const auto* g = std::get_if<FGAbelianGroup>(&n.summands().front().value)) return *g;
  }
  return std::nullopt;
}

std::string prefix_origin(std::string_view tag, std::string_view origin) {
  if (origin.empty()) return tag == "root" ? std::string{} : std::string(tag);
  std::string out(tag);
  out += '/';
  out += origin;
  return out;
}

std::string origin_label(std::string_view origin) {
  return origin.empty() ? std::string("root") : std::string(origin);
}

} // namespace lawson
