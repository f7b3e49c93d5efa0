#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace lawson {

/// Finitely generated abelian group Z^free_rank + Z/d_1 + ... + Z/d_m in
/// invariant-factor form: every d_i >= 2 and d_i | d_{i+1}.
class FGAbelianGroup {
public:
  FGAbelianGroup() = default;

  static FGAbelianGroup zero() { return {}; }
  static FGAbelianGroup free(int rank);
  static FGAbelianGroup cyclic(std::int64_t order);

  /// Builds Z^free_rank plus the product of the cyclic groups Z/orders[i],
  /// brought to invariant-factor form. Orders of 1 are dropped; 0 and
  /// negatives are rejected.
  static FGAbelianGroup from_cyclic_orders(int free_rank, const std::vector<std::int64_t>& orders);

  int free_rank() const { return free_rank_; }
  const std::vector<std::int64_t>& torsion() const { return torsion_; }

  bool is_zero() const { return free_rank_ == 0 && torsion_.empty(); }
  /// Order of the torsion subgroup.
  std::int64_t torsion_order() const;

  FGAbelianGroup operator+(const FGAbelianGroup& other) const;
  auto operator<=>(const FGAbelianGroup&) const = default;

  /// "0", "Z", "Z^3 + Z/2 + Z/4", ...
  std::string to_string() const;

private:
  int free_rank_ = 0;
  std::vector<std::int64_t> torsion_;
};

/// Rank over Q, extended by the two values an expression can also take.
struct ExtendedRank {
  enum class Kind { finite, infinite, unknown };
  Kind kind = Kind::finite;
  std::int64_t value = 0;

  static ExtendedRank finite(std::int64_t n) { return {Kind::finite, n}; }
  static ExtendedRank infinite() { return {Kind::infinite, 0}; }
  static ExtendedRank unknown() { return {Kind::unknown, 0}; }

  bool is_finite() const { return kind == Kind::finite; }
  bool operator==(const ExtendedRank&) const = default;

  /// Sum with the absorption rules infinite > unknown > finite.
  ExtendedRank operator+(const ExtendedRank& other) const;
  std::string to_string() const;
};

/// H_k of an atom that carries no singular table.
struct SingularRef {
  std::string atom;
  int k = 0;
  bool operator==(const SingularRef&) const = default;
};

/// L_pH_k of an atom that carries no override for (p, k).
struct LawsonRef {
  std::string atom;
  int p = 0;
  int k = 0;
  bool operator==(const LawsonRef&) const = default;
};

/// A summand that becomes a Q-vector space of countably infinite dimension after tensoring with Q.
struct InfiniteQ {
  bool operator==(const InfiniteQ&) const = default;
};

struct UnknownGroup {
  bool operator==(const UnknownGroup&) const = default;
};

using SummandValue = std::variant<FGAbelianGroup, SingularRef, LawsonRef, InfiniteQ, UnknownGroup>;

/// One summand of a formal direct sum together with the decomposition
/// paths that produced it. Origins are slash-separated tag paths
/// ("blowup_1", "root/bundle_2"); the empty string is the root.
struct Summand {
  SummandValue value;
  std::vector<std::string> origins;

  Summand(SummandValue v, std::string origin = {});
  Summand(SummandValue v, std::vector<std::string> origins);

  std::string value_string() const;
};

/// Formal direct sum of summands. Constructed expressions may be in any
/// order; normalize() brings them to the canonical form used for printing
/// and comparison.
class GroupExpr {
public:
  GroupExpr() = default;
  explicit GroupExpr(std::vector<Summand> summands) : summands_(std::move(summands)) {}

  static GroupExpr zero() { return {}; }
  static GroupExpr known(const FGAbelianGroup& g, std::string origin = {});
  static GroupExpr z(int rank = 1, std::string origin = {});
  static GroupExpr singular_ref(std::string atom, int k, std::string origin = {});
  static GroupExpr lawson_ref(std::string atom, int p, int k, std::string origin = {});
  static GroupExpr infinite_q(std::string origin = {});
  static GroupExpr unknown(std::string origin = {});

  const std::vector<Summand>& summands() const { return summands_; }

  /// True for the normal form of the zero group (no summands after normalization).
  bool is_zero() const;
  bool has_unknown() const;
  bool has_infinite_q() const;

  /// Same expression with `tag` prepended to every origin path.
  GroupExpr tagged(std::string_view tag) const;

  /// Canonical string; normalizes first.
  std::string to_string() const;

private:
  std::vector<Summand> summands_;
};

GroupExpr normalize(const GroupExpr& a);
GroupExpr direct_sum(const GroupExpr& a, const GroupExpr& b);
GroupExpr direct_sum(std::initializer_list<GroupExpr> parts);
/// Normal-form identity as multisets, ignoring origins.
bool expr_equal(const GroupExpr& a, const GroupExpr& b);
ExtendedRank rank_over_q(const GroupExpr& a);

/// Known part of the normal form, if the expression has no other summands.
std::optional<FGAbelianGroup> as_known(const GroupExpr& a);

/// Prefixes `tag` onto an origin path; a root tag in front of the root collapses.
std::string prefix_origin(std::string_view tag, std::string_view origin);
/// Display form of an origin path ("" becomes "root").
std::string origin_label(std::string_view origin);

} // namespace lawson
