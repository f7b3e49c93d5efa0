#pragma once

#include "lawson/abelian.hpp"
#include "lawson/variety.hpp"

#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace lawson {

/// Raised for a bigrade (p, k) outside the definition domain k >= 2p.
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Notes collected while evaluating; surfaced in tables and reports.
struct Trace {
  std::set<std::string> notes;
  void note(std::string s) { notes.insert(std::move(s)); }
};

inline constexpr const char* kNoteR4 = "R4: cycle dimension above variety dimension evaluated to 0";
inline constexpr const char* kNoteNsTorsion = "NS torsion modeled as zero";
inline constexpr const char* kNoteHomSplitting = "assumes \xCE\xA6-compatible splitting";

/// H_k(v; Z). Zero outside [0, 2 dim].
GroupExpr singular_homology(const Variety& v, int k);

/// L_pH_k(v). Composite nodes decompose through the projective bundle and
/// blowup formulas; leaves resolve through the forced rows
///   p < 0      -> p = 0
///   p > dim    -> 0
///   p = dim    -> Z at k = 2 dim
///   p = 0      -> H_k
///   p = dim-1  -> Z, H_{2dim-1}, Z^NS at k = 2dim, 2dim-1, 2dim-2
/// and atoms fall back to declared overrides or a symbolic L(atom; p, k).
/// Throws DomainError when 0 <= p < dim-1 and k < 2p.
GroupExpr lawson_homology(const Variety& v, int p, int k, Trace* trace = nullptr);

/// Rank of NS(v), when determined by the construction.
std::optional<int> ns_rank(const Variety& v);

struct TableEntry {
  int p = 0;
  int k = 0;
  GroupExpr expr;
  std::vector<std::string> notes;
};

/// Bigraded table over 0 <= 2p <= k <= 2 dim, ordered by (p, k).
struct LawsonTable {
  Variety variety;
  std::vector<TableEntry> entries;

  const TableEntry* at(int p, int k) const;
};

LawsonTable lawson_table(const Variety& v);

} // namespace lawson
