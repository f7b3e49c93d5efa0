#pragma once

#include "lawson/engine.hpp"
#include "lawson/homkernel.hpp"
#include "lawson/validator.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lawson {

enum class Format { tsv, json };

/// Which entries of a bigraded table to emit.
struct EntryFilter {
  std::optional<int> p;
  std::optional<int> k;
  bool accepts(int p_, int k_) const { return (!p || *p == p_) && (!k || *k == k_); }
};

std::string render_table(const std::string& name, const Variety& v, const std::vector<TableEntry>& entries,
                         const std::string& kind, const EntryFilter& filter, Format format);
std::string render_griffiths(const std::string& name, const Variety& v, int p, const GroupExpr& expr,
                             Format format);
std::string render_invariance(const std::string& name, const InvarianceReport& report, Format format);
std::string render_validation(const std::string& name, const std::vector<CheckReport>& checks, Format format);

} // namespace lawson
