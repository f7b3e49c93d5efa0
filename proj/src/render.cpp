#include "lawson/render.hpp"

#include <json.hpp>

#include <set>
#include <sstream>

namespace lawson {

namespace {

using Json = nlohmann::ordered_json;

Json provenance_json(const GroupExpr& expr) {
  Json out = Json::array();
  const GroupExpr n = normalize(expr);
  for (const auto& s : n.summands()) {
    Json origins = Json::array();
    for (const auto& o : s.origins) origins.push_back(origin_label(o));
    out.push_back({{"summand", s.value_string()}, {"origins", origins}});
  }
  return out;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

} // namespace

std::string render_table(const std::string& name, const Variety& v, const std::vector<TableEntry>& entries,
                         const std::string& kind, const EntryFilter& filter, Format format) {
  std::set<std::string> notes;
  for (const auto& e : entries) {
    if (filter.accepts(e.p, e.k)) notes.insert(e.notes.begin(), e.notes.end());
  }
  const int n = v.dim();

  if (format == Format::json) {
    Json out;
    out["name"] = name;
    out["variety"] = v.to_string();
    out["dim"] = n;
    out["table"] = kind;
    Json rows = Json::array();
    for (const auto& e : entries) {
      if (!filter.accepts(e.p, e.k)) continue;
      rows.push_back({{"p", e.p},
                      {"k", e.k},
                      {"expr", e.expr.to_string()},
                      {"provenance", provenance_json(e.expr)},
                      {"notes", e.notes}});
    }
    out["entries"] = rows;
    out["notes"] = Json(std::vector<std::string>(notes.begin(), notes.end()));
    return dump(out);
  }

  std::ostringstream out;
  out << "# " << kind << " " << name << " = " << v.to_string() << " (dim " << n << ")\n";
  out << "p";
  for (int k = 0; k <= 2 * n; ++k) {
    if (!filter.k || *filter.k == k) out << "\tk=" << k;
  }
  out << "\n";
  for (int p = 0; p <= n; ++p) {
    if (filter.p && *filter.p != p) continue;
    out << p;
    for (int k = 0; k <= 2 * n; ++k) {
      if (filter.k && *filter.k != k) continue;
      out << "\t";
      const TableEntry* hit = nullptr;
      for (const auto& e : entries) {
        if (e.p == p && e.k == k) hit = &e;
      }
      out << (hit ? hit->expr.to_string() : std::string("."));
    }
    out << "\n";
  }
  for (const auto& note : notes) out << "# note: " << note << "\n";
  return out.str();
}

std::string render_griffiths(const std::string& name, const Variety& v, int p, const GroupExpr& expr,
                             Format format) {
  if (format == Format::json) {
    Json out;
    out["name"] = name;
    out["variety"] = v.to_string();
    out["p"] = p;
    out["expr"] = expr.to_string();
    out["rank_over_Q"] = rank_over_q(expr).to_string();
    out["provenance"] = provenance_json(expr);
    return dump(out);
  }
  return expr.to_string() + "\n";
}

std::string render_invariance(const std::string& name, const InvarianceReport& report, Format format) {
  const auto witnesses = report.non_invariant_dimensions();
  if (format == Format::json) {
    Json out;
    out["name"] = name;
    out["tower"] = report.tower;
    out["n"] = report.n;
    Json extras = Json::array();
    for (const auto& e : report.extras) {
      extras.push_back({{"step", e.step},
                        {"p", e.p},
                        {"k", e.k},
                        {"j", e.j},
                        {"extra_summand", e.label()},
                        {"fate", fate_name(e.fate)},
                        {"expr", e.expr.to_string()}});
    }
    out["extras"] = extras;
    Json comparisons = Json::array();
    for (const auto& c : report.comparisons) {
      Json row{{"p", c.p},
               {"k", c.k},
               {"bottom", c.bottom.to_string()},
               {"top", c.top.to_string()},
               {"equal", c.equal},
               {"required", c.required}};
      if (c.equal_as_expressions) row["note"] = "equal-as-expressions";
      comparisons.push_back(row);
    }
    out["comparisons"] = comparisons;
    out["invariant"] = report.invariant();
    out["non_invariant_p"] = witnesses;
    out["notes"] = Json::array({kNoteHomSplitting});
    return dump(out);
  }

  std::ostringstream out;
  out << "# check-invariance " << name << "\n# tower:";
  for (std::size_t i = 0; i < report.tower.size(); ++i) out << (i ? " -> " : " ") << report.tower[i];
  out << "\n# n = " << report.n << "\n";
  out << "p\tk\tbottom\ttop\tstatus\n";
  for (const auto& c : report.comparisons) {
    std::string status = c.equal ? (c.equal_as_expressions ? "equal-as-expressions" : "equal") : "changed";
    if (c.required) status += " (required)";
    out << c.p << "\t" << c.k << "\t" << c.bottom.to_string() << "\t" << c.top.to_string() << "\t" << status
        << "\n";
  }
  out << "step\tp\tk\textra_summand\tfate\texpr\n";
  for (const auto& e : report.extras) {
    out << e.step << "\t" << e.p << "\t" << e.k << "\t" << e.label() << "\t" << fate_name(e.fate) << "\t"
        << e.expr.to_string() << "\n";
  }
  out << "# invariant at p=1 and p=n-2: " << (report.invariant() ? "yes" : "NO") << "\n";
  out << "# non-invariance witnesses:";
  if (witnesses.empty()) out << " none";
  for (int p : witnesses) out << " p=" << p;
  out << "\n# note: " << kNoteHomSplitting << "\n";
  return out.str();
}

std::string render_validation(const std::string& name, const std::vector<CheckReport>& checks, Format format) {
  Verdict overall = Verdict::pass;
  for (const auto& c : checks) overall = combine(overall, c.verdict);

  if (format == Format::json) {
    Json out;
    out["name"] = name;
    Json arr = Json::array();
    for (const auto& c : checks) {
      Json lines = Json::array();
      for (const auto& l : c.lines) {
        lines.push_back({{"k", l.k}, {"verdict", verdict_name(l.verdict)}, {"detail", l.detail}});
      }
      arr.push_back({{"check", c.name}, {"subject", c.subject}, {"verdict", verdict_name(c.verdict)},
                     {"lines", lines}});
    }
    out["checks"] = arr;
    out["verdict"] = verdict_name(overall);
    return dump(out);
  }

  std::ostringstream out;
  out << "# validate " << name << "\n";
  out << "check\tsubject\tverdict\n";
  for (const auto& c : checks) {
    out << c.name << "\t" << c.subject << "\t" << verdict_name(c.verdict) << "\n";
    for (const auto& l : c.lines) {
      if (l.verdict != Verdict::pass) {
        out << "  k=" << l.k << "\t" << verdict_name(l.verdict) << "\t" << l.detail << "\n";
      }
    }
  }
  out << "# overall: " << verdict_name(overall) << "\n";
  return out.str();
}

} // namespace lawson
