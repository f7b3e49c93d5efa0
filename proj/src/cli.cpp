#include "lawson/cli.hpp"

#include "lawson/dsl.hpp"

#include <fstream>
#include <sstream>

namespace lawson {

namespace {

RunResult usage_error(std::string message) { return {exit_code::usage, {}, std::move(message)}; }

// Empty when the filter lies inside 0 <= 2p <= k <= 2 dim.
std::string check_filter(const RunConfig& c, int dim) {
  if (c.p && (*c.p < 0 || *c.p > dim)) {
    return "--p " + std::to_string(*c.p) + " outside [0, " + std::to_string(dim) + "]";
  }
  if (c.k && (*c.k < 0 || *c.k > 2 * dim)) {
    return "--k " + std::to_string(*c.k) + " outside [0, " + std::to_string(2 * dim) + "]";
  }
  if (c.p && c.k && *c.k < 2 * *c.p) {
    return "bigrade (" + std::to_string(*c.p) + "," + std::to_string(*c.k) + ") has k < 2p";
  }
  return {};
}

} // namespace

std::optional<Command> command_from_name(const std::string& name) {
  if (name == "table") return Command::table;
  if (name == "hom") return Command::hom;
  if (name == "griffiths") return Command::griffiths;
  if (name == "check-invariance") return Command::check_invariance;
  if (name == "validate") return Command::validate;
  return std::nullopt;
}

RunResult run_source(const RunConfig& config, const std::string& source) {
  Document doc;
  try {
    doc = parse_document(source);
  } catch (const ParseError& e) {
    return {exit_code::parse_error, {}, config.input_path + ":" + e.what()};
  }

  auto target = doc.find(config.target);
  if (!target) return usage_error("unknown target '" + config.target + "'");
  const Variety& v = *target;
  if (auto bad = check_filter(config, v.dim()); !bad.empty()) return usage_error(bad);
  const EntryFilter filter{config.p, config.k};

  try {
    switch (config.command) {
      case Command::table: {
        auto t = lawson_table(v);
        return {exit_code::ok, render_table(config.target, v, t.entries, "lawson", filter, config.format), {}};
      }
      case Command::hom: {
        auto t = hom_table(v);
        return {exit_code::ok, render_table(config.target, v, t.entries, "hom", filter, config.format), {}};
      }
      case Command::griffiths: {
        if (!config.griffiths_p) return usage_error("griffiths needs a cycle dimension p");
        int p = *config.griffiths_p;
        if (p < 0 || p > v.dim()) {
          return usage_error("cycle dimension " + std::to_string(p) + " outside [0, " + std::to_string(v.dim()) + "]");
        }
        return {exit_code::ok, render_griffiths(config.target, v, p, griffiths(v, p), config.format), {}};
      }
      case Command::check_invariance: {
        auto tower = unroll_tower(v);
        auto report = check_invariance(tower, BigradeFilter{config.p, config.k});
        return {report.invariant() ? exit_code::ok : exit_code::check_failure,
                render_invariance(config.target, report, config.format), {}};
      }
      case Command::validate: {
        auto checks = validate(v);
        bool failed = false;
        for (const auto& c : checks) failed = failed || c.verdict == Verdict::fail;
        return {failed ? exit_code::check_failure : exit_code::ok,
                render_validation(config.target, checks, config.format), {}};
      }
    }
  } catch (const DomainError& e) {
    return usage_error(e.what());
  } catch (const std::invalid_argument& e) {
    return usage_error(e.what());
  }
  return usage_error("unhandled command");
}

RunResult run(const RunConfig& config) {
  std::ifstream in(config.input_path, std::ios::binary);
  if (!in) return usage_error("cannot read " + config.input_path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return run_source(config, buf.str());
}

} // namespace lawson
