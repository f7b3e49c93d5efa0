// lawsoncalc: Lawson homology, hom-kernels and Griffiths groups of
// constructed varieties.
//
//   lawsoncalc table FILE TARGET [--format tsv|json] [--p P] [--k K] [--out PATH]
//   lawsoncalc hom FILE TARGET ...
//   lawsoncalc griffiths FILE TARGET P ...
//   lawsoncalc check-invariance FILE TARGET ...
//   lawsoncalc validate FILE TARGET ...

#include "lawson/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

int main(int argc, char** argv) {
  CLI::App app{"Symbolic Lawson homology calculator"};
  app.require_subcommand(1);

  lawson::RunConfig config;
  std::string format = "tsv";
  std::string out_path;
  int griffiths_p = 0;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("file", config.input_path, "construction file")->required()->check(CLI::ExistingFile);
    sub->add_option("target", config.target, "name bound in the file")->required();
    sub->add_option("--format", format, "output format")->check(CLI::IsMember({"tsv", "json"}));
    sub->add_option("--p", config.p, "restrict to cycle dimension p");
    sub->add_option("--k", config.k, "restrict to degree k");
    sub->add_option("--out", out_path, "write output to PATH instead of stdout");
  };

  auto* table = app.add_subcommand("table", "full Lawson homology table");
  auto* hom = app.add_subcommand("hom", "kernel of the cycle class map over the table");
  auto* griff = app.add_subcommand("griffiths", "Griffiths group of p-cycles");
  auto* inv = app.add_subcommand("check-invariance", "hom-kernels across a blowup tower");
  auto* val = app.add_subcommand("validate", "run the consistency checks");
  for (auto* sub : {table, hom, griff, inv, val}) add_common(sub);
  griff->add_option("P", griffiths_p, "cycle dimension")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : lawson::exit_code::usage;
  }

  auto* chosen = app.get_subcommands().front();
  config.command = *lawson::command_from_name(chosen->get_name());
  config.format = format == "json" ? lawson::Format::json : lawson::Format::tsv;
  if (chosen == griff) config.griffiths_p = griffiths_p;

  lawson::RunResult result = lawson::run(config);
  if (!result.error.empty()) std::cerr << "lawsoncalc: " << result.error << "\n";
  if (!result.output.empty()) {
    if (out_path.empty()) {
      std::cout << result.output;
    } else {
      std::ofstream out(out_path, std::ios::binary);
      if (!out) {
        std::cerr << "lawsoncalc: cannot write " << out_path << "\n";
        return lawson::exit_code::usage;
      }
      out << result.output;
    }
  }
  return result.status;
}
