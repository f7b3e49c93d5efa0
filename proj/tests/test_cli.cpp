#include "lawson/cli.hpp"

#include <doctest.h>

#include <json.hpp>

#include <string>

using namespace lawson;

namespace {

std::string corpus(const std::string& name) { return std::string(LAWSON_CORPUS_DIR) + "/" + name; }

RunConfig config(Command c, const std::string& file, const std::string& target, Format f = Format::tsv) {
  RunConfig cfg;
  cfg.command = c;
  cfg.input_path = corpus(file);
  cfg.target = target;
  cfg.format = f;
  return cfg;
}

} // namespace

TEST_CASE("table row for the Clemens example carries blowup_1 provenance") {
  auto cfg = config(Command::table, "clemens_quintic.lh", "P5tilde", Format::json);
  cfg.p = 2;
  cfg.k = 4;
  auto r = run(cfg);
  REQUIRE(r.status == exit_code::ok);
  auto j = nlohmann::json::parse(r.output);
  REQUIRE(j["entries"].size() == 1);
  const auto& e = j["entries"][0];
  CHECK(e["expr"] == "Z^2 + INF_Q");
  CHECK(e["provenance"][1]["summand"] == "INF_Q");
  CHECK(e["provenance"][1]["origins"] == nlohmann::json::array({"blowup_1"}));
  CHECK(e["provenance"][0]["origins"] == nlohmann::json::array({"root", "blowup_1"}));
}

TEST_CASE("TSV table layout") {
  auto r = run(config(Command::table, "rational.lh", "P3"));
  REQUIRE(r.status == exit_code::ok);
  CHECK(r.output ==
        "# lawson P3 = P(3) (dim 3)\n"
        "p\tk=0\tk=1\tk=2\tk=3\tk=4\tk=5\tk=6\n"
        "0\tZ\t0\tZ\t0\tZ\t0\tZ\n"
        "1\t.\t.\tZ\t0\tZ\t0\tZ\n"
        "2\t.\t.\t.\t.\tZ\t0\tZ\n"
        "3\t.\t.\t.\t.\t.\t.\tZ\n");
}

TEST_CASE("griffiths of P(5) is zero") {
  auto cfg = config(Command::griffiths, "clemens_quintic.lh", "P5");
  cfg.griffiths_p = 2;
  auto r = run(cfg);
  CHECK(r.status == exit_code::ok);
  CHECK(r.output == "0\n");
}

TEST_CASE("validate exits 0 on the corpus") {
  for (const auto& [file, target] : std::vector<std::pair<std::string, std::string>>{
           {"rational.lh", "P6scroll"}, {"curves_surfaces.lh", "P4K3E"}, {"clemens_quintic.lh", "P5tilde"}}) {
    CAPTURE(target);
    CHECK(run(config(Command::validate, file, target)).status == exit_code::ok);
  }
}

TEST_CASE("error exits") {
  CHECK(run(config(Command::table, "rational.lh", "Nope")).status == exit_code::usage);
  CHECK(run(config(Command::table, "missing.lh", "P3")).status == exit_code::usage);

  auto bad_filter = config(Command::table, "rational.lh", "P3");
  bad_filter.p = 2;
  bad_filter.k = 3;
  CHECK(run(bad_filter).status == exit_code::usage);
  bad_filter.p = 7;
  bad_filter.k.reset();
  CHECK(run(bad_filter).status == exit_code::usage);

  RunConfig cfg;
  cfg.command = Command::table;
  cfg.target = "B";
  auto r = run_source(cfg, "let B = blowup(P(2), P(1), codim=1)");
  CHECK(r.status == exit_code::parse_error);
  CHECK(r.error.find(":1:9:") != std::string::npos);

  auto g = config(Command::griffiths, "rational.lh", "P3");
  CHECK(run(g).status == exit_code::usage);
  g.griffiths_p = 4;
  CHECK(run(g).status == exit_code::usage);
}

TEST_CASE("check-invariance exit status follows the required dimensions") {
  auto ok = run(config(Command::check_invariance, "rational.lh", "P5ptline"));
  CHECK(ok.status == exit_code::ok);
  auto quintic = run(config(Command::check_invariance, "clemens_quintic.lh", "P5tilde", Format::json));
  CHECK(quintic.status == exit_code::ok);
  auto j = nlohmann::json::parse(quintic.output);
  CHECK(j["non_invariant_p"] == nlohmann::json::array({2}));
  CHECK(j["invariant"] == true);
}

TEST_CASE("command names") {
  CHECK(command_from_name("check-invariance") == Command::check_invariance);
  CHECK(command_from_name("table") == Command::table);
  CHECK_FALSE(command_from_name("plot"));
}
