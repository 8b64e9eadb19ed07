#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "arcsym/casebook.hpp"
#include "arcsym/catalog.hpp"
#include "arcsym/error.hpp"

using namespace arcsym;

namespace {

CasebookOptions options() {
  CasebookOptions o;
  o.catalog_dir = default_catalog_dir();
  return o;
}

}  // namespace

TEST(Casebook, Registry) {
  const std::vector<std::string> expected{"sp6_2_arith",   "he_divisor",           "gamma_a5",
                                          "lemval_census", "coset_criterion_sweep", "lemma22_sweep",
                                          "rglr_tiny",     "zsigmondy_table",      "product_cycles"};
  EXPECT_EQ(case_ids(), expected);
  EXPECT_THROW(run_case("unknown", options()), InvalidArgument);
  EXPECT_THROW(case_description("unknown"), InvalidArgument);
}

TEST(Casebook, HeDivisor) {
  const CaseResult r = run_case("he_divisor", options());
  ASSERT_FALSE(r.claims.empty());
  EXPECT_FALSE(r.failed());
  EXPECT_EQ(r.claims.front().actual, "8160");
}

TEST(Casebook, ReportShape) {
  std::vector<CaseResult> results{run_case("he_divisor", options()),
                                  run_case("zsigmondy_table", options())};
  std::ostringstream out;
  emit_report(results, out);
  std::size_t claims = 0;
  for (const auto& r : results) claims += r.claims.size();
  std::istringstream in(out.str());
  std::string line;
  std::size_t lines = 0;
  while (std::getline(in, line)) {
    ++lines;
    const auto j = nlohmann::ordered_json::parse(line);
    std::vector<std::string> keys;
    for (const auto& [k, v] : j.items()) keys.push_back(k);
    EXPECT_EQ(keys, (std::vector<std::string>{"case", "claim", "status", "expected", "actual",
                                              "witness", "elapsed_ms"}));
    const auto status = j["status"].get<std::string>();
    EXPECT_TRUE(status == "pass" || status == "fail" || status == "not-applicable" ||
                status == "vacuous");
  }
  EXPECT_EQ(lines, claims);
  EXPECT_EQ(exit_code(results), 0);
}

TEST(Casebook, DeterministicWithoutTiming) {
  auto render = [] {
    std::vector<CaseResult> results{run_case("product_cycles", options()),
                                    run_case("gamma_a5", options())};
    std::ostringstream out;
    emit_report(results, out, ReportFormat::kJson, false);
    return out.str();
  };
  const std::string a = render();
  EXPECT_EQ(a, render());
  EXPECT_EQ(a.find("elapsed_ms"), std::string::npos);
}

TEST(Casebook, ExitCodeOnFailure) {
  CaseResult bad{"x", {Claim{"c", Status::kFail, "1", "2", ""}}, 0};
  CaseResult na{"y", {Claim{"c", Status::kNotApplicable, "", "", ""}}, 0};
  EXPECT_EQ(exit_code({na}), 0);
  EXPECT_EQ(exit_code({na, bad}), 1);
  EXPECT_THROW(emit_report({na}, std::filesystem::path("/nonexistent/dir/report.jsonl")), Error);
}

TEST(Catalog, LoadsAndValidates) {
  const Catalog c = load_catalog(default_catalog_dir());
  EXPECT_EQ(c.primitive.size(), 62u);
  EXPECT_EQ(c.find("A5").id, "deg05_04_A5");
  EXPECT_EQ(c.find("deg07_03_F21").group.order(), 21);
  EXPECT_THROW(c.find("nope"), InvalidArgument);

  const auto dir = std::filesystem::temp_directory_path() / "arcsym_catalog_test";
  std::filesystem::create_directories(dir);
  {
    std::ofstream f(dir / "bad.json");
    f << R"j({"name":"bad","degree":3,"order":"5","generators":["(1 2 3)"]})j";
  }
  EXPECT_THROW(load_group_file(dir / "bad.json"), ValidationError);
  {
    std::ofstream f(dir / "spec.json");
    f << R"j({"group":"S4","subgroup_gens":["(1 2 3)"],"g":"(1 4)"})j";
  }
  const CosetDigraphSpec s = load_coset_spec(dir / "spec.json", default_catalog_dir());
  EXPECT_EQ(s.G.order(), 24);
  EXPECT_EQ(s.H.order(), 3);
  std::filesystem::remove_all(dir);
}
