#include "doctest.h"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "radixbench/cli.hpp"
#include "radixbench/report.hpp"

using namespace radixbench;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "radixbench");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("format parsing") {
  CHECK(parse_format("md") == Format::Markdown);
  CHECK(parse_format("csv") == Format::Csv);
  CHECK(parse_format("json") == Format::Json);
  CHECK_THROWS_AS(parse_format("xml"), std::invalid_argument);
}

TEST_CASE("rendering escapes csv fields and always emits the appendix when asked") {
  Document doc;
  doc.title = "t";
  doc.tables.push_back({"x", {"a", "b"}, {{"1,5", "say \"hi\""}}, {"n"}});
  doc.with_appendix = true;
  const std::string csv = render(doc, Format::Csv);
  CHECK(contains(csv, "\"1,5\",\"say \"\"hi\"\"\""));
  CHECK(contains(csv, "Discrepancies"));
  const std::string md = render(doc, Format::Markdown);
  CHECK(contains(md, "## Discrepancies\n\nNone."));
  CHECK(contains(md, "| a | b |"));
  CHECK(contains(md, "- n"));
}

TEST_CASE("json output round trips") {
  for (const auto& doc : {compare_document(8, {}), table_document("VIII"), table_document("II")}) {
    const std::string text = render(doc, Format::Json);
    const auto parsed = nlohmann::ordered_json::parse(text);
    CHECK(parsed.dump(2) + "\n" == text);
  }
}

TEST_CASE("comparison rows follow the published label order") {
  const auto rows = comparison_rows(compare_multipliers(8));
  REQUIRE(rows.size() == 8);
  CHECK(rows[0].label == "Ai*Bi");
  CHECK(rows[3].label == "Final Add FA");
  CHECK(rows[7].label == "Total equivalent FA");
  for (const auto& r : rows) {
    if (r.ternary_value != 0) CHECK(r.ratio == doctest::Approx(r.binary_value / r.ternary_value));
  }
}

TEST_CASE("published multiplier figures are within tolerance") {
  for (std::size_t n : {8, 12, 16}) {
    const auto published = published_multiplier_table(n);
    REQUIRE(published.has_value());
    const auto check = check_against_published(compare_multipliers(n), *published);
    CAPTURE(n);
    CHECK(check.elementary_exact);
    CHECK(check.within());
  }
  CHECK_FALSE(published_multiplier_table(10).has_value());
}

TEST_CASE("table documents") {
  CHECK(table_document("I").ok);
  CHECK(table_document("II").tables[0].rows.size() == 9);
  for (const char* id : {"I", "II", "III", "IV", "V", "VI", "VII", "VIII", "IX"}) {
    CAPTURE(id);
    CHECK(table_document(id).ok);
  }
  CHECK_THROWS_AS(table_document("X"), std::invalid_argument);
  const auto vii = table_document("VII");
  CHECK(vii.tables[0].rows[0] ==
        std::vector<std::string>{"Transistor count", "24", "24", "10", "18", "28", "40", "144", "288"});
}

TEST_CASE("cli verify") {
  const auto mul = run_cli({"verify", "--mul", "--radix", "3", "--width", "5"});
  CHECK(mul.code == 0);
  CHECK(contains(mul.out, "| Vectors | 59049 |"));
  CHECK(contains(mul.out, "exhaustive"));
  const auto cla = run_cli({"verify", "--arch", "cla", "--radix", "2", "--width", "8", "--block", "4"});
  CHECK(cla.code == 0);
  CHECK(contains(cla.out, "131072"));
}

TEST_CASE("cli usage errors exit 2") {
  CHECK(run_cli({"verify", "--arch", "cpa", "--radix", "3", "--width", "0"}).code == 2);
  CHECK(run_cli({"verify", "--arch", "cpa", "--radix", "4", "--width", "3"}).code == 2);
  CHECK(run_cli({"verify", "--arch", "xyz", "--width", "3"}).code == 2);
  CHECK(run_cli({"verify", "--arch", "cla", "--mul", "--width", "3"}).code == 2);
  CHECK(run_cli({"verify", "--arch", "cla", "--width", "8", "--block", "9"}).code == 2);
  CHECK(run_cli({"counts", "--mul"}).code == 2);
  CHECK(run_cli({"compare", "--bits", "8", "--cost-preset", "nope"}).code == 2);
  CHECK(run_cli({"compare", "--bits", "8", "--format", "xml"}).code == 2);
  CHECK(run_cli({"tables", "XI"}).code == 2);
  CHECK(run_cli({}).code == 2);
  CHECK(run_cli({"frobnicate"}).code == 2);
  const auto r = run_cli({"verify", "--width", "0"});
  CHECK(r.out.empty());
  CHECK_FALSE(r.err.empty());
}

TEST_CASE("cli help exits 0") { CHECK(run_cli({"--help"}).code == 0); }

TEST_CASE("cli counts") {
  const auto cpa = run_cli({"counts", "--arch", "cpa", "--radix", "3", "--width", "5"});
  CHECK(cpa.code == 0);
  CHECK(contains(cpa.out, "| TernFA | 5 |"));
  const auto one = run_cli({"counts", "--mul", "--radix", "3", "--width", "1", "--format", "json"});
  const auto j = nlohmann::json::parse(one.out);
  CHECK(j["data"]["summary"]["elementary_mul_count"] == 1);
  CHECK(j["data"]["summary"]["total_fa"] == 0);
  CHECK(j["data"]["summary"]["total_ha"] == 0);
  const auto m8 = run_cli({"counts", "--mul", "--radix", "2", "--width", "8"});
  CHECK(contains(m8.out, "| Ai*Bi | 64 |"));
  CHECK(contains(m8.out, "Total equivalent FA"));
  CHECK(contains(m8.out, "equivalant"));
  const auto net = run_cli({"counts", "--arch", "csa", "--width", "4", "--netlist"});
  CHECK(nlohmann::json::parse(net.out)["cells"].size() > 4);
}

TEST_CASE("cli cost") {
  const auto r = run_cli({"cost", "--mul", "--radix", "3", "--width", "5", "--format", "json"});
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["data"]["total"].get<int>() > 950);
  const auto dump = run_cli({"cost", "--dump-table", "--cost-preset", "compact-8"});
  CHECK(nlohmann::json::parse(dump.out)["entries"]["BinFA"] == 8);

  const std::string path = "radixbench_test_cost_table.json";
  {
    std::ofstream f(path);
    f << R"({"name": "fa-only", "entries": {"BinFA": 10}})";
  }
  const auto custom = run_cli({"cost", "--arch", "cpa", "--width", "4", "--cost-table", path, "--format", "json"});
  CHECK(custom.code == 0);
  CHECK(nlohmann::json::parse(custom.out)["data"]["total"] == 40);
  const auto uncosted = run_cli({"cost", "--arch", "cla", "--width", "4", "--cost-table", path});
  CHECK(uncosted.code == 2);
  CHECK(contains(uncosted.err, "no entry"));
  std::remove(path.c_str());
}

TEST_CASE("cli compare") {
  const auto c8 = run_cli({"compare", "--bits", "8", "--format", "json"});
  CHECK(c8.code == 0);
  const auto j = nlohmann::json::parse(c8.out);
  CHECK(j["data"]["m_trits"] == 5);
  CHECK(j["data"]["transistors"]["binary"]["mul_cells"] == 384);
  CHECK(j["data"]["transistors"]["ternary"]["mul_cells"] == 950);
  bool has_310 = false;
  bool has_ha = false;
  for (const auto& d : j["discrepancies"]) {
    has_310 = has_310 || (d["published"] == "310" && d["computed"] == "320");
    has_ha = has_ha || contains(d["published"].get<std::string>(), "12") &&
                           contains(d["published"].get<std::string>(), "14");
  }
  CHECK(has_310);
  CHECK(has_ha);
  const auto c12 = run_cli({"compare", "--bits", "12"});
  CHECK(contains(c12.out, "| Ai*Bi | 144 | 64 | 2.25 |"));
  CHECK(run_cli({"compare", "--bits", "10"}).code == 0);
  CHECK(run_cli({"compare", "--bits", "1"}).code == 2);
}

TEST_CASE("cli tables") {
  const auto viii = run_cli({"tables", "VIII"});
  CHECK(viii.code == 0);
  CHECK(contains(viii.out, "| Computed | 80 | 90 | 10 | 18 | 28 | 40 | 54 | 320 |"));
  CHECK(contains(viii.out, "Δ +10"));
  const auto vi = run_cli({"tables", "VI", "--format", "csv"});
  CHECK(contains(vi.out, "Ratio 3/2,,4.4,7.7 to 8.8,15.5"));
}

TEST_CASE("output is deterministic for identical arguments and seed") {
  const std::vector<std::string> args{"verify", "--mul", "--radix", "2", "--width", "12", "--seed", "5",
                                      "--samples", "3000", "--format", "json"};
  const auto a = run_cli(args);
  const auto b = run_cli(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(contains(a.out, "sampled"));
}

TEST_CASE("seed falls back to RADIXBENCH_SEED") {
  ::setenv("RADIXBENCH_SEED", "17", 1);
  CHECK(run_cli({"verify", "--arch", "cpa", "--width", "16", "--cap", "100", "--samples", "50"}).code == 0);
  ::setenv("RADIXBENCH_SEED", "abc", 1);
  CHECK(run_cli({"verify", "--arch", "cpa", "--width", "16", "--cap", "100", "--samples", "50"}).code == 2);
  ::unsetenv("RADIXBENCH_SEED");
}
