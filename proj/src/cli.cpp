#include "radixbench/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <optional>
#include <stdexcept>
#include <string>

#include "radixbench/adders.hpp"
#include "radixbench/costmodel.hpp"
#include "radixbench/multipliers.hpp"
#include "radixbench/netlist_json.hpp"
#include "radixbench/report.hpp"

namespace radixbench::cli {

namespace {

struct Options {
  int radix = 2;
  std::size_t width = 0;
  std::string arch;
  bool mul = false;
  std::optional<std::size_t> block;
  std::string cost_preset = "conventional-28/cntfet-124";
  std::string cost_table_file;
  bool dump_table = false;
  std::string format = "md";
  std::optional<std::uint64_t> seed;
  std::uint64_t cap = CheckOptions{}.cap;
  std::uint64_t samples = CheckOptions{}.samples;
  std::string policy = "eager";
  bool netlist = false;
  bool dots = false;
  std::size_t bits = 0;
  std::string table_id;
};

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

void add_format(CLI::App* sub, Options& o) {
  sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"md", "csv", "json"}));
}

void add_circuit(CLI::App* sub, Options& o) {
  sub->add_option("--radix", o.radix, "Operand radix")->check(CLI::IsMember({2, 3}));
  sub->add_option("--width", o.width, "Operand width in digits")->required();
  auto* arch = sub->add_option("--arch", o.arch, "Adder architecture")->check(CLI::IsMember({"cpa", "cla", "csa"}));
  auto* mul = sub->add_flag("--mul", o.mul, "Wallace-tree multiplier instead of an adder");
  arch->excludes(mul);
  sub->add_option("--block", o.block, "CLA/CSA block size (default 4 bits, 5 trits)");
  sub->add_option("--policy", o.policy, "Half-adder policy of the reduction")->check(CLI::IsMember({"eager", "lazy"}));
}

void add_cost(CLI::App* sub, Options& o) {
  sub->add_option("--cost-preset", o.cost_preset, "BIN/TERN full-adder variants");
  sub->add_option("--cost-table", o.cost_table_file, "JSON cost table overriding the preset")
      ->check(CLI::ExistingFile);
}

Radix radix_of(const Options& o) { return Radix::from_int(o.radix); }

HaPolicy policy_of(const Options& o) { return o.policy == "lazy" ? HaPolicy::Lazy : HaPolicy::Eager; }

AdderArch arch_of(const Options& o) {
  if (o.width == 0) throw UsageError("--width must be positive");
  const std::size_t block = o.block.value_or(o.radix == 2 ? 4 : 5);
  if (o.arch.empty() || o.arch == "cpa") return AdderArch::cpa();
  if (o.arch == "cla") return AdderArch::cla(block);
  return AdderArch::csa(block);
}

std::uint64_t resolve_seed(const Options& o) {
  if (o.seed) return *o.seed;
  const char* env = std::getenv("RADIXBENCH_SEED");
  if (env == nullptr || *env == '\0') return 1;
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(env, &used, 10);
    if (used != std::string(env).size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw UsageError(std::string("RADIXBENCH_SEED is not an unsigned integer: '") + env + "'");
  }
}

CostTable resolve_cost_table(const Options& o) {
  if (o.cost_table_file.empty()) return builtin_cost_table(CostPreset::parse(o.cost_preset));
  std::ifstream in(o.cost_table_file);
  nlohmann::ordered_json doc;
  try {
    doc = nlohmann::ordered_json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(o.cost_table_file + ": " + e.what());
  }
  return CostTable::from_json(doc);
}

int emit(const Document& doc, const Options& o, std::ostream& out) {
  out << render(doc, parse_format(o.format));
  return doc.ok ? 0 : 1;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const Radix radix = radix_of(o);
  if (o.width == 0) throw UsageError("--width must be positive");
  CheckOptions check;
  check.cap = o.cap;
  check.samples = o.samples;
  check.seed = resolve_seed(o);

  VerificationReport report;
  if (o.mul) {
    if (!checked_power(radix, 2 * o.width)) throw UsageError("multiplier too wide to verify with 64-bit values");
    const MultiplierBuild build = build_multiplier_detailed(radix, o.width, policy_of(o));
    const Oracle oracle = [](std::span<const std::uint64_t> v) { return v[0] * v[1]; };
    report = exhaustive_check(build.circuit, oracle, build.encoding, check,
                              "mul radix-" + to_string(radix) + " width-" + std::to_string(o.width));
  } else {
    const AdderArch arch = arch_of(o);
    if (!checked_power(radix, o.width + 1)) throw UsageError("adder too wide to verify with 64-bit values");
    const Circuit circuit = build_adder(arch, radix, o.width);
    const Oracle oracle = [](std::span<const std::uint64_t> v) { return v[0] + v[1] + v[2]; };
    report = exhaustive_check(circuit, oracle, adder_encoding(circuit), check, describe(arch, radix, o.width));
  }
  return emit(verification_document(report), o, out);
}

int cmd_counts(const Options& o, std::ostream& out) {
  const Radix radix = radix_of(o);
  if (o.width == 0) throw UsageError("--width must be positive");
  if (o.mul) {
    if (o.netlist) {
      out << to_json(build_multiplier(radix, o.width, policy_of(o))).dump(2) << '\n';
      return 0;
    }
    const int code = emit(multiplier_counts_document(radix, o.width, policy_of(o)), o, out);
    if (o.dots) out << '\n' << dot_diagram(build_multiplier_detailed(radix, o.width, policy_of(o)).reduction);
    return code;
  }
  const AdderArch arch = arch_of(o);
  if (o.netlist) {
    out << to_json(build_adder(arch, radix, o.width)).dump(2) << '\n';
    return 0;
  }
  return emit(adder_counts_document(arch, radix, o.width), o, out);
}

int cmd_cost(const Options& o, std::ostream& out) {
  const CostTable table = resolve_cost_table(o);
  if (o.dump_table) {
    out << table.to_json().dump(2) << '\n';
    return 0;
  }
  const Radix radix = radix_of(o);
  if (o.width == 0) throw UsageError("--width must be positive");
  if (o.mul) return emit(multiplier_cost_document(radix, o.width, policy_of(o), table), o, out);
  return emit(adder_cost_document(arch_of(o), radix, o.width, table), o, out);
}

int cmd_compare(const Options& o, std::ostream& out) {
  if (o.bits < 2) throw UsageError("--bits must be at least 2");
  return emit(compare_document(o.bits, CostPreset::parse(o.cost_preset), policy_of(o)), o, out);
}

int cmd_tables(const Options& o, std::ostream& out) { return emit(table_document(o.table_id), o, out); }

}  // namespace

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Gate-level workbench for binary and ternary adders and multipliers", "radixbench"};
  app.require_subcommand(1);

  auto* verify = app.add_subcommand("verify", "Check a circuit against integer arithmetic");
  add_circuit(verify, o);
  verify->add_option("--seed", o.seed, "Sampling seed (default $RADIXBENCH_SEED, then 1)");
  verify->add_option("--cap", o.cap, "Enumerate input spaces up to this size")->check(CLI::PositiveNumber);
  verify->add_option("--samples", o.samples, "Random vectors when the space exceeds --cap")
      ->check(CLI::PositiveNumber);
  add_format(verify, o);

  auto* counts = app.add_subcommand("counts", "Cell counts of a circuit");
  add_circuit(counts, o);
  counts->add_flag("--netlist", o.netlist, "Print the netlist as JSON instead");
  counts->add_flag("--dots", o.dots, "Append the reduction dot diagram (multipliers)");
  add_format(counts, o);

  auto* cost = app.add_subcommand("cost", "Transistor count of a circuit");
  add_circuit(cost, o);
  cost->get_option("--width")->required(false);
  add_cost(cost, o);
  cost->add_flag("--dump-table", o.dump_table, "Print the cost table as JSON and exit");
  add_format(cost, o);

  auto* compare = app.add_subcommand("compare", "Binary vs ternary comparison at a bit width");
  compare->add_option("--bits", o.bits, "Binary operand width")->required();
  compare->add_option("--cost-preset", o.cost_preset, "BIN/TERN full-adder variants");
  compare->add_option("--policy", o.policy, "Half-adder policy of the reduction")
      ->check(CLI::IsMember({"eager", "lazy"}));
  add_format(compare, o);

  auto* tables = app.add_subcommand("tables", "Reproduce one published table");
  tables->add_option("id", o.table_id, "I, II, ..., IX")->required();
  add_format(tables, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (verify->parsed()) return cmd_verify(o, out);
    if (counts->parsed()) return cmd_counts(o, out);
    if (cost->parsed()) return cmd_cost(o, out);
    if (compare->parsed()) return cmd_compare(o, out);
    return cmd_tables(o, out);
  } catch (const std::exception& e) {
    err << "radixbench: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace radixbench::cli
