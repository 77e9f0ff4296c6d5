#include "radixbench/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace radixbench {

using nlohmann::ordered_json;

Format parse_format(std::string_view text) {
  if (text == "md" || text == "markdown") return Format::Markdown;
  if (text == "csv") return Format::Csv;
  if (text == "json") return Format::Json;
  throw std::invalid_argument("unknown format '" + std::string(text) + "' (expected md, csv or json)");
}

namespace {

std::string num(double v) {
  char buf[64];
  if (std::fabs(v - std::round(v)) < 1e-9) {
    std::snprintf(buf, sizeof buf, "%.0f", v);
  } else if (std::fabs(v * 10 - std::round(v * 10)) < 1e-9) {
    std::snprintf(buf, sizeof buf, "%.1f", v);
  } else {
    std::snprintf(buf, sizeof buf, "%.2f", v);
  }
  return buf;
}

std::string num(std::uint64_t v) { return std::to_string(v); }

std::string signed_delta(double computed, double published) {
  const double d = computed - published;
  if (std::fabs(d) < 1e-9) return "=";
  return std::string("Δ ") + (d > 0 ? "+" : "") + num(d);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void render_md_table(std::ostringstream& os, const std::vector<std::string>& columns,
                     const std::vector<std::vector<std::string>>& rows) {
  os << '|';
  for (const auto& c : columns) os << ' ' << c << " |";
  os << "\n|";
  for (std::size_t i = 0; i < columns.size(); ++i) os << " --- |";
  os << '\n';
  for (const auto& row : rows) {
    os << '|';
    for (std::size_t i = 0; i < columns.size(); ++i) os << ' ' << (i < row.size() ? row[i] : "") << " |";
    os << '\n';
  }
}

void render_csv_table(std::ostringstream& os, const std::vector<std::string>& columns,
                      const std::vector<std::vector<std::string>>& rows) {
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << csv_field(cells[i]);
    os << '\n';
  };
  line(columns);
  for (const auto& r : rows) line(r);
}

const std::vector<std::string> kDiscrepancyColumns{"Item", "Published", "Computed", "Note"};

std::vector<std::vector<std::string>> discrepancy_rows(const Document& doc) {
  std::vector<std::vector<std::string>> rows;
  for (const auto& d : doc.discrepancies) rows.push_back({d.item, d.published, d.computed, d.note});
  return rows;
}

}  // namespace

std::string render(const Document& doc, Format format) {
  std::ostringstream os;
  const bool appendix = doc.with_appendix || !doc.discrepancies.empty();
  switch (format) {
    case Format::Markdown: {
      os << "# " << doc.title << "\n";
      for (const auto& t : doc.tables) {
        os << "\n## " << t.title << "\n\n";
        render_md_table(os, t.columns, t.rows);
        if (!t.notes.empty()) os << '\n';
        for (const auto& n : t.notes) os << "- " << n << '\n';
      }
      if (appendix) {
        os << "\n## Discrepancies\n\n";
        if (doc.discrepancies.empty()) {
          os << "None.\n";
        } else {
          render_md_table(os, kDiscrepancyColumns, discrepancy_rows(doc));
        }
      }
      os << "\nStatus: " << (doc.ok ? "ok" : "MISMATCH") << '\n';
      break;
    }
    case Format::Csv: {
      os << csv_field(doc.title) << '\n';
      for (const auto& t : doc.tables) {
        os << '\n' << csv_field(t.title) << '\n';
        render_csv_table(os, t.columns, t.rows);
      }
      if (appendix) {
        os << "\nDiscrepancies\n";
        render_csv_table(os, kDiscrepancyColumns, discrepancy_rows(doc));
      }
      break;
    }
    case Format::Json: {
      ordered_json j;
      j["title"] = doc.title;
      j["ok"] = doc.ok;
      j["data"] = doc.data;
      ordered_json tables = ordered_json::array();
      for (const auto& t : doc.tables) {
        ordered_json tj;
        tj["title"] = t.title;
        tj["columns"] = t.columns;
        tj["rows"] = t.rows;
        tj["notes"] = t.notes;
        tables.push_back(std::move(tj));
      }
      j["tables"] = std::move(tables);
      if (appendix) {
        ordered_json ds = ordered_json::array();
        for (const auto& d : doc.discrepancies) {
          ds.push_back({{"item", d.item}, {"published", d.published}, {"computed", d.computed}, {"note", d.note}});
        }
        j["discrepancies"] = std::move(ds);
      }
      os << j.dump(2) << '\n';
      break;
    }
  }
  return os.str();
}

std::vector<ComparisonRow> comparison_rows(const MultiplierComparison& cmp) {
  const auto& b = cmp.binary;
  const auto& t = cmp.ternary;
  auto row = [](std::string label, double bv, double tv, std::string provenance) {
    return ComparisonRow{std::move(label), bv, tv, tv != 0.0 ? bv / tv : 0.0, std::move(provenance)};
  };
  auto d = [](std::size_t v) { return static_cast<double>(v); };
  return {
      row("Ai*Bi", d(b.elementary_mul_count), d(t.elementary_mul_count), "computed: N^2 and M^2 elementary multipliers"),
      row("Reduction FA", d(b.reduction_fa), d(t.reduction_fa), "computed: Wallace scheduler"),
      row("Reduction HA", d(b.reduction_ha), d(t.reduction_ha), "computed: Wallace scheduler"),
      row("Final Add FA", d(b.final_fa), d(t.final_fa), "computed: final ripple-carry adder"),
      row("Final Add HA", d(b.final_ha), d(t.final_ha), "computed: final ripple-carry adder"),
      row("Total FA", d(b.total_fa), d(t.total_fa), "computed"),
      row("Total HA", d(b.total_ha), d(t.total_ha), "computed"),
      row("Total equivalent FA", b.equivalent_fa, t.equivalent_fa, "computed: 1 HA = 0.5 FA"),
  };
}

namespace {

MultiplierSummary summary_of(std::size_t mul, std::size_t rfa, std::size_t rha, std::size_t ffa, std::size_t fha) {
  MultiplierSummary s;
  s.elementary_mul_count = mul;
  s.reduction_fa = rfa;
  s.reduction_ha = rha;
  s.final_fa = ffa;
  s.final_ha = fha;
  s.total_fa = rfa + ffa;
  s.total_ha = rha + fha;
  s.equivalent_fa = static_cast<double>(s.total_fa) + 0.5 * static_cast<double>(s.total_ha);
  return s;
}

std::vector<double> summary_values(const MultiplierSummary& s) {
  auto d = [](std::size_t v) { return static_cast<double>(v); };
  return {d(s.elementary_mul_count), d(s.reduction_fa), d(s.reduction_ha), d(s.final_fa), d(s.final_ha),
          d(s.total_fa),             d(s.total_ha),     s.equivalent_fa};
}

ordered_json summary_json(const MultiplierSummary& s) {
  return {{"elementary_mul_count", s.elementary_mul_count},
          {"reduction_fa", s.reduction_fa},
          {"reduction_ha", s.reduction_ha},
          {"final_fa", s.final_fa},
          {"final_ha", s.final_ha},
          {"total_fa", s.total_fa},
          {"total_ha", s.total_ha},
          {"equivalent_fa", s.equivalent_fa}};
}

std::string counts_text(const CellCount& counts) {
  std::string out;
  for (const auto& [kind, n] : counts) {
    if (!out.empty()) out += ", ";
    out += kind.name() + " x" + std::to_string(n);
  }
  return out.empty() ? "-" : out;
}

ordered_json counts_json(const CellCount& counts) {
  ordered_json j = ordered_json::object();
  for (const auto& [kind, n] : counts) j[kind.name()] = n;
  return j;
}

std::string sequence_text(const std::vector<std::size_t>& seq) {
  std::string out;
  for (std::size_t i = 0; i < seq.size(); ++i) out += (i ? " -> " : "") + std::to_string(seq[i]);
  return out;
}

const char* kSpellingNote =
    "the published tables label the last row 'Total equivalant FA'; the spelling is corrected here";

}  // namespace

std::optional<PublishedMultiplierTable> published_multiplier_table(std::size_t n_bits) {
  switch (n_bits) {
    case 8:
      return PublishedMultiplierTable{"III", 8, 5, summary_of(64, 35, 18, 9, 1), summary_of(25, 29, 12, 5, 0),
                                      2.56, 1.34};
    case 12:
      return PublishedMultiplierTable{"IV", 12, 8, summary_of(144, 102, 34, 18, 0), summary_of(64, 102, 18, 10, 0),
                                      2.25, 1.13};
    case 16:
      return PublishedMultiplierTable{"V", 16, 10, summary_of(256, 200, 54, 24, 1), summary_of(100, 153, 38, 13, 1),
                                      2.56, 1.36};
    default: return std::nullopt;
  }
}

ToleranceCheck check_against_published(const MultiplierComparison& cmp, const PublishedMultiplierTable& published) {
  ToleranceCheck check;
  check.elementary_exact = cmp.binary.elementary_mul_count == published.binary.elementary_mul_count &&
                           cmp.ternary.elementary_mul_count == published.ternary.elementary_mul_count &&
                           format_ratio(cmp.elementary_ratio, 2) == format_ratio(published.elementary_ratio, 2);
  check.binary_equivalent_rel_error =
      std::fabs(cmp.binary.equivalent_fa - published.binary.equivalent_fa) / published.binary.equivalent_fa;
  check.ternary_equivalent_rel_error =
      std::fabs(cmp.ternary.equivalent_fa - published.ternary.equivalent_fa) / published.ternary.equivalent_fa;
  check.ratio_abs_error = std::fabs(cmp.equivalent_fa_ratio - published.equivalent_fa_ratio);
  return check;
}

std::string describe(const AdderArch& arch, Radix radix, std::size_t width) {
  return to_string(arch) + " radix-" + to_string(radix) + " width-" + std::to_string(width);
}

Document verification_document(const VerificationReport& report) {
  Document doc;
  doc.title = "Verification: " + report.circuit_id;
  doc.ok = report.passed;
  const std::string mode = report.mode == CheckMode::Exhaustive ? "exhaustive" : "sampled";
  TextTable t{"Result", {"Field", "Value"}, {}, {}};
  t.rows.push_back({"Circuit", report.circuit_id});
  t.rows.push_back({"Mode", mode});
  t.rows.push_back({"Vectors", std::to_string(report.vectors)});
  t.rows.push_back({"Result", report.passed ? "pass" : "FAIL"});
  doc.data["circuit"] = report.circuit_id;
  doc.data["mode"] = mode;
  doc.data["vectors"] = report.vectors;
  doc.data["passed"] = report.passed;
  if (report.counterexample) {
    const auto& ce = *report.counterexample;
    std::string ops;
    for (std::size_t i = 0; i < ce.operands.size(); ++i) ops += (i ? ", " : "") + std::to_string(ce.operands[i]);
    t.rows.push_back({"Operands", ops});
    t.rows.push_back({"Expected", std::to_string(ce.expected)});
    t.rows.push_back({"Got", std::to_string(ce.got)});
    doc.data["counterexample"] = {{"operands", ce.operands}, {"expected", ce.expected}, {"got", ce.got}};
  }
  doc.tables.push_back(std::move(t));
  return doc;
}

Document adder_counts_document(const AdderArch& arch, Radix radix, std::size_t width) {
  const Circuit circuit = build_adder(arch, radix, width);
  const CellCount counts = count_cells(circuit);
  const AdderSummary summary = adder_summary(arch, radix, width);
  Document doc;
  doc.title = "Cell counts: " + describe(arch, radix, width);
  TextTable cells{"Cells", {"Kind", "Count"}, {}, {}};
  for (const auto& [kind, n] : counts) cells.rows.push_back({kind.name(), std::to_string(n)});
  TextTable sum{"Summary", {"Field", "Value"}, {}, {}};
  sum.rows.push_back({"Full adders", std::to_string(summary.fa_count)});
  sum.rows.push_back({"Carry blocks", std::to_string(summary.carry_block_count)});
  sum.rows.push_back({"Auxiliary cells", counts_text(summary.aux_gate_counts)});
  doc.tables = {std::move(cells), std::move(sum)};
  doc.data["circuit"] = describe(arch, radix, width);
  doc.data["cells"] = counts_json(counts);
  doc.data["fa_count"] = summary.fa_count;
  doc.data["carry_block_count"] = summary.carry_block_count;
  return doc;
}

Document multiplier_counts_document(Radix radix, std::size_t width, HaPolicy policy) {
  const MultiplierBuild build = build_multiplier_detailed(radix, width, policy);
  const CellCount counts = count_cells(build.circuit);
  const std::string id = "mul radix-" + to_string(radix) + " width-" + std::to_string(width);
  Document doc;
  doc.title = "Cell counts: " + id;
  TextTable cells{"Cells", {"Kind", "Count"}, {}, {}};
  for (const auto& [kind, n] : counts) cells.rows.push_back({kind.name(), std::to_string(n)});

  static const char* kLabels[] = {"Ai*Bi",       "Reduction FA", "Reduction HA", "Final Add FA",
                                  "Final Add HA", "Total FA",     "Total HA",     "Total equivalent FA"};
  TextTable sum{"Multiplier summary", {"Row", "Count"}, {}, {kSpellingNote}};
  const auto values = summary_values(build.summary);
  for (std::size_t i = 0; i < values.size(); ++i) sum.rows.push_back({kLabels[i], num(values[i])});

  TextTable stages{"Reduction stages", {"Stage", "Rows before", "Rows after", "FA", "HA"}, {}, {}};
  for (const auto& s : build.reduction.steps) {
    stages.rows.push_back({std::to_string(s.stage_index), std::to_string(s.rows_before), std::to_string(s.rows_after),
                           std::to_string(s.fa_used), std::to_string(s.ha_used)});
  }
  stages.notes.push_back("row counts: " + sequence_text(stage_row_counts(build.reduction)));
  doc.tables = {std::move(cells), std::move(sum), std::move(stages)};
  doc.data["circuit"] = id;
  doc.data["cells"] = counts_json(counts);
  doc.data["summary"] = summary_json(build.summary);
  doc.data["stage_rows"] = stage_row_counts(build.reduction);
  return doc;
}

namespace {

TextTable priced_cells(const CellCount& counts, const CostTable& table, std::uint64_t& total) {
  TextTable t{"Transistor count (" + table.name() + ")", {"Kind", "Count", "Unit", "Subtotal"}, {}, {}};
  total = 0;
  for (const auto& [kind, n] : counts) {
    const std::uint64_t unit = table.cost(kind);
    total += n * unit;
    t.rows.push_back({kind.name(), std::to_string(n), std::to_string(unit), std::to_string(n * unit)});
  }
  t.rows.push_back({"Total", "", "", std::to_string(total)});
  return t;
}

TextTable breakdown_table(std::string title, const CostBreakdown& b) {
  TextTable t{std::move(title), {"Function", "Cells", "Transistors"}, {}, {}};
  for (const auto& line : b.lines) t.rows.push_back({line.label, std::to_string(line.count), num(line.subtotal)});
  t.rows.push_back({"Total", "", num(b.total)});
  return t;
}

}  // namespace

Document adder_cost_document(const AdderArch& arch, Radix radix, std::size_t width, const CostTable& table) {
  const CellCount counts = count_cells(build_adder(arch, radix, width));
  Document doc;
  doc.title = "Transistor cost: " + describe(arch, radix, width);
  std::uint64_t total = 0;
  doc.tables.push_back(priced_cells(counts, table, total));
  doc.data["circuit"] = describe(arch, radix, width);
  doc.data["cost_table"] = table.name();
  doc.data["total"] = total;
  if (arch.kind == AdderKind::CLA) {
    const auto b = cla_carry_cost(radix, width, arch.block_size, table);
    doc.tables.push_back(breakdown_table("Lookahead carry logic", b));
    doc.data["carry_logic"] = b.total;
  } else if (arch.kind == AdderKind::CSA) {
    const auto b = csa_skip_cost(radix, width, arch.block_size, table);
    doc.tables.push_back(breakdown_table("Skip logic", b));
    doc.data["skip_logic"] = b.total;
  }
  return doc;
}

Document multiplier_cost_document(Radix radix, std::size_t width, HaPolicy policy, const CostTable& table) {
  const CellCount counts = count_cells(build_multiplier(radix, width, policy));
  const std::string id = "mul radix-" + to_string(radix) + " width-" + std::to_string(width);
  Document doc;
  doc.title = "Transistor cost: " + id;
  std::uint64_t total = 0;
  doc.tables.push_back(priced_cells(counts, table, total));
  doc.data["circuit"] = id;
  doc.data["cost_table"] = table.name();
  doc.data["total"] = total;
  return doc;
}

namespace {

struct SideCosts {
  std::uint64_t fa_cell = 0;
  std::uint64_t cpa = 0;
  std::uint64_t cla_carry = 0;
  std::uint64_t cla_total = 0;
  std::uint64_t csa_skip = 0;
  std::uint64_t csa_total = 0;
  std::uint64_t mul_cell = 0;
  std::uint64_t mul_cells = 0;
  std::uint64_t mul_adders = 0;
  std::uint64_t mul_total = 0;
};

SideCosts side_costs(Radix radix, std::size_t width, std::size_t block, HaPolicy policy, const CostTable& table) {
  SideCosts c;
  c.fa_cell = table.cost(radix.is_binary() ? CellKind::bin_fa() : CellKind::tern_fa());
  c.cpa = circuit_cost(count_cells(build_cpa(radix, width)), table);
  c.cla_carry = cla_carry_cost(radix, width, block, table).total;
  c.cla_total = circuit_cost(count_cells(build_cla(radix, width, block)), table);
  c.csa_skip = csa_skip_cost(radix, width, block, table).total;
  c.csa_total = circuit_cost(count_cells(build_csa(radix, width, block)), table);
  c.mul_cell = table.cost(radix.is_binary() ? CellKind::bit_mul() : CellKind::trit_mul());
  const CellCount mul = count_cells(build_multiplier(radix, width, policy));
  c.mul_total = circuit_cost(mul, table);
  c.mul_cells = c.mul_cell * count_elementary_multipliers(mul);
  c.mul_adders = c.mul_total - c.mul_cells;
  return c;
}

void add_known_discrepancies(Document& doc, const CostTable& table) {
  const auto cla5 = cla_carry_cost(Radix::ternary(), 5, 5, table);
  doc.discrepancies.push_back({"Table VIII: 5-trit CLA carry logic total", "310", num(cla5.total),
                               "sum of the table's own entries 80+90+10+18+28+40+54"});
  const auto tern5 = multiplier_summary(Radix::ternary(), 5);
  doc.discrepancies.push_back({"5x5 trit Wallace tree T-HA count", "12 (Table III) vs 14 (reduction-tree text)",
                               std::to_string(tern5.reduction_ha) + " (eager scheduler)",
                               "the two published figures disagree; Table III taken as canonical"});
  doc.discrepancies.push_back({"Table VI: Xor-2 FA ratio interval", "7.7 to 8.8",
                               format_ratio(124.0 / 16.0, 2) + " to " + format_ratio(124.0 / 14.0, 2),
                               "published figures are truncated; rounding gives 7.8 to 8.9"});
  doc.discrepancies.push_back({"Table I: 16 bits -> 11 trits", "N/M between 1.5 and 1.6",
                               "16/11 = " + format_ratio(16.0 / 11.0, 2), "round(16/IR) = 10; the 16-bit multiplier comparison also uses 10 trits"});
  doc.discrepancies.push_back({"Ternary carry generate", "(Ai,Bi) in {(2,1),(1,2)}", "a+b >= 3, adds (2,2)",
                               "2+2 = 4 must produce a carry for the adder to be correct"});
  doc.discrepancies.push_back(
      {"Table IX: binary Pi entry", "24i", "24", "read as 24 = 4 x 6T, consistent with the 48T block total"});
}

}  // namespace

Document compare_document(std::size_t n_bits, const CostPreset& preset, HaPolicy policy) {
  const WidthPair pair = pair_for_bit_width(n_bits);
  const MultiplierComparison cmp = compare_multipliers(n_bits, policy);
  const auto published = published_multiplier_table(n_bits);
  const CostTable table = builtin_cost_table(preset);
  const std::size_t m = cmp.m_trits;
  constexpr std::size_t kBinaryBlock = 4;
  constexpr std::size_t kTernaryBlock = 5;

  Document doc;
  doc.title = "Binary vs ternary: " + std::to_string(n_bits) + " bits / " + std::to_string(m) + " trits";
  doc.with_appendix = true;

  // (a) width pairing
  TextTable widths{"Width pairing", {"Bits", "Bits/IR", "Wire trits", "Compared trits"}, {}, {}};
  widths.rows.push_back({std::to_string(n_bits), format_ratio(pair.raw_trits, 3),
                         std::to_string(pair.m_trits) + (pair.from_table ? " (canonical pair)" : " (round half up)"),
                         std::to_string(m) + " (round half up)"});
  if (pair.m_trits != m) {
    widths.notes.push_back("the wire table pairs " + std::to_string(n_bits) + " bits with " +
                           std::to_string(pair.m_trits) + " trits; circuits are compared at " + std::to_string(m));
  }

  // (b) multiplier summaries
  const auto rows = comparison_rows(cmp);
  TextTable mul{"Multipliers " + std::to_string(n_bits) + "x" + std::to_string(n_bits) + " bit vs " +
                    std::to_string(m) + "x" + std::to_string(m) + " trit",
                {"Row", "Binary", "Ternary", "Binary/Ternary"},
                {},
                {kSpellingNote}};
  std::vector<double> pub_b;
  std::vector<double> pub_t;
  if (published) {
    mul.columns.insert(mul.columns.end(), {"Published binary", "Published ternary", "Published ratio"});
    pub_b = summary_values(published->binary);
    pub_t = summary_values(published->ternary);
  }
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const bool ratio_row = i == 0 || i + 1 == rows.size();
    std::vector<std::string> r{rows[i].label, num(rows[i].binary_value), num(rows[i].ternary_value),
                               ratio_row ? format_ratio(rows[i].ratio, 2) : ""};
    if (published) {
      const double pr = i == 0 ? published->elementary_ratio : published->equivalent_fa_ratio;
      r.insert(r.end(), {num(pub_b[i]), num(pub_t[i]), ratio_row ? format_ratio(pr, 2) : ""});
    }
    mul.rows.push_back(std::move(r));
  }

  TextTable stages{"Wallace reduction row counts", {"Multiplier", "Rows per stage"}, {}, {}};
  const auto bin_build = build_multiplier_detailed(Radix::binary(), n_bits, policy);
  const auto tern_build = build_multiplier_detailed(Radix::ternary(), m, policy);
  stages.rows.push_back({std::to_string(n_bits) + "x" + std::to_string(n_bits) + " bit",
                         sequence_text(stage_row_counts(bin_build.reduction))});
  stages.rows.push_back(
      {std::to_string(m) + "x" + std::to_string(m) + " trit", sequence_text(stage_row_counts(tern_build.reduction))});

  // (c) adder cell counts
  TextTable adders{"Adder cells", {"Adder", std::to_string(n_bits) + "-bit", std::to_string(m) + "-trit"}, {}, {}};
  const auto add_row = [&](const std::string& label, const AdderArch& barch, const AdderArch& tarch) {
    const auto bs = adder_summary(barch, Radix::binary(), n_bits);
    const auto ts = adder_summary(tarch, Radix::ternary(), m);
    adders.rows.push_back({label + " full adders", std::to_string(bs.fa_count), std::to_string(ts.fa_count)});
    if (barch.kind != AdderKind::CPA) {
      adders.rows.push_back(
          {label + " carry blocks", std::to_string(bs.carry_block_count), std::to_string(ts.carry_block_count)});
      adders.rows.push_back(
          {label + " auxiliary cells", counts_text(bs.aux_gate_counts), counts_text(ts.aux_gate_counts)});
    }
  };
  add_row("CPA", AdderArch::cpa(), AdderArch::cpa());
  add_row("CLA", AdderArch::cla(kBinaryBlock), AdderArch::cla(kTernaryBlock));
  add_row("CSA", AdderArch::csa(kBinaryBlock), AdderArch::csa(kTernaryBlock));
  adders.notes.push_back("lookahead and skip blocks: 4 bits, 5 trits");

  // (d) transistor totals
  const SideCosts bc = side_costs(Radix::binary(), n_bits, kBinaryBlock, policy, table);
  const SideCosts tc = side_costs(Radix::ternary(), m, kTernaryBlock, policy, table);
  TextTable tr{"Transistor counts (" + table.name() + ")", {"Item", "Binary", "Ternary", "Ternary/Binary"}, {}, {}};
  const auto tr_row = [&](const std::string& label, std::uint64_t b, std::uint64_t t) {
    tr.rows.push_back({label, num(b), num(t), b ? format_ratio(ratio_report(double(t), double(b)), 2) : "-"});
  };
  tr_row("Full adder cell", bc.fa_cell, tc.fa_cell);
  tr_row("CPA", bc.cpa, tc.cpa);
  tr_row("CLA carry logic", bc.cla_carry, tc.cla_carry);
  tr_row("CLA total", bc.cla_total, tc.cla_total);
  tr_row("CSA skip logic", bc.csa_skip, tc.csa_skip);
  tr_row("CSA total", bc.csa_total, tc.csa_total);
  tr_row("Elementary multiplier cell", bc.mul_cell, tc.mul_cell);
  tr_row("Elementary multipliers", bc.mul_cells, tc.mul_cells);
  tr_row("Multiplier adders", bc.mul_adders, tc.mul_adders);
  tr_row("Multiplier total", bc.mul_total, tc.mul_total);

  // (e) ratio lines
  const double ir = information_ratio();
  TextTable ratios{"Ratios", {"Quantity", "Value", "Break-even"}, {}, {}};
  ratios.rows.push_back({"Information ratio IR", format_ratio(ir, 3), ""});
  ratios.rows.push_back({"Ternary/binary full adder transistors",
                         format_ratio(ratio_report(double(tc.fa_cell), double(bc.fa_cell)), 2),
                         "<= " + format_ratio(ir, 3)});
  ratios.rows.push_back({"Ternary/binary elementary multiplier transistors",
                         format_ratio(ratio_report(double(tc.mul_cell), double(bc.mul_cell)), 2),
                         "<= " + format_ratio(ir * ir, 2)});
  ratios.rows.push_back({"Binary/ternary elementary multiplier count", format_ratio(cmp.elementary_ratio, 2), ""});
  ratios.rows.push_back({"Binary/ternary equivalent FA", format_ratio(cmp.equivalent_fa_ratio, 2), ""});

  doc.tables = {std::move(widths), std::move(mul),    std::move(stages),
                std::move(adders), std::move(tr),     std::move(ratios)};

  // (f) discrepancies
  add_known_discrepancies(doc, table);
  if (published) {
    static const char* kLabels[] = {"Ai*Bi",       "Reduction FA", "Reduction HA", "Final Add FA",
                                    "Final Add HA", "Total FA",     "Total HA",     "Total equivalent FA"};
    const auto cb = summary_values(cmp.binary);
    const auto ct = summary_values(cmp.ternary);
    for (std::size_t i = 0; i < cb.size(); ++i) {
      if (cb[i] != pub_b[i]) {
        doc.discrepancies.push_back({"Table " + published->id + " binary " + kLabels[i], num(pub_b[i]), num(cb[i]),
                                     signed_delta(cb[i], pub_b[i]) + "; FA/HA schedule not published"});
      }
      if (ct[i] != pub_t[i]) {
        doc.discrepancies.push_back({"Table " + published->id + " ternary " + kLabels[i], num(pub_t[i]), num(ct[i]),
                                     signed_delta(ct[i], pub_t[i]) + "; FA/HA schedule not published"});
      }
    }
    if (format_ratio(cmp.equivalent_fa_ratio, 2) != format_ratio(published->equivalent_fa_ratio, 2)) {
      doc.discrepancies.push_back({"Table " + published->id + " equivalent FA ratio",
                                   format_ratio(published->equivalent_fa_ratio, 2),
                                   format_ratio(cmp.equivalent_fa_ratio, 2), "tolerance +/-0.2"});
    }
    const ToleranceCheck check = check_against_published(cmp, *published);
    doc.ok = check.within();
    doc.data["tolerance"] = {{"binary_equivalent_rel_error", check.binary_equivalent_rel_error},
                             {"ternary_equivalent_rel_error", check.ternary_equivalent_rel_error},
                             {"ratio_abs_error", check.ratio_abs_error},
                             {"within", check.within()}};
  }

  doc.data["n_bits"] = n_bits;
  doc.data["m_trits"] = m;
  doc.data["wire_trits"] = pair.m_trits;
  doc.data["raw_trits"] = pair.raw_trits;
  doc.data["cost_preset"] = preset.name();
  doc.data["binary"] = summary_json(cmp.binary);
  doc.data["ternary"] = summary_json(cmp.ternary);
  doc.data["elementary_ratio"] = cmp.elementary_ratio;
  doc.data["equivalent_fa_ratio"] = cmp.equivalent_fa_ratio;
  doc.data["stage_rows"] = {{"binary", stage_row_counts(bin_build.reduction)},
                            {"ternary", stage_row_counts(tern_build.reduction)}};
  const auto side_json = [](const SideCosts& c) {
    return ordered_json{{"fa_cell", c.fa_cell},       {"cpa", c.cpa},           {"cla_carry", c.cla_carry},
                        {"cla_total", c.cla_total},   {"csa_skip", c.csa_skip}, {"csa_total", c.csa_total},
                        {"mul_cell", c.mul_cell},     {"mul_cells", c.mul_cells}, {"mul_adders", c.mul_adders},
                        {"mul_total", c.mul_total}};
  };
  doc.data["transistors"] = {{"binary", side_json(bc)}, {"ternary", side_json(tc)}};
  return doc;
}

namespace {

Document table_one() {
  Document doc;
  doc.title = "Table I: number of ternary and binary wires";
  TextTable t{"Table I", {"Number of bits"}, {{"Number of trits"}}, {}};
  static constexpr std::size_t kBits[] = {8, 16, 32, 64};
  static constexpr std::size_t kTrits[] = {5, 11, 21, 41};
  for (std::size_t i = 0; i < 4; ++i) {
    const std::size_t m = trit_width_for_bit_width(kBits[i]);
    t.columns.push_back(std::to_string(kBits[i]));
    t.rows[0].push_back(std::to_string(m));
    doc.ok = doc.ok && m == kTrits[i];
    doc.data["pairs"].push_back({{"bits", kBits[i]}, {"trits", m}, {"bits_over_ir", kBits[i] / information_ratio()}});
  }
  doc.tables.push_back(std::move(t));
  return doc;
}

Document table_two() {
  Document doc;
  doc.title = "Table II: truth table of a 1-trit multiplier";
  TextTable t{"Table II", {"Ai", "Bi", "Pi", "Ci"}, {}, {}};
  static constexpr Digit kPublished[9][2] = {{0, 0}, {0, 0}, {0, 0}, {0, 0}, {1, 0}, {2, 0}, {0, 0}, {2, 0}, {1, 1}};
  bool gates_agree = true;
  for (Digit a = 0; a < 3; ++a) {
    for (Digit b = 0; b < 3; ++b) {
      const auto table = trit_mul(a, b);
      const auto gates = trit_mul_gates(a, b);
      gates_agree = gates_agree && gates == table;
      const auto& pub = kPublished[a * 3 + b];
      doc.ok = doc.ok && table.product == pub[0] && table.carry == pub[1];
      t.rows.push_back({std::to_string(a), std::to_string(b), std::to_string(table.product),
                        std::to_string(table.carry)});
      doc.data["rows"].push_back({a, b, table.product, table.carry});
    }
  }
  doc.ok = doc.ok && gates_agree;
  t.notes.push_back(std::string("gate-level form (S2, S1, Cm from decoded inputs) ") +
                    (gates_agree ? "agrees on all 9 rows" : "DISAGREES"));
  doc.data["gates_agree"] = gates_agree;
  doc.tables.push_back(std::move(t));
  return doc;
}

Document multiplier_table(std::size_t n_bits) {
  const auto published = *published_multiplier_table(n_bits);
  const MultiplierComparison cmp = compare_multipliers(n_bits);
  Document doc;
  doc.title = "Table " + published.id + ": comparison for " + std::to_string(n_bits) + "*" + std::to_string(n_bits) +
              " bit and " + std::to_string(published.m_trits) + "*" + std::to_string(published.m_trits) +
              " trit multipliers";
  TextTable t{"Table " + published.id,
              {"Row", "Binary", "Ternary", "Binary/Ternary", "Published binary", "Published ternary",
               "Published ratio", "Match"},
              {},
              {kSpellingNote, "equivalent-FA totals are held to 15% and their ratio to 0.2 of the published values"}};
  const auto rows = comparison_rows(cmp);
  const auto pb = summary_values(published.binary);
  const auto pt = summary_values(published.ternary);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const bool ratio_row = i == 0 || i + 1 == rows.size();
    const double pr = i == 0 ? published.elementary_ratio : published.equivalent_fa_ratio;
    std::string match;
    if (rows[i].binary_value == pb[i] && rows[i].ternary_value == pt[i]) {
      match = "=";
    } else {
      match = "binary " + signed_delta(rows[i].binary_value, pb[i]) + ", ternary " +
              signed_delta(rows[i].ternary_value, pt[i]);
    }
    t.rows.push_back({rows[i].label, num(rows[i].binary_value), num(rows[i].ternary_value),
                      ratio_row ? format_ratio(rows[i].ratio, 2) : "", num(pb[i]), num(pt[i]),
                      ratio_row ? format_ratio(pr, 2) : "", match});
  }
  const ToleranceCheck check = check_against_published(cmp, published);
  doc.ok = check.within();
  doc.data["binary"] = summary_json(cmp.binary);
  doc.data["ternary"] = summary_json(cmp.ternary);
  doc.data["published_binary"] = summary_json(published.binary);
  doc.data["published_ternary"] = summary_json(published.ternary);
  doc.data["elementary_ratio"] = cmp.elementary_ratio;
  doc.data["equivalent_fa_ratio"] = cmp.equivalent_fa_ratio;
  doc.data["within_tolerance"] = check.within();
  doc.tables.push_back(std::move(t));
  return doc;
}

Document table_six() {
  const CostTable table = builtin_cost_table();
  const double tern = static_cast<double>(table.cost(CellKind::tern_fa()));
  const auto ratio = [&](BinaryFaVariant v) { return ratio_report(tern, static_cast<double>(transistor_count(v))); };
  Document doc;
  doc.title = "Table VI: transistor count for ternary and binary adders";
  TextTable t{"Table VI", {"", "3-FA", "Nand-2 FA", "Xor-2 FA", "8T-FA"}, {}, {}};
  t.rows.push_back({"Transistor count", num(tern), num(transistor_count(BinaryFaVariant::Conventional28)),
                    num(transistor_count(BinaryFaVariant::TransmissionGate14)) + " to " +
                        num(transistor_count(BinaryFaVariant::TransmissionGate16)),
                    num(transistor_count(BinaryFaVariant::Compact8))});
  const auto trunc1 = [](double r) { return format_ratio(r, 1, Rounding::Truncate); };
  t.rows.push_back({"Ratio 3/2", "", trunc1(ratio(BinaryFaVariant::Conventional28)),
                    trunc1(ratio(BinaryFaVariant::TransmissionGate16)) + " to " +
                        trunc1(ratio(BinaryFaVariant::TransmissionGate14)),
                    trunc1(ratio(BinaryFaVariant::Compact8))});
  t.notes.push_back("ratios truncated to one decimal as published; exact values " +
                    format_ratio(ratio(BinaryFaVariant::Conventional28), 2) + ", " +
                    format_ratio(ratio(BinaryFaVariant::TransmissionGate16), 2) + " to " +
                    format_ratio(ratio(BinaryFaVariant::TransmissionGate14), 2) + ", " +
                    format_ratio(ratio(BinaryFaVariant::Compact8), 2));
  doc.discrepancies.push_back({"Table VI: Xor-2 FA ratio interval", "7.7 to 8.8",
                               format_ratio(ratio(BinaryFaVariant::TransmissionGate16), 2) + " to " +
                                   format_ratio(ratio(BinaryFaVariant::TransmissionGate14), 2),
                               "rounded to one decimal: " +
                                   format_ratio(ratio(BinaryFaVariant::TransmissionGate16), 1) + " to " +
                                   format_ratio(ratio(BinaryFaVariant::TransmissionGate14), 1) + " (" +
                                   signed_delta(0.1, 0.0) + " on both bounds)"});
  const double capacitive = ratio_report(static_cast<double>(transistor_count(TernaryFaVariant::Capacitive27)),
                                         static_cast<double>(transistor_count(BinaryFaVariant::Capacitive11)));
  t.notes.push_back("capacitive-input full adders: 27T / 11T = " + format_ratio(capacitive, 2));
  doc.ok = t.rows[0] == std::vector<std::string>{"Transistor count", "124", "28", "14 to 16", "8"} &&
           t.rows[1] == std::vector<std::string>{"Ratio 3/2", "", "4.4", "7.7 to 8.8", "15.5"} &&
           format_ratio(capacitive, 2) == "2.45";
  doc.data["ratios"] = {{"conventional-28", ratio(BinaryFaVariant::Conventional28)},
                        {"transmission-gate-16", ratio(BinaryFaVariant::TransmissionGate16)},
                        {"transmission-gate-14", ratio(BinaryFaVariant::TransmissionGate14)},
                        {"compact-8", ratio(BinaryFaVariant::Compact8)},
                        {"capacitive", capacitive}};
  doc.tables.push_back(std::move(t));
  return doc;
}

Document table_seven() {
  const CostTable table = builtin_cost_table();
  const auto four = cla_carry_cost(Radix::binary(), 4, 4, table);
  const auto eight = cla_carry_cost(Radix::binary(), 8, 4, table);
  Document doc;
  doc.title = "Table VII: transistor count for the carry computations of a 8-bit CLA";
  TextTable t{"Table VII", {"Function"}, {{"Transistor count"}}, {}};
  for (const auto& line : four.lines) {
    t.columns.push_back(line.label);
    t.rows[0].push_back(num(line.subtotal));
  }
  t.columns.insert(t.columns.end(), {"4-bit", "8-bit"});
  t.rows[0].insert(t.rows[0].end(), {num(four.total), num(eight.total)});
  doc.ok = t.rows[0] ==
           std::vector<std::string>{"Transistor count", "24", "24", "10", "18", "28", "40", "144", "288"};
  doc.data["four_bit"] = four.total;
  doc.data["eight_bit"] = eight.total;
  doc.tables.push_back(std::move(t));
  return doc;
}

Document table_eight() {
  const CostTable table = builtin_cost_table();
  const auto five = cla_carry_cost(Radix::ternary(), 5, 5, table);
  Document doc;
  doc.title = "Table VIII: transistor count for the carry computations of a 5-trit CLA";
  TextTable t{"Table VIII", {"Function"}, {{"Computed"}, {"Published"}, {"Match"}}, {}};
  static constexpr std::uint64_t kPublished[] = {80, 90, 10, 18, 28, 40, 54, 310};
  std::vector<std::uint64_t> computed;
  for (const auto& line : five.lines) {
    t.columns.push_back(line.label);
    computed.push_back(line.subtotal);
  }
  t.columns.push_back("5-trit");
  computed.push_back(five.total);
  bool components_match = computed.size() == std::size(kPublished);
  for (std::size_t i = 0; i < computed.size() && i < std::size(kPublished); ++i) {
    t.rows[0].push_back(num(computed[i]));
    t.rows[1].push_back(num(kPublished[i]));
    t.rows[2].push_back(signed_delta(double(computed[i]), double(kPublished[i])));
    if (i + 1 < computed.size()) components_match = components_match && computed[i] == kPublished[i];
  }
  t.notes.push_back("the published total (310) is not the sum of its own entries (" + num(five.total) + ")");
  doc.discrepancies.push_back({"Table VIII: 5-trit CLA carry logic total", "310", num(five.total),
                               "sum of the table's own entries"});
  doc.ok = components_match;
  doc.data["computed_total"] = five.total;
  doc.data["published_total"] = 310;
  doc.tables.push_back(std::move(t));
  return doc;
}

Document table_nine() {
  const CostTable table = builtin_cost_table();
  const auto b4 = csa_skip_cost(Radix::binary(), 4, 4, table);
  const auto b8 = csa_skip_cost(Radix::binary(), 8, 4, table);
  const auto t5 = csa_skip_cost(Radix::ternary(), 5, 5, table);
  Document doc;
  doc.title = "Table IX: transistor count for the carry computations of 8-bit and 5-trit CSAs";
  TextTable t{"Table IX", {"", "Pi", "Nand+inverter", "Mux", "4-bit CS", "8-bit 5-trit CS"}, {}, {}};
  t.rows.push_back({"Binary", num(b4.lines[0].subtotal), num(b4.lines[1].subtotal), num(b4.lines[2].subtotal),
                    num(b4.total), num(b8.total)});
  t.rows.push_back({"Ternary", num(t5.lines[0].subtotal), num(t5.lines[1].subtotal), num(t5.lines[2].subtotal), "",
                    num(t5.total)});
  t.notes.push_back("the published binary Pi entry reads '24i'; taken as 24");
  doc.ok = t.rows[0] == std::vector<std::string>{"Binary", "24", "10", "14", "48", "96"} &&
           t.rows[1] == std::vector<std::string>{"Ternary", "90", "12", "14", "", "116"};
  doc.data["binary_4"] = b4.total;
  doc.data["binary_8"] = b8.total;
  doc.data["ternary_5"] = t5.total;
  doc.tables.push_back(std::move(t));
  return doc;
}

}  // namespace

Document table_document(std::string_view id) {
  if (id == "I") return table_one();
  if (id == "II") return table_two();
  if (id == "III") return multiplier_table(8);
  if (id == "IV") return multiplier_table(12);
  if (id == "V") return multiplier_table(16);
  if (id == "VI") return table_six();
  if (id == "VII") return table_seven();
  if (id == "VIII") return table_eight();
  if (id == "IX") return table_nine();
  throw std::invalid_argument("unknown table '" + std::string(id) + "' (expected I..IX)");
}

}  // namespace radixbench
