// Comparison documents and their Markdown/CSV/JSON renderings.
#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "radixbench/adders.hpp"
#include "radixbench/costmodel.hpp"
#include "radixbench/multipliers.hpp"

namespace radixbench {

enum class Format { Markdown, Csv, Json };

/// "md", "csv" or "json"; throws std::invalid_argument otherwise.
Format parse_format(std::string_view text);

struct TextTable {
  std::string title;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> notes;
};

/// A published figure that the computed reproduction does not match.
struct Discrepancy {
  std::string item;
  std::string published;
  std::string computed;
  std::string note;
};

struct Document {
  std::string title;
  std::vector<TextTable> tables;
  bool with_appendix = false;  // emit the discrepancy section even when empty
  std::vector<Discrepancy> discrepancies;
  nlohmann::ordered_json data = nlohmann::ordered_json::object();  // full-precision values
  bool ok = true;  // false when a reproduction or verification is out of tolerance
};

std::string render(const Document& doc, Format format);

/// Label, both values, the ratio in the direction named by the label, and
/// where the row comes from.
struct ComparisonRow {
  std::string label;
  double binary_value = 0.0;
  double ternary_value = 0.0;
  double ratio = 0.0;  // binary / ternary
  std::string provenance;
};

/// Rows in the published label order: Ai*Bi, Reduction FA, ...,
/// Total equivalent FA.
std::vector<ComparisonRow> comparison_rows(const MultiplierComparison& cmp);

/// Published multiplier figures for N = 8, 12 and 16.
struct PublishedMultiplierTable {
  std::string id;
  std::size_t n_bits;
  std::size_t m_trits;
  MultiplierSummary binary;
  MultiplierSummary ternary;
  double elementary_ratio;
  double equivalent_fa_ratio;
};

std::optional<PublishedMultiplierTable> published_multiplier_table(std::size_t n_bits);

/// Equivalent-FA totals within 15% and the equivalent-FA ratio within 0.2
/// of the published figures; elementary counts exact.
struct ToleranceCheck {
  bool elementary_exact = false;
  double binary_equivalent_rel_error = 0.0;
  double ternary_equivalent_rel_error = 0.0;
  double ratio_abs_error = 0.0;
  bool within() const noexcept {
    return elementary_exact && binary_equivalent_rel_error <= 0.15 && ternary_equivalent_rel_error <= 0.15 &&
           ratio_abs_error <= 0.2;
  }
};

ToleranceCheck check_against_published(const MultiplierComparison& cmp, const PublishedMultiplierTable& published);

std::string describe(const AdderArch& arch, Radix radix, std::size_t width);

Document verification_document(const VerificationReport& report);
Document adder_counts_document(const AdderArch& arch, Radix radix, std::size_t width);
Document multiplier_counts_document(Radix radix, std::size_t width, HaPolicy policy);
Document adder_cost_document(const AdderArch& arch, Radix radix, std::size_t width, const CostTable& table);
Document multiplier_cost_document(Radix radix, std::size_t width, HaPolicy policy, const CostTable& table);
Document compare_document(std::size_t n_bits, const CostPreset& preset, HaPolicy policy = HaPolicy::Eager);

/// Roman numeral I..IX; throws std::invalid_argument for anything else.
Document table_document(std::string_view id);

}  // namespace radixbench
