// Transistor-count pricing of cells and circuits.
#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "radixbench/netlist.hpp"

namespace radixbench {

enum class BinaryFaVariant { Conventional28, TransmissionGate16, TransmissionGate14, Compact8, Capacitive11 };
enum class TernaryFaVariant { Cntfet124, Capacitive27 };

std::string to_string(BinaryFaVariant v);
std::string to_string(TernaryFaVariant v);
std::uint64_t transistor_count(BinaryFaVariant v) noexcept;
std::uint64_t transistor_count(TernaryFaVariant v) noexcept;

/// One full-adder implementation per radix.
struct CostPreset {
  BinaryFaVariant binary = BinaryFaVariant::Conventional28;
  TernaryFaVariant ternary = TernaryFaVariant::Cntfet124;

  /// "conventional-28/cntfet-124"
  std::string name() const;

  /// Accepts "BIN", "TERN" or "BIN/TERN" using the variant names
  /// (conventional-28, transmission-gate-16, transmission-gate-14,
  /// compact-8, capacitive-11; cntfet-124, capacitive-27). Omitted halves
  /// default to conventional-28 and cntfet-124. Throws
  /// std::invalid_argument on an unknown name.
  static CostPreset parse(std::string_view text);
};

class UncostedKindError : public std::out_of_range {
 public:
  explicit UncostedKindError(const CellKind& kind)
      : std::out_of_range("cost table has no entry for " + kind.name()), kind_(kind) {}
  const CellKind& kind() const noexcept { return kind_; }

 private:
  CellKind kind_;
};

class CostTable {
 public:
  explicit CostTable(std::string name = {}) : name_(std::move(name)) {}

  const std::string& name() const noexcept { return name_; }
  const std::map<CellKind, std::uint64_t>& entries() const noexcept { return entries_; }

  void set(CellKind kind, std::uint64_t transistors) { entries_[kind.cost_key()] = transistors; }
  bool contains(CellKind kind) const { return entries_.contains(kind.cost_key()); }

  /// Throws UncostedKindError when the kind has no entry.
  std::uint64_t cost(CellKind kind) const;

  /// {"name": ..., "entries": {"BinFA": 28, ...}}
  nlohmann::ordered_json to_json() const;
  /// Throws std::invalid_argument on malformed input.
  static CostTable from_json(const nlohmann::ordered_json& doc);

 private:
  std::string name_;
  std::map<CellKind, std::uint64_t> entries_;
};

CostTable builtin_cost_table(const CostPreset& preset = {});

/// Sum of count * cost. Throws UncostedKindError rather than pricing a kind at 0.
std::uint64_t circuit_cost(const CellCount& counts, const CostTable& table);

struct CostLine {
  std::string label;
  std::size_t count = 0;
  std::uint64_t subtotal = 0;
};

struct CostBreakdown {
  std::vector<CostLine> lines;
  std::uint64_t total = 0;
};

/// Carry logic of a lookahead adder: generate cells, propagate cells, then
/// one line per carry equation C1..Ck (summed over blocks).
CostBreakdown cla_carry_cost(Radix radix, std::size_t width, std::size_t block_size, const CostTable& table);

/// Skip logic of a carry-skip adder: propagate cells, block AND gates, muxes.
CostBreakdown csa_skip_cost(Radix radix, std::size_t width, std::size_t block_size, const CostTable& table);

/// ternary_total / binary_total. Throws std::domain_error when binary_total is 0.
double ratio_report(double ternary_total, double binary_total);

enum class Rounding { Nearest, Truncate };

/// Fixed-point text with the given number of decimals.
std::string format_ratio(double ratio, int decimals, Rounding rounding = Rounding::Nearest);

}  // namespace radixbench
