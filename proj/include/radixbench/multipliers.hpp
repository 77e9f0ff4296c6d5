// Array multipliers: partial-product generation, Wallace reduction over
// binary and mixed trit/bit rows, and a final ripple-carry addition.
//
// Ports: inputs a0..a{w-1}, b0..b{w-1}; outputs p0..p{2w-1}, all in the
// operand radix. A product weight that can never be nonzero has no port
// (only the top bit of a 1x1 binary multiplier).
#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "radixbench/netlist.hpp"

namespace radixbench {

struct Dot {
  std::size_t weight = 0;
  Radix radix = Radix::binary();
  NetId net = 0;
};

/// One line of the dot diagram: at most one dot per weight, one radix.
class DotRow {
 public:
  explicit DotRow(Radix radix) : radix_(radix) {}

  Radix radix() const noexcept { return radix_; }
  /// Throws std::invalid_argument on a duplicate weight.
  void add(std::size_t weight, NetId net);
  bool has(std::size_t weight) const { return dots_.contains(weight); }
  NetId at(std::size_t weight) const { return dots_.at(weight); }
  bool empty() const noexcept { return dots_.empty(); }
  std::size_t size() const noexcept { return dots_.size(); }
  std::vector<Dot> dots() const;
  const std::map<std::size_t, NetId>& by_weight() const noexcept { return dots_; }

 private:
  Radix radix_;
  std::map<std::size_t, NetId> dots_;
};

struct ReductionStep {
  std::size_t stage_index = 0;
  std::size_t rows_before = 0;
  std::size_t rows_after = 0;
  std::size_t fa_used = 0;
  std::size_t ha_used = 0;
};

/// What a binary 3-row group does with a column holding exactly two dots.
/// Eager: always a half adder. Lazy: pass both through when the carry row
/// has a free slot at that weight.
enum class HaPolicy { Eager, Lazy };

struct Reduction {
  std::vector<DotRow> rows;                 // at most two
  std::vector<ReductionStep> steps;
  std::vector<std::vector<DotRow>> stages;  // stages[0] is the input, stages[k] follows step k
  std::size_t fa_used = 0;
  std::size_t ha_used = 0;
};

/// Adds partial-product cells to `cb`. Binary: row j holds a_i AND b_j at
/// weight i+j. Ternary: for each j, a trit row with products at weight i+j
/// followed by a bit row with carries at weight i+j+1.
std::vector<DotRow> gen_partial_products(CircuitBuilder& cb, Radix radix, const std::vector<NetId>& a,
                                         const std::vector<NetId>& b);

/// Reduces rows to at most two, stage by stage.
///
/// Binary rows are split into consecutive groups of three; each group
/// becomes a sum row and a carry row, leftovers pass through.
///
/// Mixed rows are grouped greedily top-down: two trit rows with one bit
/// row first, then one trit row with two bit rows, then three bit rows,
/// then a pair of bit rows that collapses into a single trit row. Each
/// three-row group yields a trit row and a bit row of carries. A lone bit
/// whose carry-row slot is taken is widened into the trit row.
///
/// Group outputs precede pass-through rows in the next stage. Throws
/// std::invalid_argument on an empty row list.
Reduction reduce_wallace(CircuitBuilder& cb, std::vector<DotRow> rows, Radix operand_radix,
                         HaPolicy policy = HaPolicy::Eager);

struct MultiplierSummary {
  std::size_t elementary_mul_count = 0;
  std::size_t reduction_fa = 0;
  std::size_t reduction_ha = 0;
  std::size_t final_fa = 0;
  std::size_t final_ha = 0;
  std::size_t total_fa = 0;
  std::size_t total_ha = 0;
  double equivalent_fa = 0.0;  // total_fa + total_ha / 2
};

struct MultiplierBuild {
  Circuit circuit;
  Reduction reduction;
  MultiplierSummary summary;
  Encoding encoding;
};

/// Throws std::invalid_argument for width 0.
MultiplierBuild build_multiplier_detailed(Radix radix, std::size_t width, HaPolicy policy = HaPolicy::Eager);
Circuit build_multiplier(Radix radix, std::size_t width, HaPolicy policy = HaPolicy::Eager);
MultiplierSummary multiplier_summary(Radix radix, std::size_t width, HaPolicy policy = HaPolicy::Eager);

/// Row counts before the first stage and after each stage.
std::vector<std::size_t> stage_row_counts(const Reduction& reduction);

/// Numeric value of a set of rows given simulated net values.
std::uint64_t rows_value(const std::vector<DotRow>& rows, std::span<const Digit> nets, Radix operand_radix);

/// Text dump: per stage a header line, then one line per row, `T` or `B`
/// followed by the row's weights.
std::string dot_diagram(const Reduction& reduction);

struct MultiplierComparison {
  std::size_t n_bits = 0;
  std::size_t m_trits = 0;
  MultiplierSummary binary;
  MultiplierSummary ternary;
  double elementary_ratio = 0.0;     // binary / ternary
  double equivalent_fa_ratio = 0.0;  // binary / ternary
};

/// N-bit against M-trit multipliers with M = rounded_trit_width(N).
/// Throws std::invalid_argument for n_bits < 2.
MultiplierComparison compare_multipliers(std::size_t n_bits, HaPolicy policy = HaPolicy::Eager);

}  // namespace radixbench
