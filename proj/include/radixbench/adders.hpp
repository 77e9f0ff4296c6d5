// Ripple-carry, carry-lookahead and carry-skip adder generators.
//
// All three share one port layout: inputs a0..a{w-1}, b0..b{w-1} (operand
// radix) and cin (binary); outputs s0..s{w-1} and cout (binary).
#pragma once

#include <cstddef>

#include "radixbench/netlist.hpp"

namespace radixbench {

enum class AdderKind { CPA, CLA, CSA };

struct AdderArch {
  AdderKind kind = AdderKind::CPA;
  std::size_t block_size = 0;  // CLA/CSA only, in [2,5]

  static AdderArch cpa() { return {AdderKind::CPA, 0}; }
  static AdderArch cla(std::size_t block_size) { return {AdderKind::CLA, block_size}; }
  static AdderArch csa(std::size_t block_size) { return {AdderKind::CSA, block_size}; }
};

std::string to_string(const AdderArch& arch);

/// Chain of `width` full adders. Throws std::invalid_argument for width 0.
Circuit build_cpa(Radix radix, std::size_t width);

/// Full adders fed by per-block lookahead carries. Each block computes
/// C1..Ck from its own generate/propagate cells and block carry-in; blocks
/// ripple into each other. A trailing partial block is narrower.
/// Throws std::invalid_argument for width 0 or block_size outside [2,5].
Circuit build_cla(Radix radix, std::size_t width, std::size_t block_size);

/// Ripple blocks whose carry-out is muxed to the block carry-in when every
/// position in the block propagates.
Circuit build_csa(Radix radix, std::size_t width, std::size_t block_size);

Circuit build_adder(const AdderArch& arch, Radix radix, std::size_t width);

/// Operands a, b, cin; output s then cout.
Encoding adder_encoding(const Circuit& adder);

struct AdderSummary {
  std::size_t fa_count = 0;
  CellCount aux_gate_counts;  // everything except full adders
  std::size_t carry_block_count = 0;
};

AdderSummary adder_summary(const AdderArch& arch, Radix radix, std::size_t width);

/// Sizes of the lookahead/skip blocks for a width, last block possibly short.
std::vector<std::size_t> block_sizes(std::size_t width, std::size_t block_size);

}  // namespace radixbench
