// Functional models of the elementary binary and ternary cells.
//
// Every carry produced by a ternary cell is a binary signal: the largest
// sum a ternary adder cell ever sees is 5 = 2 + 3*1.
#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "radixbench/core.hpp"

namespace radixbench {

enum class CellTag : std::uint8_t {
  BinFA,
  BinHA,
  TernFA,
  TernHA,
  BitMul,
  TritMul,
  BinGen,
  BinProp,
  TernGen,
  TernProp,
  AndN,
  NandInv,
  Mux2,
  CarryEqn,
  Widen,
};

/// Elementary cell kind. `param` is the arity for AndN/NandInv, the carry
/// index for CarryEqn, and for TernFA/TernHA the number of binary input
/// ports (TernFA: 1 = trit,trit,bit; 2 = trit,bit,bit; 3 = bit,bit,bit.
/// TernHA: 0 = trit,trit; 1 = trit,bit; 2 = bit,bit with a single trit out).
/// Widen re-levels a binary signal onto a ternary net with the same value.
class CellKind {
 public:
  static CellKind bin_fa() noexcept { return {CellTag::BinFA, 0}; }
  static CellKind bin_ha() noexcept { return {CellTag::BinHA, 0}; }
  static CellKind tern_fa(int binary_inputs = 1);
  static CellKind tern_ha(int binary_inputs = 0);
  static CellKind bit_mul() noexcept { return {CellTag::BitMul, 0}; }
  static CellKind trit_mul() noexcept { return {CellTag::TritMul, 0}; }
  static CellKind generate(Radix radix) noexcept;
  static CellKind propagate(Radix radix) noexcept;
  static CellKind and_n(int arity);
  static CellKind nand_inv(int arity);
  static CellKind mux2() noexcept { return {CellTag::Mux2, 0}; }
  static CellKind carry_eqn(int index);
  static CellKind widen() noexcept { return {CellTag::Widen, 0}; }

  /// Inverse of name(); throws std::invalid_argument on unknown text.
  static CellKind parse(std::string_view text);

  CellTag tag() const noexcept { return tag_; }
  int param() const noexcept { return param_; }

  /// "BinFA", "TernFA[TBB]", "AndN(4)", "CarryEqn(3)", ...
  std::string name() const;

  bool is_full_adder() const noexcept { return tag_ == CellTag::BinFA || tag_ == CellTag::TernFA; }
  bool is_half_adder() const noexcept { return tag_ == CellTag::BinHA || tag_ == CellTag::TernHA; }
  bool is_elementary_multiplier() const noexcept { return tag_ == CellTag::BitMul || tag_ == CellTag::TritMul; }

  /// Kind used for pricing: port variants of TernFA/TernHA share one entry.
  CellKind cost_key() const noexcept;

  friend auto operator<=>(const CellKind&, const CellKind&) = default;

 private:
  CellKind(CellTag tag, int param) noexcept : tag_(tag), param_(param) {}
  CellTag tag_;
  int param_;
};

struct PortSpec {
  std::vector<Radix> inputs;
  std::vector<Radix> outputs;
  std::vector<std::string> input_names;
  std::vector<std::string> output_names;
};

PortSpec port_spec(CellKind kind);

/// Evaluates a cell. Throws std::invalid_argument on arity mismatch and
/// std::domain_error on an out-of-range digit.
std::vector<Digit> evaluate(CellKind kind, std::span<const Digit> inputs);

/// Unchecked evaluation used by the simulator's inner loop.
void evaluate_unchecked(CellKind kind, const Digit* inputs, Digit* outputs) noexcept;

struct SumCarry {
  Digit sum = 0;
  Digit carry = 0;
  friend bool operator==(const SumCarry&, const SumCarry&) = default;
};

struct ProductCarry {
  Digit product = 0;
  Digit carry = 0;
  friend bool operator==(const ProductCarry&, const ProductCarry&) = default;
};

/// One-hot style decoding of a trit: x1 flags 2, x0 flags 1.
struct DecodedTrit {
  bool x1 = false;
  bool x0 = false;
  friend bool operator==(const DecodedTrit&, const DecodedTrit&) = default;
};

SumCarry bin_full_add(Digit a, Digit b, Digit cin);

/// a + b + c as a trit and a binary carry. Throws std::domain_error when a
/// digit exceeds 2 or the sum exceeds 5.
SumCarry tern_add3(Digit a, Digit b, Digit c);

Digit bit_mul(Digit a, Digit b);

/// Table form of the 1-trit multiplier: product + 3 * carry == a * b.
ProductCarry trit_mul(Digit a, Digit b);

DecodedTrit trit_decode(Digit x);

/// Gate form of the 1-trit multiplier, evaluated from decoded inputs:
///   S2 = A1.~B1.B0 + B1.~A1.A0
///   S1 = A1.B1 + ~B1.B0.~A1.A0
///   Cm = A1.B1
/// and encoded as product = 2 if S2, 1 if S1, else 0.
ProductCarry trit_mul_gates(Digit a, Digit b);

/// 1 iff a + b >= radix.
Digit carry_generate(Radix radix, Digit a, Digit b);

/// 1 iff a + b == radix - 1 (XOR in binary).
Digit carry_propagate(Radix radix, Digit a, Digit b);

struct TruthRow {
  std::vector<Digit> inputs;
  std::vector<Digit> outputs;
};

struct TruthTable {
  CellKind kind;
  PortSpec ports;
  std::vector<TruthRow> rows;  // inputs in lexicographic order, first input slowest
};

TruthTable truth_table(CellKind kind);

/// Header of port names, then one line per row.
std::string to_csv(const TruthTable& table);

}  // namespace radixbench
