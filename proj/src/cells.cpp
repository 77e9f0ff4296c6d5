#include "radixbench/cells.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>

namespace radixbench {

namespace {

void require_digit(Digit d, int radix, const char* what) {
  if (d >= radix) {
    throw std::domain_error(std::string(what) + ": digit " + std::to_string(d) + " out of range for radix " +
                            std::to_string(radix));
  }
}

void require_range(int value, int lo, int hi, const char* what) {
  if (value < lo || value > hi) {
    throw std::invalid_argument(std::string(what) + " " + std::to_string(value) + " outside [" +
                                std::to_string(lo) + "," + std::to_string(hi) + "]");
  }
}

const char* port_pattern(CellTag tag, int binary_inputs) {
  if (tag == CellTag::TernFA) {
    switch (binary_inputs) {
      case 1: return "TTB";
      case 2: return "TBB";
      default: return "BBB";
    }
  }
  switch (binary_inputs) {
    case 0: return "TT";
    case 1: return "TB";
    default: return "BB";
  }
}

// Reads "(n)" starting at text[pos]; returns n.
int parse_parenthesized(std::string_view text, std::size_t pos) {
  if (pos >= text.size() || text[pos] != '(' || text.back() != ')') {
    throw std::invalid_argument("malformed cell kind: " + std::string(text));
  }
  int value = 0;
  const auto* first = text.data() + pos + 1;
  const auto* last = text.data() + text.size() - 1;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) throw std::invalid_argument("malformed cell kind: " + std::string(text));
  return value;
}

}  // namespace

CellKind CellKind::tern_fa(int binary_inputs) {
  require_range(binary_inputs, 1, 3, "TernFA binary input count");
  return {CellTag::TernFA, binary_inputs};
}

CellKind CellKind::tern_ha(int binary_inputs) {
  require_range(binary_inputs, 0, 2, "TernHA binary input count");
  return {CellTag::TernHA, binary_inputs};
}

CellKind CellKind::generate(Radix radix) noexcept {
  return {radix.is_binary() ? CellTag::BinGen : CellTag::TernGen, 0};
}

CellKind CellKind::propagate(Radix radix) noexcept {
  return {radix.is_binary() ? CellTag::BinProp : CellTag::TernProp, 0};
}

CellKind CellKind::and_n(int arity) {
  require_range(arity, 2, 8, "AndN arity");
  return {CellTag::AndN, arity};
}

CellKind CellKind::nand_inv(int arity) {
  require_range(arity, 2, 8, "NandInv arity");
  return {CellTag::NandInv, arity};
}

CellKind CellKind::carry_eqn(int index) {
  require_range(index, 1, 5, "CarryEqn index");
  return {CellTag::CarryEqn, index};
}

CellKind CellKind::cost_key() const noexcept {
  if (tag_ == CellTag::TernFA) return {CellTag::TernFA, 1};
  if (tag_ == CellTag::TernHA) return {CellTag::TernHA, 0};
  return *this;
}

std::string CellKind::name() const {
  switch (tag_) {
    case CellTag::BinFA: return "BinFA";
    case CellTag::BinHA: return "BinHA";
    case CellTag::TernFA:
      return param_ == 1 ? "TernFA" : std::string("TernFA[") + port_pattern(tag_, param_) + "]";
    case CellTag::TernHA:
      return param_ == 0 ? "TernHA" : std::string("TernHA[") + port_pattern(tag_, param_) + "]";
    case CellTag::BitMul: return "BitMul";
    case CellTag::TritMul: return "TritMul";
    case CellTag::BinGen: return "BinGen";
    case CellTag::BinProp: return "BinProp";
    case CellTag::TernGen: return "TernGen";
    case CellTag::TernProp: return "TernProp";
    case CellTag::AndN: return "AndN(" + std::to_string(param_) + ")";
    case CellTag::NandInv: return "NandInv(" + std::to_string(param_) + ")";
    case CellTag::Mux2: return "Mux2";
    case CellTag::CarryEqn: return "CarryEqn(" + std::to_string(param_) + ")";
    case CellTag::Widen: return "Widen";
  }
  return "?";
}

CellKind CellKind::parse(std::string_view text) {
  static const std::pair<std::string_view, CellKind> kSimple[] = {
      {"BinFA", bin_fa()},           {"BinHA", bin_ha()},
      {"TernFA", tern_fa(1)},        {"TernFA[TTB]", tern_fa(1)},
      {"TernFA[TBB]", tern_fa(2)},   {"TernFA[BBB]", tern_fa(3)},
      {"TernHA", tern_ha(0)},        {"TernHA[TT]", tern_ha(0)},
      {"TernHA[TB]", tern_ha(1)},    {"TernHA[BB]", tern_ha(2)},
      {"BitMul", bit_mul()},         {"TritMul", trit_mul()},
      {"BinGen", generate(Radix::binary())},   {"BinProp", propagate(Radix::binary())},
      {"TernGen", generate(Radix::ternary())}, {"TernProp", propagate(Radix::ternary())},
      {"Mux2", mux2()},              {"Widen", widen()},
  };
  for (const auto& [name, kind] : kSimple) {
    if (text == name) return kind;
  }
  if (text.starts_with("AndN")) return and_n(parse_parenthesized(text, 4));
  if (text.starts_with("NandInv")) return nand_inv(parse_parenthesized(text, 7));
  if (text.starts_with("CarryEqn")) return carry_eqn(parse_parenthesized(text, 8));
  throw std::invalid_argument("unknown cell kind: " + std::string(text));
}

PortSpec port_spec(CellKind kind) {
  const Radix B = Radix::binary();
  const Radix T = Radix::ternary();
  PortSpec spec;
  auto set = [&](std::vector<Radix> in, std::vector<std::string> in_names, std::vector<Radix> out,
                 std::vector<std::string> out_names) {
    spec.inputs = std::move(in);
    spec.input_names = std::move(in_names);
    spec.outputs = std::move(out);
    spec.output_names = std::move(out_names);
  };
  switch (kind.tag()) {
    case CellTag::BinFA: set({B, B, B}, {"a", "b", "cin"}, {B, B}, {"s", "cout"}); break;
    case CellTag::BinHA: set({B, B}, {"a", "b"}, {B, B}, {"s", "cout"}); break;
    case CellTag::TernFA: {
      std::vector<Radix> in(3, T);
      for (int i = 0; i < kind.param(); ++i) in[2 - i] = B;
      set(std::move(in), {"a", "b", "cin"}, {T, B}, {"s", "cout"});
      break;
    }
    case CellTag::TernHA:
      if (kind.param() == 2) {
        set({B, B}, {"a", "b"}, {T}, {"s"});
      } else {
        set({T, kind.param() == 1 ? B : T}, {"a", "b"}, {T, B}, {"s", "cout"});
      }
      break;
    case CellTag::BitMul: set({B, B}, {"a", "b"}, {B}, {"p"}); break;
    case CellTag::TritMul: set({T, T}, {"a", "b"}, {T, B}, {"p", "c"}); break;
    case CellTag::BinGen: set({B, B}, {"a", "b"}, {B}, {"g"}); break;
    case CellTag::BinProp: set({B, B}, {"a", "b"}, {B}, {"p"}); break;
    case CellTag::TernGen: set({T, T}, {"a", "b"}, {B}, {"g"}); break;
    case CellTag::TernProp: set({T, T}, {"a", "b"}, {B}, {"p"}); break;
    case CellTag::AndN:
    case CellTag::NandInv: {
      std::vector<std::string> names;
      for (int i = 0; i < kind.param(); ++i) names.push_back("x" + std::to_string(i));
      set(std::vector<Radix>(kind.param(), B), std::move(names), {B}, {"y"});
      break;
    }
    case CellTag::Mux2: set({B, B, B}, {"sel", "in0", "in1"}, {B}, {"y"}); break;
    case CellTag::CarryEqn: {
      const int k = kind.param();
      std::vector<std::string> names;
      for (int i = 0; i < k; ++i) names.push_back("g" + std::to_string(i));
      for (int i = 0; i < k; ++i) names.push_back("p" + std::to_string(i));
      names.push_back("c0");
      set(std::vector<Radix>(2 * k + 1, B), std::move(names), {B}, {"c" + std::to_string(k)});
      break;
    }
    case CellTag::Widen: set({B}, {"x"}, {T}, {"y"}); break;
  }
  return spec;
}

void evaluate_unchecked(CellKind kind, const Digit* in, Digit* out) noexcept {
  switch (kind.tag()) {
    case CellTag::BinFA: {
      const int s = in[0] + in[1] + in[2];
      out[0] = static_cast<Digit>(s & 1);
      out[1] = static_cast<Digit>(s >> 1);
      return;
    }
    case CellTag::BinHA: {
      const int s = in[0] + in[1];
      out[0] = static_cast<Digit>(s & 1);
      out[1] = static_cast<Digit>(s >> 1);
      return;
    }
    case CellTag::TernFA: {
      const int s = in[0] + in[1] + in[2];
      const int c = s >= 3 ? 1 : 0;
      out[0] = static_cast<Digit>(s - 3 * c);
      out[1] = static_cast<Digit>(c);
      return;
    }
    case CellTag::TernHA: {
      const int s = in[0] + in[1];
      if (kind.param() == 2) {
        out[0] = static_cast<Digit>(s);
        return;
      }
      const int c = s >= 3 ? 1 : 0;
      out[0] = static_cast<Digit>(s - 3 * c);
      out[1] = static_cast<Digit>(c);
      return;
    }
    case CellTag::BitMul: out[0] = static_cast<Digit>(in[0] & in[1]); return;
    case CellTag::TritMul: {
      const int p = in[0] * in[1];
      out[0] = static_cast<Digit>(p % 3);
      out[1] = static_cast<Digit>(p / 3);
      return;
    }
    case CellTag::BinGen: out[0] = static_cast<Digit>(in[0] & in[1]); return;
    case CellTag::BinProp: out[0] = static_cast<Digit>(in[0] ^ in[1]); return;
    case CellTag::TernGen: out[0] = static_cast<Digit>(in[0] + in[1] >= 3); return;
    case CellTag::TernProp: out[0] = static_cast<Digit>(in[0] + in[1] == 2); return;
    case CellTag::AndN:
    case CellTag::NandInv: {
      Digit y = 1;
      for (int i = 0; i < kind.param(); ++i) y &= in[i];
      out[0] = y;
      return;
    }
    case CellTag::Mux2: out[0] = in[0] ? in[2] : in[1]; return;
    case CellTag::CarryEqn: {
      // Two-level sum of products: c_k = g_{k-1} + g_{k-2}.p_{k-1} + ... + p_0..p_{k-1}.c0
      const int k = kind.param();
      const Digit* g = in;
      const Digit* p = in + k;
      Digit carry = 0;
      for (int j = 0; j <= k; ++j) {
        Digit term = j < k ? g[j] : in[2 * k];
        for (int i = (j < k ? j + 1 : 0); i < k; ++i) term &= p[i];
        carry |= term;
      }
      out[0] = carry;
      return;
    }
    case CellTag::Widen: out[0] = in[0]; return;
  }
}

std::vector<Digit> evaluate(CellKind kind, std::span<const Digit> inputs) {
  const PortSpec spec = port_spec(kind);
  if (inputs.size() != spec.inputs.size()) {
    throw std::invalid_argument(kind.name() + " expects " + std::to_string(spec.inputs.size()) + " inputs, got " +
                                std::to_string(inputs.size()));
  }
  for (std::size_t i = 0; i < inputs.size(); ++i) require_digit(inputs[i], spec.inputs[i].value(), "evaluate");
  std::vector<Digit> outputs(spec.outputs.size(), 0);
  evaluate_unchecked(kind, inputs.data(), outputs.data());
  return outputs;
}

SumCarry bin_full_add(Digit a, Digit b, Digit cin) {
  require_digit(a, 2, "bin_full_add");
  require_digit(b, 2, "bin_full_add");
  require_digit(cin, 2, "bin_full_add");
  const int s = a + b + cin;
  return {static_cast<Digit>(s & 1), static_cast<Digit>(s >> 1)};
}

SumCarry tern_add3(Digit a, Digit b, Digit c) {
  require_digit(a, 3, "tern_add3");
  require_digit(b, 3, "tern_add3");
  require_digit(c, 3, "tern_add3");
  const int s = a + b + c;
  if (s > 5) throw std::domain_error("tern_add3: sum " + std::to_string(s) + " needs a non-binary carry");
  const int carry = s >= 3 ? 1 : 0;
  return {static_cast<Digit>(s - 3 * carry), static_cast<Digit>(carry)};
}

Digit bit_mul(Digit a, Digit b) {
  require_digit(a, 2, "bit_mul");
  require_digit(b, 2, "bit_mul");
  return static_cast<Digit>(a & b);
}

ProductCarry trit_mul(Digit a, Digit b) {
  require_digit(a, 3, "trit_mul");
  require_digit(b, 3, "trit_mul");
  static constexpr ProductCarry kTable[3][3] = {
      {{0, 0}, {0, 0}, {0, 0}},
      {{0, 0}, {1, 0}, {2, 0}},
      {{0, 0}, {2, 0}, {1, 1}},
  };
  return kTable[a][b];
}

DecodedTrit trit_decode(Digit x) {
  require_digit(x, 3, "trit_decode");
  return {x == 2, x == 1};
}

ProductCarry trit_mul_gates(Digit a, Digit b) {
  const auto [a1, a0] = trit_decode(a);
  const auto [b1, b0] = trit_decode(b);
  const bool s2 = (a1 && !b1 && b0) || (b1 && !a1 && a0);
  const bool s1 = (a1 && b1) || (!b1 && b0 && !a1 && a0);
  const bool cm = a1 && b1;
  const Digit product = s2 ? 2 : (s1 ? 1 : 0);
  return {product, static_cast<Digit>(cm)};
}

Digit carry_generate(Radix radix, Digit a, Digit b) {
  require_digit(a, radix.value(), "carry_generate");
  require_digit(b, radix.value(), "carry_generate");
  return static_cast<Digit>(a + b >= radix.value());
}

Digit carry_propagate(Radix radix, Digit a, Digit b) {
  require_digit(a, radix.value(), "carry_propagate");
  require_digit(b, radix.value(), "carry_propagate");
  return static_cast<Digit>(a + b == radix.value() - 1);
}

TruthTable truth_table(CellKind kind) {
  TruthTable table{kind, port_spec(kind), {}};
  const auto& radices = table.ports.inputs;
  std::vector<Digit> in(radices.size(), 0);
  std::vector<Digit> out(table.ports.outputs.size(), 0);
  while (true) {
    evaluate_unchecked(kind, in.data(), out.data());
    table.rows.push_back({in, out});
    // Odometer with the last input fastest.
    std::size_t i = in.size();
    while (i > 0) {
      --i;
      if (++in[i] < radices[i].value()) break;
      in[i] = 0;
      if (i == 0) return table;
    }
    if (in.empty()) return table;
  }
}

std::string to_csv(const TruthTable& table) {
  std::ostringstream os;
  bool first = true;
  for (const auto& names : {table.ports.input_names, table.ports.output_names}) {
    for (const auto& n : names) {
      os << (first ? "" : ",") << n;
      first = false;
    }
  }
  os << '\n';
  for (const auto& row : table.rows) {
    first = true;
    for (const auto* digits : {&row.inputs, &row.outputs}) {
      for (Digit d : *digits) {
        os << (first ? "" : ",") << static_cast<int>(d);
        first = false;
      }
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace radixbench
