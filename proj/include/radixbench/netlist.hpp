// Combinational netlists over radix-tagged nets.
#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "radixbench/cells.hpp"
#include "radixbench/core.hpp"

namespace radixbench {

using NetId = std::uint32_t;

struct Port {
  std::string name;
  NetId net = 0;
  Radix radix = Radix::binary();  // authoritative for inputs, derived from the driver for outputs
  friend bool operator==(const Port&, const Port&) = default;
};

struct CellInstance {
  CellKind kind;
  std::vector<NetId> inputs;
  std::vector<NetId> outputs;
  friend bool operator==(const CellInstance&, const CellInstance&) = default;
};

/// Immutable, validated netlist. Every net has exactly one driver (a
/// circuit input or a cell output), port radices match the cell kinds,
/// and the cell graph is acyclic. Cell outputs may be left unread.
class Circuit {
 public:
  Circuit() = default;

  /// Validates and topologically orders the cells. Net radices are
  /// derived from the drivers. Throws std::invalid_argument on any
  /// structural violation (multiple drivers, undriven net, radix
  /// mismatch, arity mismatch, cycle, duplicate port name).
  Circuit(std::vector<Port> inputs, std::vector<Port> outputs, std::vector<CellInstance> cells,
          std::optional<std::size_t> net_count = std::nullopt);

  const std::vector<Port>& inputs() const noexcept { return inputs_; }
  const std::vector<Port>& outputs() const noexcept { return outputs_; }
  const std::vector<CellInstance>& cells() const noexcept { return cells_; }
  std::size_t net_count() const noexcept { return net_radix_.size(); }
  Radix net_radix(NetId net) const { return net_radix_.at(net); }
  Radix input_radix(std::size_t i) const { return net_radix_.at(inputs_.at(i).net); }
  Radix output_radix(std::size_t i) const { return net_radix_.at(outputs_.at(i).net); }

  /// Cell indices in evaluation order.
  const std::vector<std::size_t>& order() const noexcept { return order_; }

  std::optional<std::size_t> find_input(std::string_view name) const;
  std::optional<std::size_t> find_output(std::string_view name) const;

 private:
  std::vector<Port> inputs_;
  std::vector<Port> outputs_;
  std::vector<CellInstance> cells_;
  std::vector<Radix> net_radix_;
  std::vector<std::size_t> order_;
};

/// Incremental construction. Cells may only read nets that already exist,
/// so anything a builder produces is acyclic by construction.
class CircuitBuilder {
 public:
  NetId add_input(std::string name, Radix radix);

  /// Adds a cell and returns its freshly created output nets.
  /// Throws std::invalid_argument on arity or radix mismatch.
  std::vector<NetId> add_cell(CellKind kind, std::vector<NetId> inputs);

  void add_output(std::string name, NetId net);

  Radix radix_of(NetId net) const { return net_radix_.at(net); }
  std::size_t cell_count() const noexcept { return cells_.size(); }
  const std::vector<CellInstance>& cells() const noexcept { return cells_; }

  Circuit build() const;

 private:
  std::vector<Port> inputs_;
  std::vector<Port> outputs_;
  std::vector<CellInstance> cells_;
  std::vector<Radix> net_radix_;
};

/// Re-entrant evaluator holding its own net buffer.
class Simulator {
 public:
  explicit Simulator(const Circuit& circuit);

  /// Evaluates every net from positional input digits; the returned span
  /// (indexed by NetId) stays valid until the next call. Digits are not
  /// range-checked here.
  std::span<const Digit> run(std::span<const Digit> input_digits);

  /// Output digits of the last run, in output-port order.
  void read_outputs(std::span<Digit> out) const;

 private:
  struct Step {
    CellKind kind;
    std::uint32_t in_offset;
    std::uint32_t out_offset;
  };
  std::vector<NetId> input_nets_;
  std::vector<NetId> output_nets_;
  std::vector<Step> steps_;
  std::vector<NetId> pins_;
  std::vector<Digit> in_scratch_;
  std::vector<Digit> out_scratch_;
  std::vector<Digit> values_;
};

/// Positional simulation with range checks; returns output digits.
std::vector<Digit> simulate(const Circuit& circuit, std::span<const Digit> inputs);

/// Named simulation. Throws std::invalid_argument on a missing or unknown
/// input name and std::domain_error on an out-of-range digit.
std::map<std::string, Digit> simulate(const Circuit& circuit, const std::map<std::string, Digit>& assignment);

using CellCount = std::map<CellKind, std::size_t>;

CellCount count_cells(const Circuit& circuit);
std::size_t count_full_adders(const CellCount& counts);
std::size_t count_half_adders(const CellCount& counts);
std::size_t count_elementary_multipliers(const CellCount& counts);

/// How circuit ports map to integers. Each operand lists input-port
/// positions little-endian (weights are the running product of the port
/// radices); the output lists (port position, weight) pairs.
struct Operand {
  std::string name;
  std::vector<std::size_t> inputs;
};

struct Encoding {
  std::vector<Operand> operands;
  std::vector<std::pair<std::size_t, std::uint64_t>> outputs;

  /// Groups ports by name prefix: a prefix matches the port named exactly
  /// so or the prefix followed by a decimal index, ordered by index.
  /// Output weights follow the mixed-radix positional rule in the given
  /// prefix order.
  static Encoding from_ports(const Circuit& circuit, const std::vector<std::string>& operand_prefixes,
                             const std::vector<std::string>& output_prefixes);
};

using Oracle = std::function<std::uint64_t(std::span<const std::uint64_t>)>;

enum class CheckMode { Exhaustive, Sampled };

struct CheckOptions {
  std::uint64_t cap = std::uint64_t{1} << 21;  // enumerate when the input space is at most this
  std::uint64_t samples = 100000;              // sample count otherwise
  std::uint64_t seed = 1;
};

struct Counterexample {
  std::vector<std::uint64_t> operands;
  std::uint64_t expected = 0;
  std::uint64_t got = 0;
};

struct VerificationReport {
  std::string circuit_id;
  CheckMode mode = CheckMode::Exhaustive;
  std::uint64_t vectors = 0;
  bool passed = true;
  std::optional<Counterexample> counterexample;
};

/// Compares the circuit against `oracle` over the whole input space when
/// it has at most options.cap points, otherwise over options.samples
/// seeded uniform draws. Stops at the first counterexample. Throws
/// std::invalid_argument if the encoding does not cover every input port
/// exactly once or names a nonexistent port.
VerificationReport exhaustive_check(const Circuit& circuit, const Oracle& oracle, const Encoding& encoding,
                                    const CheckOptions& options = {}, std::string circuit_id = {});

/// Input-space size, or nullopt when it exceeds 64 bits.
std::optional<std::uint64_t> input_space_size(const Circuit& circuit);

}  // namespace radixbench
