#include "radixbench/netlist.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <limits>
#include <random>
#include <stdexcept>
#include <unordered_set>

namespace radixbench {

namespace {

[[noreturn]] void fail(const std::string& what) { throw std::invalid_argument("netlist: " + what); }

void check_unique_names(const std::vector<Port>& ports, const char* what) {
  std::unordered_set<std::string> seen;
  for (const auto& p : ports) {
    if (!seen.insert(p.name).second) fail(std::string("duplicate ") + what + " port name '" + p.name + "'");
  }
}

}  // namespace

Circuit::Circuit(std::vector<Port> inputs, std::vector<Port> outputs, std::vector<CellInstance> cells,
                 std::optional<std::size_t> net_count)
    : inputs_(std::move(inputs)), outputs_(std::move(outputs)), cells_(std::move(cells)) {
  check_unique_names(inputs_, "input");
  check_unique_names(outputs_, "output");

  std::size_t nets = net_count.value_or(0);
  if (!net_count) {
    auto bump = [&](NetId n) { nets = std::max<std::size_t>(nets, std::size_t{n} + 1); };
    for (const auto& p : inputs_) bump(p.net);
    for (const auto& p : outputs_) bump(p.net);
    for (const auto& c : cells_) {
      for (NetId n : c.inputs) bump(n);
      for (NetId n : c.outputs) bump(n);
    }
  }

  constexpr std::size_t kUndriven = std::numeric_limits<std::size_t>::max();
  constexpr std::size_t kInputDriver = kUndriven - 1;
  std::vector<std::size_t> driver(nets, kUndriven);
  std::vector<Radix> radix(nets, Radix::binary());
  auto drive = [&](NetId n, std::size_t who, Radix r) {
    if (n >= nets) fail("net " + std::to_string(n) + " outside net range");
    if (driver[n] != kUndriven) fail("net " + std::to_string(n) + " has more than one driver");
    driver[n] = who;
    radix[n] = r;
  };
  for (const auto& p : inputs_) drive(p.net, kInputDriver, p.radix);

  for (std::size_t ci = 0; ci < cells_.size(); ++ci) {
    const auto& cell = cells_[ci];
    const PortSpec spec = port_spec(cell.kind);
    if (cell.inputs.size() != spec.inputs.size() || cell.outputs.size() != spec.outputs.size()) {
      fail("cell " + std::to_string(ci) + " (" + cell.kind.name() + ") has wrong arity");
    }
    for (std::size_t k = 0; k < cell.outputs.size(); ++k) drive(cell.outputs[k], ci, spec.outputs[k]);
  }
  for (std::size_t n = 0; n < nets; ++n) {
    if (driver[n] == kUndriven) fail("net " + std::to_string(n) + " is not driven");
  }
  for (std::size_t ci = 0; ci < cells_.size(); ++ci) {
    const auto& cell = cells_[ci];
    const PortSpec spec = port_spec(cell.kind);
    for (std::size_t k = 0; k < cell.inputs.size(); ++k) {
      const NetId n = cell.inputs[k];
      if (n >= nets) fail("net " + std::to_string(n) + " outside net range");
      if (radix[n] != spec.inputs[k]) {
        fail("cell " + std::to_string(ci) + " (" + cell.kind.name() + ") input " + std::to_string(k) +
             " expects radix " + to_string(spec.inputs[k]) + " but net " + std::to_string(n) + " is radix " +
             to_string(radix[n]));
      }
    }
  }
  for (auto& p : outputs_) {
    if (p.net >= nets) fail("output '" + p.name + "' refers to missing net");
    p.radix = radix[p.net];
  }

  // Kahn's algorithm in cell-index order keeps the schedule deterministic.
  std::vector<std::size_t> pending(cells_.size(), 0);
  std::vector<std::vector<std::size_t>> readers(nets);
  for (std::size_t ci = 0; ci < cells_.size(); ++ci) {
    for (NetId n : cells_[ci].inputs) {
      if (driver[n] != kInputDriver) {
        ++pending[ci];
        readers[n].push_back(ci);
      }
    }
  }
  std::deque<std::size_t> ready;
  for (std::size_t ci = 0; ci < cells_.size(); ++ci) {
    if (pending[ci] == 0) ready.push_back(ci);
  }
  order_.reserve(cells_.size());
  while (!ready.empty()) {
    const std::size_t ci = ready.front();
    ready.pop_front();
    order_.push_back(ci);
    for (NetId out : cells_[ci].outputs) {
      for (std::size_t r : readers[out]) {
        if (--pending[r] == 0) ready.push_back(r);
      }
    }
  }
  if (order_.size() != cells_.size()) fail("cell graph contains a cycle");
  net_radix_ = std::move(radix);
}

std::optional<std::size_t> Circuit::find_input(std::string_view name) const {
  for (std::size_t i = 0; i < inputs_.size(); ++i) {
    if (inputs_[i].name == name) return i;
  }
  return std::nullopt;
}

std::optional<std::size_t> Circuit::find_output(std::string_view name) const {
  for (std::size_t i = 0; i < outputs_.size(); ++i) {
    if (outputs_[i].name == name) return i;
  }
  return std::nullopt;
}

NetId CircuitBuilder::add_input(std::string name, Radix radix) {
  const auto net = static_cast<NetId>(net_radix_.size());
  net_radix_.push_back(radix);
  inputs_.push_back({std::move(name), net, radix});
  return net;
}

std::vector<NetId> CircuitBuilder::add_cell(CellKind kind, std::vector<NetId> inputs) {
  const PortSpec spec = port_spec(kind);
  if (inputs.size() != spec.inputs.size()) {
    fail(kind.name() + " expects " + std::to_string(spec.inputs.size()) + " inputs, got " +
         std::to_string(inputs.size()));
  }
  for (std::size_t k = 0; k < inputs.size(); ++k) {
    if (inputs[k] >= net_radix_.size()) fail("input net " + std::to_string(inputs[k]) + " does not exist");
    if (net_radix_[inputs[k]] != spec.inputs[k]) {
      fail(kind.name() + " input " + std::to_string(k) + " expects radix " + to_string(spec.inputs[k]) +
           ", net is radix " + to_string(net_radix_[inputs[k]]));
    }
  }
  std::vector<NetId> outputs;
  for (Radix r : spec.outputs) {
    outputs.push_back(static_cast<NetId>(net_radix_.size()));
    net_radix_.push_back(r);
  }
  cells_.push_back({kind, std::move(inputs), outputs});
  return outputs;
}

void CircuitBuilder::add_output(std::string name, NetId net) {
  outputs_.push_back({std::move(name), net, net_radix_.at(net)});
}

Circuit CircuitBuilder::build() const { return Circuit(inputs_, outputs_, cells_, net_radix_.size()); }

Simulator::Simulator(const Circuit& circuit) : values_(circuit.net_count(), 0) {
  for (const auto& p : circuit.inputs()) input_nets_.push_back(p.net);
  for (const auto& p : circuit.outputs()) output_nets_.push_back(p.net);
  std::size_t max_in = 0;
  std::size_t max_out = 0;
  for (std::size_t ci : circuit.order()) {
    const auto& cell = circuit.cells()[ci];
    Step step{cell.kind, static_cast<std::uint32_t>(pins_.size()), 0};
    pins_.insert(pins_.end(), cell.inputs.begin(), cell.inputs.end());
    step.out_offset = static_cast<std::uint32_t>(pins_.size());
    pins_.insert(pins_.end(), cell.outputs.begin(), cell.outputs.end());
    max_in = std::max(max_in, cell.inputs.size());
    max_out = std::max(max_out, cell.outputs.size());
    steps_.push_back(step);
  }
  in_scratch_.resize(max_in);
  out_scratch_.resize(max_out);
}

std::span<const Digit> Simulator::run(std::span<const Digit> input_digits) {
  if (input_digits.size() != input_nets_.size()) {
    throw std::invalid_argument("simulate: expected " + std::to_string(input_nets_.size()) + " input digits, got " +
                                std::to_string(input_digits.size()));
  }
  for (std::size_t i = 0; i < input_nets_.size(); ++i) values_[input_nets_[i]] = input_digits[i];
  for (std::size_t s = 0; s < steps_.size(); ++s) {
    const Step& step = steps_[s];
    const std::uint32_t n_in = step.out_offset - step.in_offset;
    const std::uint32_t end = s + 1 < steps_.size() ? steps_[s + 1].in_offset : static_cast<std::uint32_t>(pins_.size());
    for (std::uint32_t k = 0; k < n_in; ++k) in_scratch_[k] = values_[pins_[step.in_offset + k]];
    evaluate_unchecked(step.kind, in_scratch_.data(), out_scratch_.data());
    for (std::uint32_t k = step.out_offset; k < end; ++k) values_[pins_[k]] = out_scratch_[k - step.out_offset];
  }
  return values_;
}

void Simulator::read_outputs(std::span<Digit> out) const {
  for (std::size_t i = 0; i < output_nets_.size() && i < out.size(); ++i) out[i] = values_[output_nets_[i]];
}

std::vector<Digit> simulate(const Circuit& circuit, std::span<const Digit> inputs) {
  if (inputs.size() != circuit.inputs().size()) {
    throw std::invalid_argument("simulate: expected " + std::to_string(circuit.inputs().size()) +
                                " input digits, got " + std::to_string(inputs.size()));
  }
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    if (inputs[i] >= circuit.input_radix(i).value()) {
      throw std::domain_error("simulate: input '" + circuit.inputs()[i].name + "' = " + std::to_string(inputs[i]) +
                              " out of range for radix " + to_string(circuit.input_radix(i)));
    }
  }
  Simulator sim(circuit);
  sim.run(inputs);
  std::vector<Digit> out(circuit.outputs().size(), 0);
  sim.read_outputs(out);
  return out;
}

std::map<std::string, Digit> simulate(const Circuit& circuit, const std::map<std::string, Digit>& assignment) {
  std::vector<Digit> digits(circuit.inputs().size(), 0);
  for (std::size_t i = 0; i < digits.size(); ++i) {
    const auto it = assignment.find(circuit.inputs()[i].name);
    if (it == assignment.end()) throw std::invalid_argument("simulate: missing input '" + circuit.inputs()[i].name + "'");
    digits[i] = it->second;
  }
  for (const auto& [name, digit] : assignment) {
    if (!circuit.find_input(name)) throw std::invalid_argument("simulate: unknown input '" + name + "'");
  }
  const auto out = simulate(circuit, std::span<const Digit>(digits));
  std::map<std::string, Digit> result;
  for (std::size_t i = 0; i < out.size(); ++i) result[circuit.outputs()[i].name] = out[i];
  return result;
}

CellCount count_cells(const Circuit& circuit) {
  CellCount counts;
  for (const auto& cell : circuit.cells()) ++counts[cell.kind];
  return counts;
}

std::size_t count_full_adders(const CellCount& counts) {
  std::size_t n = 0;
  for (const auto& [kind, c] : counts) n += kind.is_full_adder() ? c : 0;
  return n;
}

std::size_t count_half_adders(const CellCount& counts) {
  std::size_t n = 0;
  for (const auto& [kind, c] : counts) n += kind.is_half_adder() ? c : 0;
  return n;
}

std::size_t count_elementary_multipliers(const CellCount& counts) {
  std::size_t n = 0;
  for (const auto& [kind, c] : counts) n += kind.is_elementary_multiplier() ? c : 0;
  return n;
}

namespace {

// "a" matches "a" and "a<digits>"; returns the index (0 for the bare name).
std::optional<std::size_t> match_prefix(std::string_view name, std::string_view prefix) {
  if (!name.starts_with(prefix)) return std::nullopt;
  const std::string_view rest = name.substr(prefix.size());
  if (rest.empty()) return 0;
  std::size_t index = 0;
  const auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), index);
  if (ec != std::errc{} || ptr != rest.data() + rest.size()) return std::nullopt;
  return index;
}

std::vector<std::size_t> collect(const std::vector<Port>& ports, std::string_view prefix) {
  std::vector<std::pair<std::size_t, std::size_t>> hits;
  for (std::size_t i = 0; i < ports.size(); ++i) {
    if (auto idx = match_prefix(ports[i].name, prefix)) hits.emplace_back(*idx, i);
  }
  std::sort(hits.begin(), hits.end());
  std::vector<std::size_t> positions;
  for (const auto& h : hits) positions.push_back(h.second);
  return positions;
}

std::uint64_t mul_checked(std::uint64_t a, std::uint64_t b) {
  if (b != 0 && a > std::numeric_limits<std::uint64_t>::max() / b) {
    throw std::invalid_argument("encoding: port weights exceed 64 bits");
  }
  return a * b;
}

}  // namespace

Encoding Encoding::from_ports(const Circuit& circuit, const std::vector<std::string>& operand_prefixes,
                              const std::vector<std::string>& output_prefixes) {
  Encoding enc;
  for (const auto& prefix : operand_prefixes) {
    auto positions = collect(circuit.inputs(), prefix);
    if (positions.empty()) fail("encoding: no input ports match '" + prefix + "'");
    enc.operands.push_back({prefix, std::move(positions)});
  }
  std::uint64_t weight = 1;
  for (const auto& prefix : output_prefixes) {
    const auto positions = collect(circuit.outputs(), prefix);
    if (positions.empty()) fail("encoding: no output ports match '" + prefix + "'");
    for (std::size_t pos : positions) {
      enc.outputs.emplace_back(pos, weight);
      weight = mul_checked(weight, static_cast<std::uint64_t>(circuit.output_radix(pos).value()));
    }
  }
  return enc;
}

std::optional<std::uint64_t> input_space_size(const Circuit& circuit) {
  std::uint64_t size = 1;
  for (std::size_t i = 0; i < circuit.inputs().size(); ++i) {
    const auto r = static_cast<std::uint64_t>(circuit.input_radix(i).value());
    if (size > std::numeric_limits<std::uint64_t>::max() / r) return std::nullopt;
    size *= r;
  }
  return size;
}

VerificationReport exhaustive_check(const Circuit& circuit, const Oracle& oracle, const Encoding& encoding,
                                    const CheckOptions& options, std::string circuit_id) {
  if (options.cap < 1) throw std::invalid_argument("exhaustive_check: cap must be at least 1");
  const std::size_t n_inputs = circuit.inputs().size();

  // Flattened input order: operand 0's digits first, least significant first.
  std::vector<std::size_t> flat_port;
  std::vector<std::size_t> flat_operand;
  std::vector<std::uint64_t> flat_weight;
  std::vector<int> seen(n_inputs, 0);
  for (std::size_t op = 0; op < encoding.operands.size(); ++op) {
    std::uint64_t weight = 1;
    for (std::size_t pos : encoding.operands[op].inputs) {
      if (pos >= n_inputs) fail("encoding: input position " + std::to_string(pos) + " out of range");
      ++seen[pos];
      flat_port.push_back(pos);
      flat_operand.push_back(op);
      flat_weight.push_back(weight);
      weight = mul_checked(weight, static_cast<std::uint64_t>(circuit.input_radix(pos).value()));
    }
  }
  for (std::size_t i = 0; i < n_inputs; ++i) {
    if (seen[i] != 1) fail("encoding: input '" + circuit.inputs()[i].name + "' must be covered exactly once");
  }
  for (const auto& [pos, w] : encoding.outputs) {
    if (pos >= circuit.outputs().size()) fail("encoding: output position " + std::to_string(pos) + " out of range");
  }

  VerificationReport report;
  report.circuit_id = std::move(circuit_id);
  const auto space = input_space_size(circuit);
  report.mode = (space && *space <= options.cap) ? CheckMode::Exhaustive : CheckMode::Sampled;
  const std::uint64_t total = report.mode == CheckMode::Exhaustive ? *space : options.samples;

  Simulator sim(circuit);
  std::vector<Digit> flat_digits(flat_port.size(), 0);
  std::vector<Digit> port_digits(n_inputs, 0);
  std::vector<std::uint64_t> operands(encoding.operands.size(), 0);
  std::vector<int> flat_radix;
  for (std::size_t pos : flat_port) flat_radix.push_back(circuit.input_radix(pos).value());
  std::mt19937_64 rng(options.seed);

  for (std::uint64_t v = 0; v < total; ++v) {
    if (report.mode == CheckMode::Sampled) {
      for (std::size_t k = 0; k < flat_digits.size(); ++k) {
        flat_digits[k] = static_cast<Digit>(rng() % static_cast<std::uint64_t>(flat_radix[k]));
      }
    }
    std::fill(operands.begin(), operands.end(), 0);
    for (std::size_t k = 0; k < flat_digits.size(); ++k) {
      port_digits[flat_port[k]] = flat_digits[k];
      operands[flat_operand[k]] += flat_weight[k] * flat_digits[k];
    }
    const auto nets = sim.run(port_digits);
    std::uint64_t got = 0;
    for (const auto& [pos, weight] : encoding.outputs) got += weight * nets[circuit.outputs()[pos].net];
    const std::uint64_t expected = oracle(operands);
    ++report.vectors;
    if (got != expected) {
      report.passed = false;
      report.counterexample = Counterexample{operands, expected, got};
      return report;
    }
    if (report.mode == CheckMode::Exhaustive) {
      for (std::size_t k = 0; k < flat_digits.size(); ++k) {
        if (++flat_digits[k] < flat_radix[k]) break;
        flat_digits[k] = 0;
      }
    }
  }
  return report;
}

}  // namespace radixbench
