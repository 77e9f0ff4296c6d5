#include "radixbench/adders.hpp"

#include <stdexcept>

namespace radixbench {

namespace {

struct AdderPorts {
  std::vector<NetId> a;
  std::vector<NetId> b;
  NetId cin = 0;
};

AdderPorts add_adder_inputs(CircuitBuilder& cb, Radix radix, std::size_t width) {
  AdderPorts ports;
  for (std::size_t i = 0; i < width; ++i) ports.a.push_back(cb.add_input("a" + std::to_string(i), radix));
  for (std::size_t i = 0; i < width; ++i) ports.b.push_back(cb.add_input("b" + std::to_string(i), radix));
  ports.cin = cb.add_input("cin", Radix::binary());
  return ports;
}

CellKind full_adder(Radix radix) { return radix.is_binary() ? CellKind::bin_fa() : CellKind::tern_fa(1); }

void require_width(std::size_t width) {
  if (width == 0) throw std::invalid_argument("adder width must be at least 1");
}

void require_block(std::size_t block_size) {
  if (block_size < 2 || block_size > 5) {
    throw std::invalid_argument("block size " + std::to_string(block_size) + " outside [2,5]");
  }
}

}  // namespace

std::string to_string(const AdderArch& arch) {
  switch (arch.kind) {
    case AdderKind::CPA: return "cpa";
    case AdderKind::CLA: return "cla" + std::to_string(arch.block_size);
    case AdderKind::CSA: return "csa" + std::to_string(arch.block_size);
  }
  return "?";
}

std::vector<std::size_t> block_sizes(std::size_t width, std::size_t block_size) {
  std::vector<std::size_t> sizes;
  for (std::size_t done = 0; done < width; done += block_size) sizes.push_back(std::min(block_size, width - done));
  return sizes;
}

Circuit build_cpa(Radix radix, std::size_t width) {
  require_width(width);
  CircuitBuilder cb;
  const auto in = add_adder_inputs(cb, radix, width);
  NetId carry = in.cin;
  for (std::size_t i = 0; i < width; ++i) {
    const auto out = cb.add_cell(full_adder(radix), {in.a[i], in.b[i], carry});
    cb.add_output("s" + std::to_string(i), out[0]);
    carry = out[1];
  }
  cb.add_output("cout", carry);
  return cb.build();
}

Circuit build_cla(Radix radix, std::size_t width, std::size_t block_size) {
  require_width(width);
  require_block(block_size);
  CircuitBuilder cb;
  const auto in = add_adder_inputs(cb, radix, width);
  NetId block_cin = in.cin;
  std::size_t base = 0;
  for (std::size_t size : block_sizes(width, block_size)) {
    std::vector<NetId> g;
    std::vector<NetId> p;
    for (std::size_t i = 0; i < size; ++i) {
      g.push_back(cb.add_cell(CellKind::generate(radix), {in.a[base + i], in.b[base + i]})[0]);
    }
    for (std::size_t i = 0; i < size; ++i) {
      p.push_back(cb.add_cell(CellKind::propagate(radix), {in.a[base + i], in.b[base + i]})[0]);
    }
    // carries[k] is the carry into position k of the block.
    std::vector<NetId> carries{block_cin};
    for (std::size_t k = 1; k <= size; ++k) {
      std::vector<NetId> pins(g.begin(), g.begin() + static_cast<std::ptrdiff_t>(k));
      pins.insert(pins.end(), p.begin(), p.begin() + static_cast<std::ptrdiff_t>(k));
      pins.push_back(block_cin);
      carries.push_back(cb.add_cell(CellKind::carry_eqn(static_cast<int>(k)), std::move(pins))[0]);
    }
    for (std::size_t i = 0; i < size; ++i) {
      const auto out = cb.add_cell(full_adder(radix), {in.a[base + i], in.b[base + i], carries[i]});
      cb.add_output("s" + std::to_string(base + i), out[0]);
    }
    block_cin = carries[size];
    base += size;
  }
  cb.add_output("cout", block_cin);
  return cb.build();
}

Circuit build_csa(Radix radix, std::size_t width, std::size_t block_size) {
  require_width(width);
  require_block(block_size);
  CircuitBuilder cb;
  const auto in = add_adder_inputs(cb, radix, width);
  NetId block_cin = in.cin;
  std::size_t base = 0;
  for (std::size_t size : block_sizes(width, block_size)) {
    std::vector<NetId> p;
    for (std::size_t i = 0; i < size; ++i) {
      p.push_back(cb.add_cell(CellKind::propagate(radix), {in.a[base + i], in.b[base + i]})[0]);
    }
    NetId ripple = block_cin;
    for (std::size_t i = 0; i < size; ++i) {
      const auto out = cb.add_cell(full_adder(radix), {in.a[base + i], in.b[base + i], ripple});
      cb.add_output("s" + std::to_string(base + i), out[0]);
      ripple = out[1];
    }
    const NetId skip = size == 1 ? p[0] : cb.add_cell(CellKind::and_n(static_cast<int>(size)), p)[0];
    block_cin = cb.add_cell(CellKind::mux2(), {skip, ripple, block_cin})[0];
    base += size;
  }
  cb.add_output("cout", block_cin);
  return cb.build();
}

Circuit build_adder(const AdderArch& arch, Radix radix, std::size_t width) {
  switch (arch.kind) {
    case AdderKind::CPA: return build_cpa(radix, width);
    case AdderKind::CLA: return build_cla(radix, width, arch.block_size);
    case AdderKind::CSA: return build_csa(radix, width, arch.block_size);
  }
  throw std::invalid_argument("unknown adder architecture");
}

Encoding adder_encoding(const Circuit& adder) { return Encoding::from_ports(adder, {"a", "b", "cin"}, {"s", "cout"}); }

AdderSummary adder_summary(const AdderArch& arch, Radix radix, std::size_t width) {
  const Circuit circuit = build_adder(arch, radix, width);
  AdderSummary summary;
  for (const auto& [kind, n] : count_cells(circuit)) {
    if (kind.is_full_adder()) {
      summary.fa_count += n;
    } else {
      summary.aux_gate_counts[kind] = n;
    }
  }
  if (arch.kind != AdderKind::CPA) summary.carry_block_count = block_sizes(width, arch.block_size).size();
  return summary;
}

}  // namespace radixbench
