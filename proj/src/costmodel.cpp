#include "radixbench/costmodel.hpp"

#include <cmath>
#include <cstdio>

#include "radixbench/adders.hpp"

namespace radixbench {

namespace {

struct BinaryVariantInfo {
  BinaryFaVariant variant;
  const char* name;
  std::uint64_t transistors;
};

struct TernaryVariantInfo {
  TernaryFaVariant variant;
  const char* name;
  std::uint64_t fa;
  std::uint64_t ha;
};

constexpr BinaryVariantInfo kBinary[] = {
    {BinaryFaVariant::Conventional28, "conventional-28", 28},
    {BinaryFaVariant::TransmissionGate16, "transmission-gate-16", 16},
    {BinaryFaVariant::TransmissionGate14, "transmission-gate-14", 14},
    {BinaryFaVariant::Compact8, "compact-8", 8},
    {BinaryFaVariant::Capacitive11, "capacitive-11", 11},
};

// No half adder is published for the capacitive ternary cell; it gets the
// same half-of-a-full-adder rule as the binary cells.
constexpr TernaryVariantInfo kTernary[] = {
    {TernaryFaVariant::Cntfet124, "cntfet-124", 124, 66},
    {TernaryFaVariant::Capacitive27, "capacitive-27", 27, 14},
};

constexpr std::uint64_t kCarryEqnCost[] = {10, 18, 28, 40, 54};

const BinaryVariantInfo& info(BinaryFaVariant v) {
  for (const auto& i : kBinary) {
    if (i.variant == v) return i;
  }
  throw std::invalid_argument("unknown binary full adder variant");
}

const TernaryVariantInfo& info(TernaryFaVariant v) {
  for (const auto& i : kTernary) {
    if (i.variant == v) return i;
  }
  throw std::invalid_argument("unknown ternary full adder variant");
}

}  // namespace

std::string to_string(BinaryFaVariant v) { return info(v).name; }
std::string to_string(TernaryFaVariant v) { return info(v).name; }
std::uint64_t transistor_count(BinaryFaVariant v) noexcept { return info(v).transistors; }
std::uint64_t transistor_count(TernaryFaVariant v) noexcept { return info(v).fa; }

std::string CostPreset::name() const { return to_string(binary) + "/" + to_string(ternary); }

CostPreset CostPreset::parse(std::string_view text) {
  CostPreset preset;
  bool any = false;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t slash = text.find('/', start);
    const std::string_view part = text.substr(start, slash == std::string_view::npos ? text.npos : slash - start);
    bool matched = false;
    for (const auto& i : kBinary) {
      if (part == i.name) {
        preset.binary = i.variant;
        matched = true;
      }
    }
    for (const auto& i : kTernary) {
      if (part == i.name) {
        preset.ternary = i.variant;
        matched = true;
      }
    }
    if (!matched) throw std::invalid_argument("unknown cost preset '" + std::string(part) + "'");
    any = true;
    if (slash == std::string_view::npos) break;
    start = slash + 1;
  }
  if (!any) throw std::invalid_argument("empty cost preset");
  return preset;
}

std::uint64_t CostTable::cost(CellKind kind) const {
  const auto it = entries_.find(kind.cost_key());
  if (it == entries_.end()) throw UncostedKindError(kind);
  return it->second;
}

nlohmann::ordered_json CostTable::to_json() const {
  nlohmann::ordered_json doc;
  doc["name"] = name_;
  nlohmann::ordered_json entries = nlohmann::ordered_json::object();
  for (const auto& [kind, cost] : entries_) entries[kind.name()] = cost;
  doc["entries"] = std::move(entries);
  return doc;
}

CostTable CostTable::from_json(const nlohmann::ordered_json& doc) {
  try {
    CostTable table(doc.at("name").get<std::string>());
    for (const auto& [key, value] : doc.at("entries").items()) {
      const auto cost = value.get<std::int64_t>();
      if (cost < 0) throw std::invalid_argument("negative cost for " + key);
      table.set(CellKind::parse(key), static_cast<std::uint64_t>(cost));
    }
    return table;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("cost table json: ") + e.what());
  }
}

CostTable builtin_cost_table(const CostPreset& preset) {
  CostTable table(preset.name());
  const std::uint64_t bin_fa = transistor_count(preset.binary);
  table.set(CellKind::bin_fa(), bin_fa);
  table.set(CellKind::bin_ha(), (bin_fa + 1) / 2);
  table.set(CellKind::tern_fa(), info(preset.ternary).fa);
  table.set(CellKind::tern_ha(), info(preset.ternary).ha);
  // 4 decoder + 12 Sum2 + 12 Sum1 + 6 product encoder + 4 carry encoder.
  table.set(CellKind::trit_mul(), 4 + 12 + 12 + 6 + 4);
  table.set(CellKind::bit_mul(), 6);
  table.set(CellKind::generate(Radix::binary()), 6);
  table.set(CellKind::propagate(Radix::binary()), 6);
  table.set(CellKind::generate(Radix::ternary()), 16);
  table.set(CellKind::propagate(Radix::ternary()), 18);
  for (int k = 1; k <= 5; ++k) table.set(CellKind::carry_eqn(k), kCarryEqnCost[k - 1]);
  table.set(CellKind::mux2(), 14);
  // n-input NAND (2n) plus an output inverter (2).
  for (int n = 2; n <= 8; ++n) {
    table.set(CellKind::and_n(n), 2 * static_cast<std::uint64_t>(n) + 2);
    table.set(CellKind::nand_inv(n), 2 * static_cast<std::uint64_t>(n) + 2);
  }
  table.set(CellKind::widen(), 0);
  return table;
}

std::uint64_t circuit_cost(const CellCount& counts, const CostTable& table) {
  std::uint64_t total = 0;
  for (const auto& [kind, n] : counts) total += n * table.cost(kind);
  return total;
}

namespace {

void add_line(CostBreakdown& out, std::string label, const CellCount& counts, const CostTable& table,
              bool (*selects)(const CellKind&)) {
  CostLine line{std::move(label), 0, 0};
  for (const auto& [kind, n] : counts) {
    if (!selects(kind)) continue;
    line.count += n;
    line.subtotal += n * table.cost(kind);
  }
  out.total += line.subtotal;
  out.lines.push_back(std::move(line));
}

}  // namespace

CostBreakdown cla_carry_cost(Radix radix, std::size_t width, std::size_t block_size, const CostTable& table) {
  const CellCount counts = count_cells(build_cla(radix, width, block_size));
  CostBreakdown out;
  add_line(out, "Gi", counts, table,
           [](const CellKind& k) { return k.tag() == CellTag::BinGen || k.tag() == CellTag::TernGen; });
  add_line(out, "Pi", counts, table,
           [](const CellKind& k) { return k.tag() == CellTag::BinProp || k.tag() == CellTag::TernProp; });
  const std::size_t deepest = std::min(block_size, width);
  for (std::size_t k = 1; k <= deepest; ++k) {
    CostLine line{"C" + std::to_string(k), 0, 0};
    const CellKind eqn = CellKind::carry_eqn(static_cast<int>(k));
    if (const auto it = counts.find(eqn); it != counts.end()) {
      line.count = it->second;
      line.subtotal = it->second * table.cost(eqn);
    }
    out.total += line.subtotal;
    out.lines.push_back(std::move(line));
  }
  return out;
}

CostBreakdown csa_skip_cost(Radix radix, std::size_t width, std::size_t block_size, const CostTable& table) {
  const CellCount counts = count_cells(build_csa(radix, width, block_size));
  CostBreakdown out;
  add_line(out, "Pi", counts, table,
           [](const CellKind& k) { return k.tag() == CellTag::BinProp || k.tag() == CellTag::TernProp; });
  add_line(out, "Nand+inverter", counts, table,
           [](const CellKind& k) { return k.tag() == CellTag::AndN || k.tag() == CellTag::NandInv; });
  add_line(out, "Mux", counts, table, [](const CellKind& k) { return k.tag() == CellTag::Mux2; });
  return out;
}

double ratio_report(double ternary_total, double binary_total) {
  if (binary_total == 0.0) throw std::domain_error("ratio_report: binary total is zero");
  return ternary_total / binary_total;
}

std::string format_ratio(double ratio, int decimals, Rounding rounding) {
  const double scale = std::pow(10.0, decimals);
  // The epsilon keeps exact decimal quotients such as 2.45 from truncating low.
  const double scaled = rounding == Rounding::Nearest ? std::round(ratio * scale) : std::floor(ratio * scale + 1e-9);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, scaled / scale);
  return buf;
}

}  // namespace radixbench
