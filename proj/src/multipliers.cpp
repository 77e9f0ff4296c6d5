#include "radixbench/multipliers.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace radixbench {

void DotRow::add(std::size_t weight, NetId net) {
  if (!dots_.emplace(weight, net).second) {
    throw std::invalid_argument("dot row already holds a dot at weight " + std::to_string(weight));
  }
}

std::vector<Dot> DotRow::dots() const {
  std::vector<Dot> out;
  for (const auto& [w, net] : dots_) out.push_back({w, radix_, net});
  return out;
}

std::vector<DotRow> gen_partial_products(CircuitBuilder& cb, Radix radix, const std::vector<NetId>& a,
                                         const std::vector<NetId>& b) {
  if (a.empty() || b.empty()) throw std::invalid_argument("partial products need at least one digit per operand");
  std::vector<DotRow> rows;
  for (std::size_t j = 0; j < b.size(); ++j) {
    if (radix.is_binary()) {
      DotRow row(Radix::binary());
      for (std::size_t i = 0; i < a.size(); ++i) row.add(i + j, cb.add_cell(CellKind::bit_mul(), {a[i], b[j]})[0]);
      rows.push_back(std::move(row));
    } else {
      DotRow products(Radix::ternary());
      DotRow carries(Radix::binary());
      for (std::size_t i = 0; i < a.size(); ++i) {
        const auto out = cb.add_cell(CellKind::trit_mul(), {a[i], b[j]});
        products.add(i + j, out[0]);
        carries.add(i + j + 1, out[1]);
      }
      rows.push_back(std::move(products));
      rows.push_back(std::move(carries));
    }
  }
  return rows;
}

namespace {

struct Tally {
  std::size_t fa = 0;
  std::size_t ha = 0;
};

struct Entry {
  NetId net;
  Radix radix;
};

std::map<std::size_t, std::vector<Entry>> columns_of(const std::vector<const DotRow*>& rows) {
  std::map<std::size_t, std::vector<Entry>> columns;
  for (const DotRow* row : rows) {
    for (const auto& [w, net] : row->by_weight()) columns[w].push_back({net, row->radix()});
  }
  // Trits ahead of bits so cell input order matches the port patterns.
  for (auto& [w, col] : columns) {
    std::stable_sort(col.begin(), col.end(),
                     [](const Entry& x, const Entry& y) { return x.radix.value() > y.radix.value(); });
  }
  return columns;
}

int count_bits(const std::vector<Entry>& col) {
  int bits = 0;
  for (const auto& e : col) bits += e.radix.is_binary() ? 1 : 0;
  return bits;
}

std::vector<NetId> nets_of(const std::vector<Entry>& col) {
  std::vector<NetId> nets;
  for (const auto& e : col) nets.push_back(e.net);
  return nets;
}

// Three (or two) binary rows -> sum row + carry row.
void reduce_binary_group(CircuitBuilder& cb, const std::vector<const DotRow*>& group, HaPolicy policy, DotRow& sum,
                         DotRow& carry, Tally& tally) {
  for (const auto& [w, col] : columns_of(group)) {
    if (col.size() == 3) {
      const auto out = cb.add_cell(CellKind::bin_fa(), nets_of(col));
      sum.add(w, out[0]);
      carry.add(w + 1, out[1]);
      ++tally.fa;
    } else if (col.size() == 2) {
      if (policy == HaPolicy::Lazy && !carry.has(w)) {
        sum.add(w, col[0].net);
        carry.add(w, col[1].net);
      } else {
        const auto out = cb.add_cell(CellKind::bin_ha(), nets_of(col));
        sum.add(w, out[0]);
        carry.add(w + 1, out[1]);
        ++tally.ha;
      }
    } else {
      sum.add(w, col[0].net);
    }
  }
}

void place_lone_bit(CircuitBuilder& cb, std::size_t w, NetId net, DotRow& trits, DotRow* bits) {
  if (bits != nullptr && !bits->has(w)) {
    bits->add(w, net);
  } else {
    trits.add(w, cb.add_cell(CellKind::widen(), {net})[0]);
  }
}

// Mixed group -> trit row (+ bit row of carries unless `bits` is null).
void reduce_ternary_group(CircuitBuilder& cb, const std::vector<const DotRow*>& group, HaPolicy policy,
                          DotRow& trits, DotRow* bits, Tally& tally) {
  for (const auto& [w, col] : columns_of(group)) {
    const int nbits = count_bits(col);
    if (col.size() == 3) {
      const auto out = cb.add_cell(CellKind::tern_fa(nbits), nets_of(col));
      trits.add(w, out[0]);
      bits->add(w + 1, out[1]);
      ++tally.fa;
    } else if (col.size() == 2) {
      if (nbits == 2) {
        trits.add(w, cb.add_cell(CellKind::tern_ha(2), nets_of(col))[0]);
        ++tally.ha;
      } else if (nbits == 1 && policy == HaPolicy::Lazy && bits != nullptr && !bits->has(w)) {
        trits.add(w, col[0].net);
        bits->add(w, col[1].net);
      } else {
        const auto out = cb.add_cell(CellKind::tern_ha(nbits), nets_of(col));
        trits.add(w, out[0]);
        bits->add(w + 1, out[1]);
        ++tally.ha;
      }
    } else if (col[0].radix.is_ternary()) {
      trits.add(w, col[0].net);
    } else {
      place_lone_bit(cb, w, col[0].net, trits, bits);
    }
  }
}

// Picks the next group of row indices for a mixed stage, or returns empty.
std::vector<std::size_t> take(const std::vector<DotRow>& rows, std::vector<bool>& used, int want_trits,
                              int want_bits) {
  std::vector<std::size_t> picked;
  int t = 0;
  int b = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (used[i]) continue;
    if (rows[i].radix().is_ternary() && t < want_trits) {
      picked.push_back(i);
      ++t;
    } else if (rows[i].radix().is_binary() && b < want_bits) {
      picked.push_back(i);
      ++b;
    }
  }
  if (t != want_trits || b != want_bits) return {};
  for (std::size_t i : picked) used[i] = true;
  return picked;
}

std::vector<DotRow> binary_stage(CircuitBuilder& cb, const std::vector<DotRow>& rows, HaPolicy policy,
                                 Tally& tally) {
  std::vector<DotRow> next;
  std::size_t i = 0;
  for (; i + 3 <= rows.size(); i += 3) {
    DotRow sum(Radix::binary());
    DotRow carry(Radix::binary());
    reduce_binary_group(cb, {&rows[i], &rows[i + 1], &rows[i + 2]}, policy, sum, carry, tally);
    next.push_back(std::move(sum));
    next.push_back(std::move(carry));
  }
  for (; i < rows.size(); ++i) next.push_back(rows[i]);
  return next;
}

std::vector<DotRow> ternary_stage(CircuitBuilder& cb, const std::vector<DotRow>& rows, HaPolicy policy,
                                  Tally& tally) {
  std::vector<bool> used(rows.size(), false);
  std::vector<std::vector<std::size_t>> groups;
  std::vector<bool> collapses;  // bit pair -> single trit row
  static constexpr int kShapes[][2] = {{2, 1}, {1, 2}, {0, 3}};
  for (const auto& shape : kShapes) {
    for (auto g = take(rows, used, shape[0], shape[1]); !g.empty(); g = take(rows, used, shape[0], shape[1])) {
      groups.push_back(std::move(g));
      collapses.push_back(false);
    }
  }
  for (auto g = take(rows, used, 0, 2); !g.empty(); g = take(rows, used, 0, 2)) {
    groups.push_back(std::move(g));
    collapses.push_back(true);
  }
  if (groups.empty()) {
    // Only trit rows left: pair them so the next stage has bit rows to group with.
    for (auto g = take(rows, used, 2, 0); !g.empty(); g = take(rows, used, 2, 0)) {
      groups.push_back(std::move(g));
      collapses.push_back(false);
    }
  }

  std::vector<DotRow> next;
  for (std::size_t k = 0; k < groups.size(); ++k) {
    std::vector<const DotRow*> members;
    for (std::size_t i : groups[k]) members.push_back(&rows[i]);
    DotRow trits(Radix::ternary());
    DotRow bits(Radix::binary());
    reduce_ternary_group(cb, members, policy, trits, collapses[k] ? nullptr : &bits, tally);
    if (!trits.empty()) next.push_back(std::move(trits));
    if (!bits.empty()) next.push_back(std::move(bits));
  }
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (!used[i]) next.push_back(rows[i]);
  }
  return next;
}

// Adds the two remaining rows with a ripple chain over weights [0, limit).
// Returns the net for each weight, or nullopt where the product digit is
// structurally zero.
std::vector<std::optional<NetId>> final_addition(CircuitBuilder& cb, const std::vector<DotRow>& rows,
                                                 Radix radix, std::size_t limit, Tally& tally) {
  std::vector<std::optional<NetId>> digits(limit);
  std::optional<NetId> carry;
  for (std::size_t w = 0; w < limit; ++w) {
    std::vector<Entry> col;
    for (const auto& row : rows) {
      if (row.has(w)) col.push_back({row.at(w), row.radix()});
    }
    if (carry) col.push_back({*carry, Radix::binary()});
    std::stable_sort(col.begin(), col.end(),
                     [](const Entry& x, const Entry& y) { return x.radix.value() > y.radix.value(); });
    carry.reset();
    if (col.empty()) continue;
    if (radix.is_binary()) {
      if (col.size() == 1) {
        digits[w] = col[0].net;
      } else {
        const auto out = cb.add_cell(col.size() == 3 ? CellKind::bin_fa() : CellKind::bin_ha(), nets_of(col));
        digits[w] = out[0];
        carry = out[1];
        (col.size() == 3 ? tally.fa : tally.ha) += 1;
      }
      continue;
    }
    const int nbits = count_bits(col);
    if (col.size() == 1) {
      digits[w] = nbits == 0 ? col[0].net : cb.add_cell(CellKind::widen(), {col[0].net})[0];
    } else if (col.size() == 3) {
      const auto out = cb.add_cell(CellKind::tern_fa(nbits), nets_of(col));
      digits[w] = out[0];
      carry = out[1];
      ++tally.fa;
    } else {
      const auto out = cb.add_cell(CellKind::tern_ha(nbits), nets_of(col));
      digits[w] = out[0];
      if (out.size() > 1) carry = out[1];
      ++tally.ha;
    }
  }
  return digits;
}

}  // namespace

Reduction reduce_wallace(CircuitBuilder& cb, std::vector<DotRow> rows, Radix operand_radix, HaPolicy policy) {
  if (rows.empty()) throw std::invalid_argument("reduce_wallace needs at least one row");
  if (operand_radix.is_binary()) {
    for (const auto& row : rows) {
      if (!row.radix().is_binary()) throw std::invalid_argument("binary reduction given a ternary row");
    }
  }
  Reduction result;
  result.stages.push_back(rows);
  constexpr std::size_t kMaxStages = 64;
  while (rows.size() > 2) {
    if (result.steps.size() == kMaxStages) throw std::logic_error("reduce_wallace did not converge");
    Tally tally;
    auto next = operand_radix.is_binary() ? binary_stage(cb, rows, policy, tally)
                                          : ternary_stage(cb, rows, policy, tally);
    result.steps.push_back({result.steps.size() + 1, rows.size(), next.size(), tally.fa, tally.ha});
    result.fa_used += tally.fa;
    result.ha_used += tally.ha;
    rows = std::move(next);
    result.stages.push_back(rows);
  }
  result.rows = std::move(rows);
  return result;
}

MultiplierBuild build_multiplier_detailed(Radix radix, std::size_t width, HaPolicy policy) {
  if (width == 0) throw std::invalid_argument("multiplier width must be at least 1");
  CircuitBuilder cb;
  std::vector<NetId> a;
  std::vector<NetId> b;
  for (std::size_t i = 0; i < width; ++i) a.push_back(cb.add_input("a" + std::to_string(i), radix));
  for (std::size_t i = 0; i < width; ++i) b.push_back(cb.add_input("b" + std::to_string(i), radix));

  auto rows = gen_partial_products(cb, radix, a, b);
  Reduction reduction = reduce_wallace(cb, std::move(rows), radix, policy);
  Tally final_tally;
  const auto digits = final_addition(cb, reduction.rows, radix, 2 * width, final_tally);
  for (std::size_t w = 0; w < digits.size(); ++w) {
    if (digits[w]) cb.add_output("p" + std::to_string(w), *digits[w]);
  }

  MultiplierBuild build{cb.build(), std::move(reduction), {}, {}};
  auto& s = build.summary;
  s.elementary_mul_count = width * width;
  s.reduction_fa = build.reduction.fa_used;
  s.reduction_ha = build.reduction.ha_used;
  s.final_fa = final_tally.fa;
  s.final_ha = final_tally.ha;
  s.total_fa = s.reduction_fa + s.final_fa;
  s.total_ha = s.reduction_ha + s.final_ha;
  s.equivalent_fa = static_cast<double>(s.total_fa) + 0.5 * static_cast<double>(s.total_ha);

  auto& enc = build.encoding;
  enc.operands.push_back({"a", {}});
  enc.operands.push_back({"b", {}});
  for (std::size_t i = 0; i < width; ++i) {
    enc.operands[0].inputs.push_back(i);
    enc.operands[1].inputs.push_back(width + i);
  }
  std::size_t port = 0;
  for (std::size_t w = 0; w < digits.size(); ++w) {
    if (digits[w]) enc.outputs.emplace_back(port++, *checked_power(radix, w));
  }
  return build;
}

Circuit build_multiplier(Radix radix, std::size_t width, HaPolicy policy) {
  return build_multiplier_detailed(radix, width, policy).circuit;
}

MultiplierSummary multiplier_summary(Radix radix, std::size_t width, HaPolicy policy) {
  return build_multiplier_detailed(radix, width, policy).summary;
}

std::vector<std::size_t> stage_row_counts(const Reduction& reduction) {
  std::vector<std::size_t> counts;
  for (const auto& stage : reduction.stages) counts.push_back(stage.size());
  return counts;
}

std::uint64_t rows_value(const std::vector<DotRow>& rows, std::span<const Digit> nets, Radix operand_radix) {
  std::uint64_t value = 0;
  for (const auto& row : rows) {
    for (const auto& [w, net] : row.by_weight()) {
      const auto scale = checked_power(operand_radix, w);
      if (!scale) throw std::overflow_error("dot weight exceeds 64-bit range");
      value += static_cast<std::uint64_t>(nets[net]) * *scale;
    }
  }
  return value;
}

std::string dot_diagram(const Reduction& reduction) {
  std::ostringstream os;
  for (std::size_t s = 0; s < reduction.stages.size(); ++s) {
    os << "stage " << s << ": " << reduction.stages[s].size() << " rows\n";
    for (const auto& row : reduction.stages[s]) {
      os << (row.radix().is_ternary() ? 'T' : 'B');
      for (const auto& [w, net] : row.by_weight()) os << ' ' << w;
      os << '\n';
    }
  }
  return os.str();
}

MultiplierComparison compare_multipliers(std::size_t n_bits, HaPolicy policy) {
  if (n_bits < 2) throw std::invalid_argument("comparison needs at least 2 bits");
  MultiplierComparison cmp;
  cmp.n_bits = n_bits;
  cmp.m_trits = rounded_trit_width(n_bits);
  cmp.binary = multiplier_summary(Radix::binary(), n_bits, policy);
  cmp.ternary = multiplier_summary(Radix::ternary(), cmp.m_trits, policy);
  cmp.elementary_ratio =
      static_cast<double>(cmp.binary.elementary_mul_count) / static_cast<double>(cmp.ternary.elementary_mul_count);
  cmp.equivalent_fa_ratio = cmp.ternary.equivalent_fa > 0 ? cmp.binary.equivalent_fa / cmp.ternary.equivalent_fa : 0.0;
  return cmp;
}

}  // namespace radixbench
