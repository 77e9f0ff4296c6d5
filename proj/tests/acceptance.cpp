// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "radixbench/adders.hpp"
#include "radixbench/core.hpp"
#include "radixbench/costmodel.hpp"
#include "radixbench/multipliers.hpp"
#include "radixbench/report.hpp"

using namespace radixbench;

namespace {

std::uint64_t add3(std::span<const std::uint64_t> v) { return v[0] + v[1] + v[2]; }
std::uint64_t mul2(std::span<const std::uint64_t> v) { return v[0] * v[1]; }

std::vector<AdderArch> archs_for(Radix radix) {
  const std::size_t bs = radix.is_binary() ? 4 : 5;
  return {AdderArch::cpa(), AdderArch::cla(bs), AdderArch::csa(bs), AdderArch::cla(2), AdderArch::csa(3)};
}

std::size_t max_adder_width(Radix radix) { return radix.is_binary() ? 10 : 6; }

bool functional_exactness(std::string& detail) {
  for (Radix radix : {Radix::binary(), Radix::ternary()}) {
    for (std::size_t w = 1; w <= max_adder_width(radix); ++w) {
      for (const AdderArch& arch : archs_for(radix)) {
        const Circuit c = build_adder(arch, radix, w);
        const auto r = exhaustive_check(c, add3, adder_encoding(c));
        if (!r.passed || r.mode != CheckMode::Exhaustive) {
          detail = describe(arch, radix, w) + " failed";
          return false;
        }
      }
    }
  }
  const auto b = build_multiplier_detailed(Radix::binary(), 8);
  const auto t = build_multiplier_detailed(Radix::ternary(), 5);
  const auto rb = exhaustive_check(b.circuit, mul2, b.encoding);
  const auto rt = exhaustive_check(t.circuit, mul2, t.encoding);
  detail = "mul (2,8) " + std::to_string(rb.vectors) + " vectors, mul (3,5) " + std::to_string(rt.vectors) +
           " vectors";
  return rb.passed && rt.passed && rb.vectors == 65536 && rt.vectors == 59049 && rb.mode == CheckMode::Exhaustive &&
         rt.mode == CheckMode::Exhaustive;
}

bool architecture_equivalence(std::string& detail) {
  std::uint64_t compared = 0;
  for (Radix radix : {Radix::binary(), Radix::ternary()}) {
    for (std::size_t w = 1; w <= max_adder_width(radix); ++w) {
      std::vector<Circuit> circuits;
      for (const AdderArch& arch : archs_for(radix)) circuits.push_back(build_adder(arch, radix, w));
      std::vector<Simulator> sims;
      for (const auto& c : circuits) sims.emplace_back(c);
      const Circuit& ref = circuits.front();
      for (const auto& c : circuits) {
        for (std::size_t i = 0; i < ref.inputs().size(); ++i) {
          if (c.inputs()[i].name != ref.inputs()[i].name) return detail = "port order differs", false;
        }
        for (std::size_t i = 0; i < ref.outputs().size(); ++i) {
          if (c.outputs()[i].name != ref.outputs()[i].name) return detail = "port order differs", false;
        }
      }
      std::vector<Digit> in(ref.inputs().size(), 0);
      std::vector<int> limit;
      for (std::size_t i = 0; i < in.size(); ++i) limit.push_back(ref.input_radix(i).value());
      std::vector<Digit> want(ref.outputs().size());
      std::vector<Digit> got(ref.outputs().size());
      while (true) {
        sims[0].run(in);
        sims[0].read_outputs(want);
        for (std::size_t k = 1; k < sims.size(); ++k) {
          sims[k].run(in);
          sims[k].read_outputs(got);
          if (got != want) {
            detail = to_string(archs_for(radix)[k]) + " differs from cpa at radix " + to_string(radix) + " width " +
                     std::to_string(w);
            return false;
          }
        }
        ++compared;
        std::size_t pos = 0;
        while (pos < in.size() && ++in[pos] == limit[pos]) in[pos++] = 0;
        if (pos == in.size()) break;
      }
    }
  }
  detail = std::to_string(compared) + " input vectors compared across 5 architectures";
  return true;
}

bool table_two(std::string& detail) {
  const Digit expected[9][2] = {{0, 0}, {0, 0}, {0, 0}, {0, 0}, {1, 0}, {2, 0}, {0, 0}, {2, 0}, {1, 1}};
  int matched = 0;
  for (Digit a = 0; a < 3; ++a) {
    for (Digit b = 0; b < 3; ++b) {
      const ProductCarry want{expected[a * 3 + b][0], expected[a * 3 + b][1]};
      if (trit_mul(a, b) == want && trit_mul_gates(a, b) == want) ++matched;
    }
  }
  detail = std::to_string(matched) + "/9 rows, table and gate forms";
  return matched == 9;
}

bool table_one(std::string& detail) {
  const std::size_t got[] = {trit_width_for_bit_width(8), trit_width_for_bit_width(16), trit_width_for_bit_width(32),
                             trit_width_for_bit_width(64)};
  detail = "8/16/32/64 -> " + std::to_string(got[0]) + "/" + std::to_string(got[1]) + "/" + std::to_string(got[2]) +
           "/" + std::to_string(got[3]);
  return got[0] == 5 && got[1] == 11 && got[2] == 21 && got[3] == 41;
}

bool elementary_counts(std::string& detail) {
  struct Want {
    std::size_t n, bin, tern;
    const char* ratio;
  };
  const Want wants[] = {{8, 64, 25, "2.56"}, {12, 144, 64, "2.25"}, {16, 256, 100, "2.56"}};
  bool ok = true;
  for (const auto& w : wants) {
    const auto c = compare_multipliers(w.n);
    const std::string ratio = format_ratio(c.elementary_ratio, 2);
    detail += (detail.empty() ? "" : ", ") + std::to_string(c.binary.elementary_mul_count) + "/" +
              std::to_string(c.ternary.elementary_mul_count) + "=" + ratio;
    ok = ok && c.binary.elementary_mul_count == w.bin && c.ternary.elementary_mul_count == w.tern &&
         ratio == w.ratio;
  }
  return ok;
}

std::string join(const std::vector<std::size_t>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "]";
}

bool stage_sequences(std::string& detail) {
  const auto b = stage_row_counts(build_multiplier_detailed(Radix::binary(), 8).reduction);
  const auto t = stage_row_counts(build_multiplier_detailed(Radix::ternary(), 5).reduction);
  detail = "binary " + join(b) + ", ternary " + join(t);
  return b == std::vector<std::size_t>{8, 6, 4, 3, 2} && t == std::vector<std::size_t>{10, 7, 5, 3, 2};
}

bool equivalent_fa(std::string& detail) {
  bool ok = true;
  for (std::size_t n : {8, 12, 16}) {
    const auto published = *published_multiplier_table(n);
    const auto c = compare_multipliers(n);
    const auto check = check_against_published(c, published);
    char buf[160];
    std::snprintf(buf, sizeof buf, "%sN=%zu %.1f/%.1f ratio %.2f (published %.2f)", detail.empty() ? "" : "; ", n,
                  c.binary.equivalent_fa, c.ternary.equivalent_fa, c.equivalent_fa_ratio,
                  published.equivalent_fa_ratio);
    detail += buf;
    ok = ok && check.binary_equivalent_rel_error <= 0.15 && check.ternary_equivalent_rel_error <= 0.15 &&
         check.ratio_abs_error <= 0.2;
  }
  return ok;
}

bool cost_reproduction(std::string& detail) {
  const CostTable table = builtin_cost_table();
  const double tern = static_cast<double>(transistor_count(TernaryFaVariant::Cntfet124));
  const auto r = [&](BinaryFaVariant v) { return ratio_report(tern, static_cast<double>(transistor_count(v))); };
  bool ok = format_ratio(r(BinaryFaVariant::Conventional28), 1) == "4.4" &&
            format_ratio(r(BinaryFaVariant::TransmissionGate16), 1) == "7.8" &&
            format_ratio(r(BinaryFaVariant::TransmissionGate14), 1) == "8.9" &&
            format_ratio(r(BinaryFaVariant::Compact8), 1) == "15.5";
  const auto vi = table_document("VI");
  ok = ok && vi.tables[0].rows[1][3] == "7.7 to 8.8";
  bool interval_reported = false;
  for (const auto& d : vi.discrepancies) {
    interval_reported = interval_reported || (d.published == "7.7 to 8.8" && d.computed == "7.75 to 8.86");
  }
  ok = ok && interval_reported;
  const auto cla4 = cla_carry_cost(Radix::binary(), 4, 4, table).total;
  const auto cla8 = cla_carry_cost(Radix::binary(), 8, 4, table).total;
  const auto csa4 = csa_skip_cost(Radix::binary(), 4, 4, table).total;
  const auto csa8 = csa_skip_cost(Radix::binary(), 8, 4, table).total;
  const auto csa5t = csa_skip_cost(Radix::ternary(), 5, 5, table).total;
  const auto bit = circuit_cost({{CellKind::bit_mul(), 64}}, table);
  const auto trit = circuit_cost({{CellKind::trit_mul(), 25}}, table);
  const std::string mul_ratio = format_ratio(ratio_report(double(trit), double(bit)), 2);
  const std::string cap = format_ratio(ratio_report(double(transistor_count(TernaryFaVariant::Capacitive27)),
                                                    double(transistor_count(BinaryFaVariant::Capacitive11))),
                                       2);
  ok = ok && cla4 == 144 && cla8 == 288 && csa4 == 48 && csa8 == 96 && csa5t == 116 && bit == 384 && trit == 950 &&
       mul_ratio == "2.47" && cap == "2.45";
  detail = "CLA " + std::to_string(cla4) + "/" + std::to_string(cla8) + ", CSA " + std::to_string(csa4) + "/" +
           std::to_string(csa8) + "/" + std::to_string(csa5t) + ", mul " + std::to_string(bit) + "/" +
           std::to_string(trit) + " x" + mul_ratio + ", capacitive x" + cap;
  return ok;
}

bool discrepancy_surfacing(std::string& detail) {
  const std::string text = render(compare_document(8, {}), Format::Markdown);
  const bool has_cla = text.find("| 310 | 320 |") != std::string::npos;
  const bool has_ha = text.find("12 (Table III) vs 14") != std::string::npos;
  detail = std::string("310 vs 320 ") + (has_cla ? "listed" : "MISSING") + ", 14 vs 12 T-HA " +
           (has_ha ? "listed" : "MISSING");
  return has_cla && has_ha;
}

bool value_conservation(std::string& detail) {
  const std::pair<int, std::size_t> configs[] = {{2, 8}, {2, 12}, {2, 16}, {3, 5}, {3, 8}, {3, 10}};
  std::uint64_t checks = 0;
  for (const auto& [r, w] : configs) {
    const Radix radix = Radix::from_int(r);
    const auto build = build_multiplier_detailed(radix, w);
    Simulator sim(build.circuit);
    const std::uint64_t limit = *checked_power(radix, w);
    std::mt19937_64 rng(20240601 + static_cast<std::uint64_t>(r * 100 + w));
    std::vector<Digit> in(2 * w);
    for (int i = 0; i <= 1000; ++i) {
      std::uint64_t a = i == 1000 ? limit - 1 : rng() % limit;
      std::uint64_t b = i == 1000 ? limit - 1 : rng() % limit;
      const std::uint64_t product = a * b;
      for (std::size_t k = 0; k < w; ++k) {
        in[k] = static_cast<Digit>(a % r);
        in[w + k] = static_cast<Digit>(b % r);
        a /= r;
        b /= r;
      }
      const auto nets = sim.run(in);
      for (const auto& stage : build.reduction.stages) {
        ++checks;
        if (rows_value(stage, nets, radix) != product) {
          detail = "radix " + std::to_string(r) + " width " + std::to_string(w) + " lost value";
          return false;
        }
      }
    }
  }
  detail = std::to_string(checks) + " stage checks over 6 configurations";
  return true;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<bool(std::string&)> run;
  };
  const Criterion criteria[] = {
      {1, "functional exactness", functional_exactness},
      {2, "architecture equivalence", architecture_equivalence},
      {3, "1-trit multiplier truth table", table_two},
      {4, "bit/trit width pairing", table_one},
      {5, "elementary multiplier counts and ratios", elementary_counts},
      {6, "reduction stage sequences", stage_sequences},
      {7, "equivalent-FA totals and ratio", equivalent_fa},
      {8, "transistor cost figures", cost_reproduction},
      {9, "known discrepancies surfaced", discrepancy_surfacing},
      {10, "value conservation across reduction stages", value_conservation},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    std::string detail;
    bool ok = false;
    try {
      ok = c.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    if (!ok) ++failures;
    std::printf("%s criterion %d: %s (%s)\n", ok ? "PASS" : "FAIL", c.id, c.name, detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(std::size(criteria)) - failures, std::size(criteria));
  return failures == 0 ? 0 : 1;
}
