#include "doctest.h"

#include <stdexcept>

#include "radixbench/adders.hpp"
#include "radixbench/multipliers.hpp"
#include "radixbench/netlist.hpp"
#include "radixbench/netlist_json.hpp"

using namespace radixbench;

namespace {

// Two half adders in series: computes a + b + c as (s, c1 + c2).
Circuit tiny_adder() {
  CircuitBuilder cb;
  const NetId a = cb.add_input("a", Radix::binary());
  const NetId b = cb.add_input("b", Radix::binary());
  const auto h = cb.add_cell(CellKind::bin_ha(), {a, b});
  cb.add_output("s", h[0]);
  cb.add_output("c", h[1]);
  return cb.build();
}

}  // namespace

TEST_CASE("builder produces a simulatable circuit") {
  const Circuit c = tiny_adder();
  CHECK(c.inputs().size() == 2);
  CHECK(c.outputs().size() == 2);
  CHECK(simulate(c, std::vector<Digit>{1, 1}) == std::vector<Digit>{0, 1});
  const auto named = simulate(c, std::map<std::string, Digit>{{"a", 1}, {"b", 0}});
  CHECK(named.at("s") == 1);
  CHECK(named.at("c") == 0);
  CHECK(c.find_input("b") == 1u);
  CHECK_FALSE(c.find_output("zz").has_value());
}

TEST_CASE("simulate rejects bad inputs") {
  const Circuit c = tiny_adder();
  CHECK_THROWS_AS(simulate(c, std::vector<Digit>{1}), std::invalid_argument);
  CHECK_THROWS_AS(simulate(c, std::vector<Digit>{1, 2}), std::domain_error);
  CHECK_THROWS_AS(simulate(c, std::map<std::string, Digit>{{"a", 1}}), std::invalid_argument);
  CHECK_THROWS_AS(simulate(c, std::map<std::string, Digit>{{"a", 1}, {"b", 1}, {"x", 0}}), std::invalid_argument);
}

TEST_CASE("builder rejects radix and arity mismatches") {
  CircuitBuilder cb;
  const NetId t = cb.add_input("t", Radix::ternary());
  const NetId b = cb.add_input("b", Radix::binary());
  CHECK_THROWS_AS(cb.add_cell(CellKind::bin_ha(), {t, b}), std::invalid_argument);
  CHECK_THROWS_AS(cb.add_cell(CellKind::bin_fa(), {b, b}), std::invalid_argument);
  CHECK_THROWS_AS(cb.add_cell(CellKind::bin_ha(), {b, 99}), std::exception);
  CHECK_NOTHROW(cb.add_cell(CellKind::tern_ha(1), {t, b}));
}

TEST_CASE("circuit validation catches structural faults") {
  const Port a{"a", 0, Radix::binary()};
  const Port b{"b", 1, Radix::binary()};
  SUBCASE("cycle") {
    std::vector<CellInstance> cells{{CellKind::bin_ha(), {0, 3}, {2, 3}}};
    CHECK_THROWS_AS(Circuit({a}, {Port{"s", 2}}, cells), std::invalid_argument);
  }
  SUBCASE("two-cell cycle") {
    std::vector<CellInstance> cells{{CellKind::bin_ha(), {0, 4}, {2, 3}}, {CellKind::bin_ha(), {0, 2}, {4, 5}}};
    CHECK_THROWS_AS(Circuit({a}, {Port{"s", 5}}, cells), std::invalid_argument);
  }
  SUBCASE("multiple drivers") {
    std::vector<CellInstance> cells{{CellKind::bin_ha(), {0, 1}, {2, 3}}, {CellKind::bin_ha(), {0, 1}, {2, 4}}};
    CHECK_THROWS_AS(Circuit({a, b}, {Port{"s", 2}}, cells), std::invalid_argument);
  }
  SUBCASE("input driven by a cell") {
    std::vector<CellInstance> cells{{CellKind::bin_ha(), {0, 1}, {1, 2}}};
    CHECK_THROWS_AS(Circuit({a, b}, {Port{"s", 2}}, cells), std::invalid_argument);
  }
  SUBCASE("undriven net") {
    std::vector<CellInstance> cells{{CellKind::bin_ha(), {0, 7}, {2, 3}}};
    CHECK_THROWS_AS(Circuit({a}, {Port{"s", 2}}, cells), std::invalid_argument);
  }
  SUBCASE("undriven output") {
    CHECK_THROWS_AS(Circuit({a}, {Port{"s", 5}}, {}), std::invalid_argument);
  }
  SUBCASE("arity") {
    std::vector<CellInstance> cells{{CellKind::bin_fa(), {0, 1}, {2, 3}}};
    CHECK_THROWS_AS(Circuit({a, b}, {Port{"s", 2}}, cells), std::invalid_argument);
  }
  SUBCASE("radix") {
    const Port t{"t", 0, Radix::ternary()};
    std::vector<CellInstance> cells{{CellKind::bin_ha(), {0, 1}, {2, 3}}};
    CHECK_THROWS_AS(Circuit({t, b}, {Port{"s", 2}}, cells), std::invalid_argument);
  }
  SUBCASE("output radix comes from the driver") {
    const Port t{"t", 0, Radix::ternary()};
    std::vector<CellInstance> cells{{CellKind::tern_ha(1), {0, 1}, {2, 3}}};
    const Circuit c({t, b}, {Port{"s", 2, Radix::binary()}, Port{"c", 3, Radix::ternary()}}, cells);
    CHECK(c.outputs()[0].radix == Radix::ternary());
    CHECK(c.outputs()[1].radix == Radix::binary());
  }
  SUBCASE("duplicate port names") {
    const Port a2{"a", 1, Radix::binary()};
    CHECK_THROWS_AS(Circuit({a, a2}, {Port{"s", 0}}, {}), std::invalid_argument);
  }
}

TEST_CASE("cells are evaluated in dependency order regardless of listing order") {
  const Port a{"a", 0, Radix::binary()};
  const Port b{"b", 1, Radix::binary()};
  // Second cell consumes the first cell's sum but is listed first: y = (a ^ b) ^ b = a.
  std::vector<CellInstance> cells{{CellKind::bin_ha(), {2, 1}, {4, 5}}, {CellKind::bin_ha(), {0, 1}, {2, 3}}};
  const Circuit c({a, b}, {Port{"y", 4}}, cells);
  CHECK(c.order() == std::vector<std::size_t>{1, 0});
  for (Digit x = 0; x < 2; ++x)
    for (Digit y = 0; y < 2; ++y) CHECK(simulate(c, std::vector<Digit>{x, y}) == std::vector<Digit>{x});
}

TEST_CASE("cell counts") {
  const Circuit cpa = build_cpa(Radix::binary(), 6);
  const CellCount counts = count_cells(cpa);
  CHECK(counts.at(CellKind::bin_fa()) == 6);
  CHECK(count_full_adders(counts) == 6);
  CHECK(count_half_adders(counts) == 0);
  CHECK(count_elementary_multipliers(count_cells(build_multiplier(Radix::ternary(), 3))) == 9);
}

TEST_CASE("json round trip preserves structure and behavior") {
  for (const Circuit& c : {build_cla(Radix::ternary(), 4, 3), build_multiplier(Radix::ternary(), 2),
                           build_csa(Radix::binary(), 5, 2)}) {
    const auto doc = to_json(c);
    const Circuit back = circuit_from_json(doc);
    CHECK(back.inputs() == c.inputs());
    CHECK(back.outputs() == c.outputs());
    CHECK(back.cells() == c.cells());
    CHECK(to_json(back).dump() == doc.dump());
  }
}

TEST_CASE("json loader rejects malformed documents") {
  auto doc = to_json(tiny_adder());
  SUBCASE("unknown kind") {
    doc["cells"][0]["kind"] = "Bogus";
    CHECK_THROWS_AS(circuit_from_json(doc), std::invalid_argument);
  }
  SUBCASE("missing field") {
    doc.erase("outputs");
    CHECK_THROWS_AS(circuit_from_json(doc), std::invalid_argument);
  }
  SUBCASE("bad radix") {
    doc["inputs"][0]["radix"] = 5;
    CHECK_THROWS_AS(circuit_from_json(doc), std::invalid_argument);
  }
  SUBCASE("wrong output radix") {
    doc["outputs"][0]["radix"] = 3;
    CHECK_THROWS_AS(circuit_from_json(doc), std::invalid_argument);
  }
  SUBCASE("dangling net") {
    doc["cells"][0]["ins"][1] = 42;
    CHECK_THROWS_AS(circuit_from_json(doc), std::invalid_argument);
  }
}

TEST_CASE("exhaustive check passes a correct circuit and counts every vector") {
  const Circuit c = build_cpa(Radix::ternary(), 3);
  const Oracle add = [](std::span<const std::uint64_t> v) { return v[0] + v[1] + v[2]; };
  const auto r = exhaustive_check(c, add, adder_encoding(c));
  CHECK(r.passed);
  CHECK(r.mode == CheckMode::Exhaustive);
  CHECK(r.vectors == 27u * 27u * 2u);
  CHECK(input_space_size(c) == 27u * 27u * 2u);
}

TEST_CASE("exhaustive check reports the first counterexample") {
  const Circuit c = build_cpa(Radix::binary(), 4);
  const Oracle off_by_one = [](std::span<const std::uint64_t> v) {
    const std::uint64_t s = v[0] + v[1] + v[2];
    return s == 17 ? s + 1 : s;
  };
  const auto r = exhaustive_check(c, off_by_one, adder_encoding(c));
  CHECK_FALSE(r.passed);
  REQUIRE(r.counterexample.has_value());
  const auto& ce = *r.counterexample;
  CHECK(ce.operands[0] + ce.operands[1] + ce.operands[2] == 17);
  CHECK(ce.expected == 18);
  CHECK(ce.got == 17);
}

TEST_CASE("fault injection: a swapped cell is detected") {
  const Circuit good = build_cla(Radix::binary(), 4, 4);
  auto cells = good.cells();
  for (auto& cell : cells) {
    if (cell.kind == CellKind::carry_eqn(2)) {
      cell.kind = CellKind::carry_eqn(2);
      std::swap(cell.inputs[0], cell.inputs[2]);  // g0 <-> p0
      break;
    }
  }
  const Circuit bad(good.inputs(), good.outputs(), cells);
  const Oracle add = [](std::span<const std::uint64_t> v) { return v[0] + v[1] + v[2]; };
  CHECK(exhaustive_check(good, add, adder_encoding(good)).passed);
  CHECK_FALSE(exhaustive_check(bad, add, adder_encoding(bad)).passed);
}

TEST_CASE("fault injection: stuck ternary digit in a multiplier is detected") {
  const Circuit good = build_multiplier(Radix::ternary(), 3);
  auto cells = good.cells();
  for (auto& cell : cells) {
    if (cell.kind == CellKind::trit_mul()) {
      cell.kind = CellKind::tern_ha(0);  // p = a + b instead of a * b
      break;
    }
  }
  const Circuit bad(good.inputs(), good.outputs(), cells);
  const Oracle mul = [](std::span<const std::uint64_t> v) { return v[0] * v[1]; };
  const auto enc = Encoding::from_ports(bad, {"a", "b"}, {"p"});
  CHECK_FALSE(exhaustive_check(bad, mul, enc).passed);
}

TEST_CASE("sampled mode above the cap is deterministic per seed") {
  const Circuit c = build_cpa(Radix::binary(), 8);
  const Oracle add = [](std::span<const std::uint64_t> v) { return v[0] + v[1] + v[2]; };
  CheckOptions opts;
  opts.cap = 1000;
  opts.samples = 500;
  opts.seed = 7;
  const auto r = exhaustive_check(c, add, adder_encoding(c), opts);
  CHECK(r.mode == CheckMode::Sampled);
  CHECK(r.vectors == 500);
  CHECK(r.passed);

  const Oracle wrong = [](std::span<const std::uint64_t> v) { return v[0] + v[1] + v[2] + (v[0] > 100 ? 1 : 0); };
  const auto f1 = exhaustive_check(c, wrong, adder_encoding(c), opts);
  const auto f2 = exhaustive_check(c, wrong, adder_encoding(c), opts);
  REQUIRE(f1.counterexample.has_value());
  CHECK(f1.counterexample->operands == f2.counterexample->operands);
  CHECK(f1.vectors == f2.vectors);
}

TEST_CASE("encoding must cover each input exactly once") {
  const Circuit c = build_cpa(Radix::binary(), 2);
  const Oracle add = [](std::span<const std::uint64_t> v) { return v[0] + v[1]; };
  const auto partial = Encoding::from_ports(c, {"a", "b"}, {"s", "cout"});
  CHECK_THROWS_AS(exhaustive_check(c, add, partial), std::invalid_argument);
  Encoding dup = adder_encoding(c);
  dup.operands[1].inputs = dup.operands[0].inputs;
  CHECK_THROWS_AS(exhaustive_check(c, add, dup), std::invalid_argument);
}

TEST_CASE("input space size overflows to nullopt") {
  CHECK_FALSE(input_space_size(build_cpa(Radix::binary(), 40)).has_value());
  CHECK(input_space_size(build_cpa(Radix::binary(), 10)) == (std::uint64_t{1} << 21));
}
