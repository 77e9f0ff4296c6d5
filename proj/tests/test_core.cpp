#include "doctest.h"

#include <cmath>
#include <random>
#include <stdexcept>

#include "radixbench/core.hpp"

using namespace radixbench;

TEST_CASE("radix accepts only 2 and 3") {
  CHECK(Radix::from_int(2) == Radix::binary());
  CHECK(Radix::from_int(3) == Radix::ternary());
  CHECK_THROWS_AS(Radix::from_int(1), std::invalid_argument);
  CHECK_THROWS_AS(Radix::from_int(4), std::invalid_argument);
  CHECK_THROWS_AS(Radix::from_int(0), std::invalid_argument);
  CHECK(to_string(Radix::ternary()) == "3");
}

TEST_CASE("checked_power") {
  CHECK(checked_power(Radix::binary(), 0) == 1u);
  CHECK(checked_power(Radix::binary(), 63) == (std::uint64_t{1} << 63));
  CHECK_FALSE(checked_power(Radix::binary(), 64).has_value());
  CHECK(checked_power(Radix::ternary(), 10) == 59049u);
  CHECK(checked_power(Radix::ternary(), 40).has_value());
  CHECK_FALSE(checked_power(Radix::ternary(), 41).has_value());
}

TEST_CASE("word digits are range checked") {
  CHECK_NOTHROW(Word(Radix::ternary(), {0, 1, 2}));
  CHECK_THROWS_AS(Word(Radix::ternary(), {0, 3}), std::domain_error);
  CHECK_THROWS_AS(Word(Radix::binary(), {2}), std::domain_error);
  const Word w(Radix::binary(), {1, 0, 1});
  CHECK(w.width() == 3);
  CHECK(w[2] == 1);
  CHECK_THROWS(w[3]);
}

TEST_CASE("word conversion round trips") {
  CHECK(word_from_uint(5, Radix::binary(), 4).digits() == std::vector<Digit>{1, 0, 1, 0});
  CHECK(word_from_uint(11, Radix::ternary(), 3).digits() == std::vector<Digit>{2, 0, 1});
  CHECK(word_to_uint(word_from_uint(0, Radix::ternary(), 0)) == 0);
  CHECK_THROWS_AS(word_from_uint(8, Radix::binary(), 3), std::overflow_error);
  CHECK_THROWS_AS(word_from_uint(27, Radix::ternary(), 3), std::overflow_error);

  std::mt19937_64 rng(42);
  for (int i = 0; i < 2000; ++i) {
    const std::uint64_t v = rng() >> 20;
    CHECK(word_to_uint(word_from_uint(v, Radix::binary(), 44)) == v);
    CHECK(word_to_uint(word_from_uint(v, Radix::ternary(), 28)) == v);
  }
}

TEST_CASE("word_to_uint accepts leading zeros and rejects 64-bit overflow") {
  std::vector<Digit> digits(100, 0);
  digits[0] = 1;
  CHECK(word_to_uint(Word(Radix::binary(), digits)) == 1);
  std::vector<Digit> big(65, 0);
  big[64] = 1;
  CHECK_THROWS_AS(word_to_uint(Word(Radix::binary(), big)), std::overflow_error);
  CHECK(word_to_uint(Word(Radix::binary(), std::vector<Digit>(64, 1))) == ~std::uint64_t{0});
}

TEST_CASE("information ratio") { CHECK(information_ratio() == doctest::Approx(1.5849625).epsilon(1e-7)); }

TEST_CASE("width pairing uses the canonical pairs then rounds half up") {
  CHECK(trit_width_for_bit_width(8) == 5);
  CHECK(trit_width_for_bit_width(16) == 11);
  CHECK(trit_width_for_bit_width(32) == 21);
  CHECK(trit_width_for_bit_width(64) == 41);
  CHECK(trit_width_for_bit_width(12) == 8);
  CHECK(trit_width_for_bit_width(1) == 1);
  CHECK(trit_width_for_bit_width(2) == 1);
  CHECK(trit_width_for_bit_width(3) == 2);
  CHECK(pair_for_bit_width(16).from_table);
  CHECK_FALSE(pair_for_bit_width(12).from_table);
  CHECK(pair_for_bit_width(12).raw_trits == doctest::Approx(12 / information_ratio()));
  CHECK_THROWS_AS(pair_for_bit_width(0), std::invalid_argument);
}

TEST_CASE("non-canonical pairings are within half a trit of n/IR") {
  for (std::size_t n = 1; n <= 200; ++n) {
    const WidthPair p = pair_for_bit_width(n);
    CAPTURE(n);
    CHECK(p.m_trits >= 1);
    if (!p.from_table) CHECK(std::abs(static_cast<double>(p.m_trits) - p.raw_trits) <= 0.5);
    CHECK(rounded_trit_width(n) >= 1);
    if (n >= 2) CHECK(std::abs(static_cast<double>(rounded_trit_width(n)) - p.raw_trits) <= 0.5);
  }
}

TEST_CASE("canonical pairs against the 1.5 to 1.6 bits-per-trit band") {
  for (std::size_t n : {8, 32, 64}) {
    const double ratio = static_cast<double>(n) / static_cast<double>(trit_width_for_bit_width(n));
    CAPTURE(n);
    CHECK(ratio >= 1.5);
    CHECK(ratio <= 1.6);
  }
  // 16 -> 11 sits below the band; the rounded pairing gives 10.
  CHECK(16.0 / 11.0 < 1.5);
  CHECK(rounded_trit_width(16) == 10);
}

TEST_CASE("rounded pairing used by the multiplier comparisons") {
  CHECK(rounded_trit_width(8) == 5);
  CHECK(rounded_trit_width(12) == 8);
  CHECK(rounded_trit_width(16) == 10);
  CHECK(rounded_trit_width(32) == 20);
  CHECK(rounded_trit_width(1) == 1);
  CHECK_THROWS_AS(rounded_trit_width(0), std::invalid_argument);
}
