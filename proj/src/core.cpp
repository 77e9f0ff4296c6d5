#include "radixbench/core.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

namespace radixbench {

Radix Radix::from_int(int value) {
  if (value == 2) return binary();
  if (value == 3) return ternary();
  throw std::invalid_argument("radix must be 2 or 3, got " + std::to_string(value));
}

std::string to_string(Radix radix) { return std::to_string(radix.value()); }

std::optional<std::uint64_t> checked_power(Radix radix, std::size_t exponent) {
  std::uint64_t result = 1;
  const auto base = static_cast<std::uint64_t>(radix.value());
  for (std::size_t i = 0; i < exponent; ++i) {
    if (result > std::numeric_limits<std::uint64_t>::max() / base) return std::nullopt;
    result *= base;
  }
  return result;
}

Word::Word(Radix radix, std::vector<Digit> digits) : radix_(radix), digits_(std::move(digits)) {
  for (std::size_t i = 0; i < digits_.size(); ++i) {
    if (digits_[i] >= radix_.value()) {
      throw std::domain_error("digit " + std::to_string(i) + " = " + std::to_string(digits_[i]) +
                              " out of range for radix " + to_string(radix_));
    }
  }
}

Word word_from_uint(std::uint64_t value, Radix radix, std::size_t width) {
  const auto limit = checked_power(radix, width);
  if (limit && value >= *limit) {
    throw std::overflow_error(std::to_string(value) + " does not fit in " + std::to_string(width) +
                              " radix-" + to_string(radix) + " digits");
  }
  std::vector<Digit> digits(width, 0);
  const auto base = static_cast<std::uint64_t>(radix.value());
  for (std::size_t i = 0; i < width && value != 0; ++i) {
    digits[i] = static_cast<Digit>(value % base);
    value /= base;
  }
  return Word(radix, std::move(digits));
}

std::uint64_t word_to_uint(const Word& word) {
  const auto base = static_cast<std::uint64_t>(word.radix().value());
  std::uint64_t value = 0;
  const auto& digits = word.digits();
  for (std::size_t i = digits.size(); i-- > 0;) {
    if (value > (std::numeric_limits<std::uint64_t>::max() - digits[i]) / base) {
      throw std::overflow_error("word value exceeds 64 bits");
    }
    value = value * base + digits[i];
  }
  return value;
}

double information_ratio() noexcept { return std::log(3.0) / std::log(2.0); }

namespace {

constexpr std::array<std::pair<std::size_t, std::size_t>, 4> kCanonicalPairs{{
    {8, 5},
    {16, 11},
    {32, 21},
    {64, 41},
}};

}  // namespace

WidthPair pair_for_bit_width(std::size_t n_bits) {
  if (n_bits == 0) throw std::invalid_argument("bit width must be at least 1");
  WidthPair pair;
  pair.n_bits = n_bits;
  pair.raw_trits = static_cast<double>(n_bits) / information_ratio();
  for (const auto& [bits, trits] : kCanonicalPairs) {
    if (bits == n_bits) {
      pair.m_trits = trits;
      pair.from_table = true;
      return pair;
    }
  }
  pair.m_trits = rounded_trit_width(n_bits);
  return pair;
}

std::size_t rounded_trit_width(std::size_t n_bits) {
  if (n_bits == 0) throw std::invalid_argument("bit width must be at least 1");
  // n/IR is irrational for n >= 1, so a half-up tie never actually occurs.
  const auto m = static_cast<std::size_t>(std::floor(static_cast<double>(n_bits) / information_ratio() + 0.5));
  return m == 0 ? 1 : m;
}

std::size_t trit_width_for_bit_width(std::size_t n_bits) { return pair_for_bit_width(n_bits).m_trits; }

}  // namespace radixbench
