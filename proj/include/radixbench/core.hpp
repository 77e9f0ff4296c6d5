// Radix-tagged unsigned words and the bit/trit width pairing.
#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace radixbench {

using Digit = std::uint8_t;

/// Number base of a wire or digit. Only binary and ternary exist.
class Radix {
 public:
  static constexpr Radix binary() noexcept { return Radix{2}; }
  static constexpr Radix ternary() noexcept { return Radix{3}; }

  /// Throws std::invalid_argument for anything other than 2 or 3.
  static Radix from_int(int value);

  constexpr int value() const noexcept { return value_; }
  constexpr bool is_binary() const noexcept { return value_ == 2; }
  constexpr bool is_ternary() const noexcept { return value_ == 3; }

  friend constexpr auto operator<=>(Radix, Radix) = default;

 private:
  constexpr explicit Radix(int value) noexcept : value_(value) {}
  int value_;
};

std::string to_string(Radix radix);

/// radix^exponent, or nullopt when it does not fit in 64 bits.
std::optional<std::uint64_t> checked_power(Radix radix, std::size_t exponent);

/// Unsigned integer as a little-endian digit vector.
class Word {
 public:
  /// Throws std::domain_error if any digit is >= radix.
  Word(Radix radix, std::vector<Digit> digits);

  Radix radix() const noexcept { return radix_; }
  const std::vector<Digit>& digits() const noexcept { return digits_; }
  std::size_t width() const noexcept { return digits_.size(); }
  Digit operator[](std::size_t i) const { return digits_.at(i); }

  friend bool operator==(const Word&, const Word&) = default;

 private:
  Radix radix_;
  std::vector<Digit> digits_;
};

/// Throws std::overflow_error when value >= radix^width.
Word word_from_uint(std::uint64_t value, Radix radix, std::size_t width);

/// Sum of digits[i] * radix^i. Throws std::overflow_error if the value
/// itself exceeds 64 bits (leading zero digits are fine at any width).
std::uint64_t word_to_uint(const Word& word);

/// log(3)/log(2): information carried by one trit relative to one bit.
double information_ratio() noexcept;

struct WidthPair {
  std::size_t n_bits = 0;
  std::size_t m_trits = 0;
  double raw_trits = 0.0;   // n_bits / information_ratio()
  bool from_table = false;  // canonical 8/16/32/64 pairing rather than rounding
};

/// Trit width carrying about the same information as n_bits.
/// 8/16/32/64 map to 5/11/21/41 by lookup; other widths round n/IR half-up.
/// Throws std::invalid_argument for n_bits == 0.
WidthPair pair_for_bit_width(std::size_t n_bits);
std::size_t trit_width_for_bit_width(std::size_t n_bits);

/// round(n_bits / IR) half-up, at least 1, with no canonical lookup. This is
/// the pairing the multiplier comparisons use (8/12/16 -> 5/8/10).
std::size_t rounded_trit_width(std::size_t n_bits);

}  // namespace radixbench
