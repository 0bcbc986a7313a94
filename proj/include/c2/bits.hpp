#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace c2 {

/// An object of the binary category: one binary digit.
enum class Bit : std::uint8_t { zero = 0, one = 1 };

using BitString = std::vector<Bit>;

constexpr Bit to_bit(bool b) noexcept { return b ? Bit::one : Bit::zero; }

constexpr int to_int(Bit b) noexcept { return static_cast<int>(b); }

constexpr Bit flip(Bit b) noexcept { return b == Bit::zero ? Bit::one : Bit::zero; }

constexpr Bit operator^(Bit a, Bit b) noexcept { return to_bit(a != b); }

constexpr char to_char(Bit b) noexcept { return b == Bit::zero ? '0' : '1'; }

/// Parses a string over {'0','1'}; throws parse_error on any other character.
BitString parse_bits(std::string_view text);

std::string to_string(const BitString& bits);

} // namespace c2
