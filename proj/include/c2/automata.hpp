#pragma once

// Categorial automata over infinite binary strings. A rule is a 12-bit code
// of four (input1, input2, output) triples read three bits at a time, with
// the input pairs fixed in the order 00, 01, 10, 11.
//
// Two wirings are supported:
//   recurrent (pi):  S[0] = s0, S[n] = rule(u_n, S[n-1])
//   parallel (shift): S'[n] = rule(S[n], S[n+1])
// The code 000011101110 in recurrent wiring turns a morphic program into its
// object sequence; 000011100111 in parallel wiring is the one-sided shift
// (elementary rule 170), i.e. the doubling map on binary expansions.

#include <c2/bits.hpp>
#include <c2/stream.hpp>

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace c2 {

class RuleCode12 {
public:
  /// Output for inputs 00, 01, 10, 11.
  explicit constexpr RuleCode12(std::array<Bit, 4> outputs) noexcept : outputs_{outputs} {}

  constexpr Bit output(Bit input1, Bit input2) const noexcept {
    return outputs_[static_cast<std::size_t>(2 * to_int(input1) + to_int(input2))];
  }

  constexpr const std::array<Bit, 4>& outputs() const noexcept { return outputs_; }

  /// The 12-character code.
  std::string bits() const;

  constexpr bool operator==(const RuleCode12&) const noexcept = default;

private:
  std::array<Bit, 4> outputs_;
};

/// 000011101110: s_n = u_n XOR s_{n-1}.
inline constexpr RuleCode12 pi_rule{{Bit::zero, Bit::one, Bit::one, Bit::zero}};
/// 000011100111: s'_n = s_{n+1}.
inline constexpr RuleCode12 shift_rule{{Bit::zero, Bit::one, Bit::zero, Bit::one}};

/// Throws rule_length_error, rule_alphabet_error or rule_order_error.
RuleCode12 parse_rule(std::string_view text);

struct BooleanFunctionId {
  /// Output column read as a 4-bit number, output for 00 most significant.
  int id = 0;
  std::string name;

  /// e.g. "XOR (0110)".
  std::string label() const;
};

BooleanFunctionId boolean_table(const RuleCode12& rule);

/// Recurrent wiring. Reads program bits u_1..u_{length-1} and returns the
/// finite stream S[0..length).
BitStream apply_pi(const RuleCode12& rule, Bit s0, const BitStream& program, std::size_t length);

/// Parallel wiring. A periodic input yields a periodic output of the same
/// shape; other inputs need length + 1 bits and yield `length` bits.
BitStream apply_shift_rule(const RuleCode12& rule, const BitStream& s, std::size_t length);

/// [S_0, ..., S_steps] under the shift rule. For non-periodic input S_k
/// holds length + steps - k bits, so every step covers at least `length`.
std::vector<BitStream> iterate_bernoulli(const BitStream& s0, std::size_t steps,
                                         std::size_t length);

/// Doubles x = 0.b1b2...bm (mod 1) `steps` times in exact rational arithmetic
/// and returns the first m - steps bits of the result's expansion.
BitString dyadic_doubling_oracle(const BitString& x_bits, std::size_t steps);

} // namespace c2
