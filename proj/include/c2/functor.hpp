#pragma once

// The correspondence between chains and their object strings, checked on
// finite prefixes. Every binary string S has exactly one chain with S as its
// object sequence: s0 = S[0] and u_n = S[n-1] XOR S[n]. Running the pi
// automaton on that program reproduces S.
//
// "Compression" here separates the fixed 12-bit rule from the program. The
// program is as long as the data; nothing is shortened.

#include <c2/automata.hpp>
#include <c2/category.hpp>
#include <c2/stream.hpp>

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

namespace c2 {

struct MorphicProgram {
  Bit s0 = Bit::zero;
  /// u_1 u_2 ..., 0 for the keep operator and 1 for the flip operator.
  BitString operators;

  /// Number of objects the program determines.
  std::size_t length() const noexcept { return operators.size() + 1; }

  bool operator==(const MorphicProgram&) const = default;
};

/// Object sequence of the chain, via the pi automaton.
BitStream chain_to_string(const MorphicProgram& program);

/// The unique program whose chain has S[0..length) as its objects.
MorphicProgram string_to_chain(const BitStream& s, std::size_t length);

/// The program as a chain of operators in the category.
FiniteChain to_chain(const MorphicProgram& program);

struct CompressionCertificate {
  RuleCode12 rule = pi_rule;
  MorphicProgram program;
  std::size_t reproduced_prefix_length = 0;
  /// FNV-1a over the reproduced bits as ASCII '0'/'1'.
  std::uint64_t digest = 0;
};

/// Extracts the program and checks that the pi automaton reproduces the
/// input before returning. Throws verification_failure if it does not.
CompressionCertificate morphic_compress(const BitStream& s, std::size_t length);

/// Runs the certificate's rule on its program and checks the digest.
/// Throws mismatch_error when the output disagrees with the record.
BitStream decompress(const CompressionCertificate& cert);

std::uint64_t bit_digest(const BitString& bits);

/// Line-oriented "key=value" record.
std::string to_record(const CompressionCertificate& cert);
CompressionCertificate parse_certificate(std::string_view text);

} // namespace c2
