#pragma once

// Probabilistic view of pi-automaton output: an i.i.d. object string, the
// program that enacts it, and the three conditional-frequency tables
//   P[s_n | s_{n-1}],  P[u_n | s_{n-1}],  P[s_n | s_{n-1}, u_n].
// The last is exactly deterministic while the first looks like a Bernoulli
// process. LZ76 is reported as a computable proxy for incompressibility;
// it is not a measure of algorithmic randomness.

#include <c2/automata.hpp>
#include <c2/functor.hpp>
#include <c2/stream.hpp>

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>

namespace c2 {

using Count = std::uint64_t;

/// Integer tallies with row-normalized views. Rows without samples have no
/// probabilities.
template <std::size_t Rows>
struct CountMatrix {
  std::array<std::array<Count, 2>, Rows> counts{};

  Count row_total(std::size_t r) const noexcept { return counts[r][0] + counts[r][1]; }

  std::optional<double> probability(std::size_t r, std::size_t c) const noexcept {
    const Count t = row_total(r);
    if (t == 0)
      return std::nullopt;
    return static_cast<double>(counts[r][c]) / static_cast<double>(t);
  }

  /// "count/total", or empty when the row has no samples.
  std::string rational(std::size_t r, std::size_t c) const {
    const Count t = row_total(r);
    if (t == 0)
      return {};
    return std::to_string(counts[r][c]) + "/" + std::to_string(t);
  }

  bool operator==(const CountMatrix&) const = default;
};

struct TransitionEstimate {
  /// [s_{n-1}][s_n]
  CountMatrix<2> object;
  /// [s_{n-1}][u_n]
  CountMatrix<2> fundament;
  /// [2 * s_{n-1} + u_n][s_n]
  CountMatrix<4> joint;
  Count sample_count = 0;

  /// Every populated joint row is a unit vector.
  bool joint_is_deterministic() const noexcept;
};

struct IndependenceTest {
  /// Pair counts [s_{n-1}][s_n].
  CountMatrix<2> table;
  Count sample_count = 0;
  /// A row or column of the table is empty; no statistic is computed.
  bool degenerate = false;
  double statistic = 0.0;
  int degrees_of_freedom = 1;
  double critical_value = 0.0;
  bool rejected = false;
};

struct RandomnessReport {
  double lz76_complexity = 0.0;
  /// Empirical P[bit = 0].
  double marginal_frequency = 0.0;
  /// Absent when the input is too short or has no variation.
  std::optional<IndependenceTest> independence;
  Count sample_count = 0;
};

/// 1% level at one degree of freedom.
inline constexpr double default_critical_value = 6.635;
/// Minimum length for the independence test.
inline constexpr std::size_t independence_floor = 1000;

/// i.i.d. bits with P[0] = p0 from a 64-bit Mersenne Twister seeded with
/// `seed`; the same arguments always give the same stream.
BitStream sample_random_string(double p0, std::size_t length, std::uint64_t seed);

/// The program that produces S under the pi automaton. For S drawn
/// i.i.d. with P[0] = P0 its fundaments follow P[u_n = 0 | s_{n-1} = 0] = P0
/// and P[u_n = 0 | s_{n-1} = 1] = 1 - P0.
MorphicProgram enacting_program(const BitStream& s, std::size_t length);

/// Tallies n = 1 .. length-1. Throws mismatch_error unless S is the object
/// sequence of `program` through `length`.
TransitionEstimate estimate_transitions(const MorphicProgram& program, const BitStream& s,
                                        std::size_t length);

/// Pearson chi-square on the 2x2 table of consecutive pairs.
/// Throws insufficient_samples below independence_floor.
IndependenceTest independence_test(const BitStream& s, std::size_t length,
                                   double critical_value = default_critical_value);

/// Lempel-Ziv (1976) phrase count, computed online with a suffix automaton.
std::size_t lz76_phrase_count(std::span<const Bit> bits);

/// Phrase count times log2(n) / n.
double lz76_complexity(const BitStream& s, std::size_t length);

double zero_frequency(std::span<const Bit> bits) noexcept;

struct Analysis {
  std::size_t length = 0;
  MorphicProgram program;
  TransitionEstimate transitions;
  RandomnessReport sequence;
  /// LZ76 and marginal frequency of the program string.
  RandomnessReport program_stats;
};

Analysis analyze(const BitStream& s, std::size_t length,
                 double critical_value = default_critical_value);

struct ChaosReport {
  double p0 = 0.5;
  std::uint64_t seed = 0;
  RuleCode12 rule = pi_rule;
  Analysis analysis;
  /// Digest from a verified morphic_compress of the sample.
  std::uint64_t certificate_digest = 0;
  /// LZ76 of the all-zero string of the same length.
  double lz76_zero_control = 0.0;
  /// The sample has no variation; no independence test was run.
  bool degenerate = false;
};

/// Sample, extract the program, tally, test and compress in one run.
ChaosReport chaos_demonstration(double p0, std::size_t length, std::uint64_t seed,
                                double critical_value = default_critical_value);

} // namespace c2
