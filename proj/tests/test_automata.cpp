#include <c2/automata.hpp>
#include <c2/category.hpp>
#include <c2/errors.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace c2;

namespace {

BitString random_bits(std::mt19937_64& rng, std::size_t n) {
  BitString out(n);
  for (auto& b : out)
    b = to_bit(rng() & 1);
  return out;
}

// Doubling on an integer numerator: x = N / 2^m, 2x mod 1 drops the top bit.
BitString doubling_by_integer(const BitString& bits, std::size_t steps) {
  return BitString(bits.begin() + static_cast<std::ptrdiff_t>(steps), bits.end());
}

} // namespace

TEST(ParseRule, KnownCodes) {
  EXPECT_EQ(parse_rule("000011101110"), pi_rule);
  EXPECT_EQ(parse_rule("000011100111"), shift_rule);
  EXPECT_EQ(pi_rule.bits(), "000011101110");
  EXPECT_EQ(shift_rule.bits(), "000011100111");
}

TEST(ParseRule, ErrorKinds) {
  EXPECT_THROW(parse_rule("00001110111"), rule_length_error);
  EXPECT_THROW(parse_rule("0000111011100"), rule_length_error);
  EXPECT_THROW(parse_rule("00001110111x"), rule_alphabet_error);
  EXPECT_THROW(parse_rule("100011101110"), rule_order_error);
  EXPECT_THROW(parse_rule("000100011110"), rule_order_error);
}

TEST(ParseRule, AllSixteenRoundTrip) {
  for (int id = 0; id < 16; ++id) {
    std::string code;
    for (int k = 0; k < 4; ++k) {
      code += k / 2 ? '1' : '0';
      code += k % 2 ? '1' : '0';
      code += (id >> (3 - k)) & 1 ? '1' : '0';
    }
    const RuleCode12 rule = parse_rule(code);
    EXPECT_EQ(rule.bits(), code);
    EXPECT_EQ(boolean_table(rule).id, id);
  }
}

TEST(BooleanTable, Names) {
  EXPECT_EQ(boolean_table(pi_rule).label(), "XOR (0110)");
  EXPECT_EQ(boolean_table(shift_rule).label(), "TRANSFER_B (0101)");
  EXPECT_EQ(boolean_table(parse_rule("000010100111")).name, "AND");
  EXPECT_EQ(boolean_table(parse_rule("000011101111")).name, "OR");
  EXPECT_EQ(boolean_table(parse_rule("001010100110")).name, "NOR");
  EXPECT_EQ(boolean_table(parse_rule("001011101110")).name, "NAND");
  EXPECT_EQ(boolean_table(parse_rule("000010100110")).name, "FALSE");
}

TEST(ApplyPi, ProgramExample) {
  const BitStream s = apply_pi(pi_rule, Bit::zero, BitStream::finite(parse_bits("00010011001")), 12);
  EXPECT_EQ(to_string(s.materialize(12)), "000011101110");
}

TEST(ApplyPi, XorRecurrence) {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 200; ++t) {
    const BitString u = random_bits(rng, 63);
    const Bit s0 = to_bit(rng() & 1);
    const BitString s = apply_pi(pi_rule, s0, BitStream::finite(u), 64).materialize(64);
    ASSERT_EQ(s.front(), s0);
    for (std::size_t n = 1; n < 64; ++n)
      EXPECT_EQ(s[n], u[n - 1] ^ s[n - 1]);
  }
}

TEST(ApplyPi, FlippingOneFundamentFlipsTheSuffix) {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 100; ++t) {
    BitString u = random_bits(rng, 47);
    const BitString before = apply_pi(pi_rule, Bit::zero, BitStream::finite(u), 48).materialize(48);
    const std::size_t k = rng() % 47;
    u[k] = flip(u[k]);
    const BitString after = apply_pi(pi_rule, Bit::zero, BitStream::finite(u), 48).materialize(48);
    for (std::size_t n = 0; n < 48; ++n)
      EXPECT_EQ(after[n] != before[n], n > k) << n;
  }
}

TEST(ApplyPi, AgreesWithChainObjects) {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 100; ++t) {
    const BitString u = random_bits(rng, 30);
    std::vector<Operator> ops;
    for (Bit b : u)
      ops.push_back(Operator::from_bit(b));
    const Bit s0 = to_bit(rng() & 1);
    EXPECT_EQ(apply_pi(pi_rule, s0, BitStream::finite(u), 31).materialize(31),
              FiniteChain::derive(s0, ops).objects);
  }
}

TEST(ApplyPi, NeedsEnoughProgram) {
  EXPECT_THROW(apply_pi(pi_rule, Bit::zero, BitStream::finite(parse_bits("01")), 5),
               horizon_exceeded);
}

TEST(ApplyShiftRule, FiniteDropsFirstBit) {
  const BitStream s = apply_shift_rule(shift_rule, BitStream::finite(parse_bits("1100")), 3);
  EXPECT_EQ(to_string(s.materialize(3)), "100");
}

TEST(ApplyShiftRule, PeriodicStaysPeriodic) {
  const BitStream s = apply_shift_rule(shift_rule, parse_stream("(10)"), 8);
  EXPECT_EQ(s.form(), BitStream::Form::periodic);
  EXPECT_EQ(to_string(s.materialize(6)), "010101");
  const BitStream t = apply_shift_rule(pi_rule, parse_stream("1(10)"), 8);
  // XOR of neighbours of 1101010... is 0111111...
  EXPECT_EQ(to_string(t.materialize(7)), "0111111");
}

TEST(IterateBernoulli, Examples) {
  const auto steps = iterate_bernoulli(BitStream::finite(parse_bits("1100")), 2, 2);
  ASSERT_EQ(steps.size(), 3u);
  EXPECT_EQ(to_string(steps[0].materialize(4)), "1100");
  EXPECT_EQ(to_string(steps[1].materialize(3)), "100");
  EXPECT_EQ(to_string(steps[2].materialize(2)), "00");

  const auto cyc = iterate_bernoulli(parse_stream("(10)"), 2, 8);
  EXPECT_EQ(prefix_metric(cyc[2], cyc[0], 64), Distance::make_zero());
  EXPECT_NE(prefix_metric(cyc[1], cyc[0], 64), Distance::make_zero());
}

TEST(IterateBernoulli, ZeroArgumentsRejected) {
  EXPECT_THROW(iterate_bernoulli(parse_stream("(1)"), 0, 4), invalid_argument);
  EXPECT_THROW(iterate_bernoulli(parse_stream("(1)"), 2, 0), invalid_argument);
}

TEST(DyadicOracle, Examples) {
  EXPECT_EQ(to_string(dyadic_doubling_oracle(parse_bits("11"), 1)), "1");
  EXPECT_EQ(to_string(dyadic_doubling_oracle(parse_bits("101000"), 2)), "1000");
  EXPECT_EQ(to_string(dyadic_doubling_oracle(parse_bits("0111"), 1)), "111");
}

TEST(DyadicOracle, MatchesIntegerDoubling) {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 200; ++t) {
    const BitString x = random_bits(rng, 64);
    const std::size_t n = rng() % 33;
    EXPECT_EQ(dyadic_doubling_oracle(x, n), doubling_by_integer(x, n));
  }
}

TEST(IterateBernoulli, ElementaryRule170MatchesDoubling) {
  std::mt19937_64 rng(99);
  for (int t = 0; t < 200; ++t) {
    const BitString x = random_bits(rng, 64);
    const std::size_t steps = 1 + rng() % 32;
    const auto it = iterate_bernoulli(BitStream::finite(x), steps, 64 - steps);
    EXPECT_EQ(it[steps].materialize(64 - steps), dyadic_doubling_oracle(x, steps));
  }
}
