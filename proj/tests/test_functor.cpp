#include <c2/errors.hpp>
#include <c2/functor.hpp>

#include <gtest/gtest.h>

#include <random>
#include <set>

using namespace c2;

namespace {

// Walks the chain one object at a time; no automaton involved.
BitString objects_by_hand(const MorphicProgram& p) {
  BitString s{p.s0};
  for (Bit u : p.operators)
    s.push_back(u == Bit::one ? flip(s.back()) : s.back());
  return s;
}

BitString bits_of(std::uint64_t v, std::size_t n) {
  BitString out(n);
  for (std::size_t i = 0; i < n; ++i)
    out[i] = to_bit((v >> (n - 1 - i)) & 1);
  return out;
}

} // namespace

TEST(Functor, ChainToStringExample) {
  const MorphicProgram p{Bit::zero, parse_bits("00010011001")};
  EXPECT_EQ(p.length(), 12u);
  EXPECT_EQ(to_string(chain_to_string(p).materialize(12)), "000011101110");
}

TEST(Functor, StringToChainExample) {
  const MorphicProgram p = string_to_chain(BitStream::finite(parse_bits("000011101110")), 12);
  EXPECT_EQ(p.s0, Bit::zero);
  EXPECT_EQ(to_string(p.operators), "00010011001");
  EXPECT_EQ(to_string(string_to_chain(parse_stream("(1)"), 4).operators), "000");
  EXPECT_EQ(to_string(string_to_chain(parse_stream("(10)"), 4).operators), "111");
}

TEST(Functor, ToChainIsValid) {
  const FiniteChain chain = to_chain({Bit::one, parse_bits("0110")});
  EXPECT_TRUE(validate_chain(chain).valid);
  EXPECT_EQ(to_string(chain.objects), "11011");
}

TEST(Functor, ExhaustiveRoundTripsUpToSixteen) {
  for (std::size_t len = 1; len <= 16; ++len)
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << len); ++v) {
      const BitString s = bits_of(v, len);
      const MorphicProgram p = string_to_chain(BitStream::finite(s), len);
      ASSERT_EQ(p.length(), len);
      ASSERT_EQ(objects_by_hand(p), s);
      ASSERT_EQ(chain_to_string(p).materialize(len), s);
      ASSERT_EQ(string_to_chain(chain_to_string(p), len), p);
    }
}

TEST(Functor, ProgramsAreInjective) {
  // Distinct strings of one length never share a program.
  std::set<std::pair<Bit, BitString>> seen;
  for (std::uint64_t v = 0; v < 1024; ++v) {
    const MorphicProgram p = string_to_chain(BitStream::finite(bits_of(v, 10)), 10);
    EXPECT_TRUE(seen.insert({p.s0, p.operators}).second);
  }
}

TEST(Compress, RuleIsConstantAndRoundTrips) {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 300; ++t) {
    BitString s(1 + rng() % 300);
    for (auto& b : s)
      b = to_bit(rng() & 1);
    const auto cert = morphic_compress(BitStream::finite(s), s.size());
    EXPECT_EQ(cert.rule, pi_rule);
    EXPECT_EQ(cert.reproduced_prefix_length, s.size());
    EXPECT_EQ(cert.digest, bit_digest(s));
    EXPECT_EQ(decompress(cert).materialize(s.size()), s);
  }
}

TEST(Compress, Idempotent) {
  const BitString s = parse_bits("0110100110010110");
  const auto once = morphic_compress(BitStream::finite(s), s.size());
  const auto twice = morphic_compress(decompress(once), s.size());
  EXPECT_EQ(to_record(once), to_record(twice));
}

TEST(Compress, PrefixOfPeriodicStream) {
  const auto cert = morphic_compress(parse_stream("1(10)"), 9);
  EXPECT_EQ(to_string(decompress(cert).materialize(9)), "110101010");
}

TEST(Digest, Fnv1aKnownValues) {
  // Empty input hashes to the FNV-1a 64 offset basis.
  EXPECT_EQ(bit_digest({}), 0xcbf29ce484222325ULL);
  EXPECT_NE(bit_digest(parse_bits("0")), bit_digest(parse_bits("1")));
}

TEST(Certificate, RecordRoundTrip) {
  const auto cert = morphic_compress(BitStream::finite(parse_bits("000011101110")), 12);
  const std::string record = to_record(cert);
  EXPECT_NE(record.find("rule=000011101110\n"), std::string::npos);
  EXPECT_NE(record.find("operators=00010011001\n"), std::string::npos);
  const auto back = parse_certificate(record);
  EXPECT_EQ(to_record(back), record);
  EXPECT_EQ(to_string(decompress(back).materialize(12)), "000011101110");
}

TEST(Certificate, TamperingIsDetected) {
  auto cert = morphic_compress(BitStream::finite(parse_bits("000011101110")), 12);
  cert.program.operators[3] = flip(cert.program.operators[3]);
  EXPECT_THROW(decompress(cert), mismatch_error);

  cert = morphic_compress(BitStream::finite(parse_bits("000011101110")), 12);
  cert.reproduced_prefix_length = 13;
  EXPECT_THROW(decompress(cert), mismatch_error);
}

TEST(Certificate, MalformedRecords) {
  EXPECT_THROW(parse_certificate("version=1\n"), parse_error);
  EXPECT_THROW(parse_certificate("garbage"), parse_error);
  const std::string good = to_record(morphic_compress(parse_stream("(01)"), 6));
  std::string bad_rule = good;
  bad_rule.replace(bad_rule.find("rule=") + 5, 1, "1");
  EXPECT_THROW(parse_certificate(bad_rule), rule_order_error);
  std::string bad_version = good;
  bad_version.replace(bad_version.find("version=1"), 9, "version=7");
  EXPECT_THROW(parse_certificate(bad_version), parse_error);
}
