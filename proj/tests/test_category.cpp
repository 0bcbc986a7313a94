#include <c2/category.hpp>
#include <c2/errors.hpp>

#include <gtest/gtest.h>

#include <array>
#include <random>

using namespace c2;

namespace {

const Operator O = Operator::zero();
const Operator I = Operator::one();
const Operator id0 = Operator::identity(Bit::zero);
const Operator id1 = Operator::identity(Bit::one);

// Parity oracle: a run of zero/one fundaments folds to one iff it contains
// an odd number of ones.
Operator parity_fold(const std::vector<Operator>& ops) {
  int ones = 0;
  for (Operator u : ops)
    ones += u == I;
  return ones % 2 ? I : O;
}

} // namespace

TEST(ApplyOperator, XorSemantics) {
  EXPECT_EQ(apply_operator(O, Bit::one), Bit::one);
  EXPECT_EQ(apply_operator(O, Bit::zero), Bit::zero);
  EXPECT_EQ(apply_operator(I, Bit::zero), Bit::one);
  EXPECT_EQ(apply_operator(I, Bit::one), Bit::zero);
  EXPECT_EQ(apply_operator(id0, Bit::zero), Bit::zero);
  EXPECT_EQ(apply_operator(id1, Bit::one), Bit::one);
}

TEST(ApplyOperator, IdentityOnWrongObjectIsUndefined) {
  EXPECT_THROW(apply_operator(id0, Bit::one), undefined_morphism);
  EXPECT_THROW(apply_operator(id1, Bit::zero), undefined_morphism);
}

TEST(Operator, FourDistinctValues) {
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b)
      EXPECT_EQ(all_operators[a] == all_operators[b], a == b);
  EXPECT_NE(O, id0);
  EXPECT_NE(O, id1);
}

TEST(Compose, OperatorTable) {
  EXPECT_EQ(compose(I, I), O);
  EXPECT_EQ(compose(O, O), O);
  EXPECT_EQ(compose(O, I), I);
  EXPECT_EQ(compose(I, O), I);
  EXPECT_EQ(compose(id0, id0), id0);
  EXPECT_EQ(compose(id1, id1), id1);
}

TEST(Compose, MismatchedIdentitiesAreNotComposable) {
  EXPECT_THROW(compose(id0, id1), non_composable);
  EXPECT_THROW(compose(id1, id0), non_composable);
  EXPECT_FALSE(composable(id0, id1));
}

TEST(Compose, ZeroIsNeutralIncludingNextToIdentities) {
  for (Operator u : all_operators) {
    EXPECT_EQ(compose(O, u), u);
    EXPECT_EQ(compose(u, O), u);
  }
}

TEST(Compose, OneAbsorbsEverythingButItself) {
  for (Operator u : all_operators) {
    if (u == I)
      continue;
    EXPECT_EQ(compose(u, I), I);
    EXPECT_EQ(compose(I, u), I);
  }
}

TEST(Compose, IdentityLawForFlip) {
  // 1^ : x -> 1-x is the only non-automorphic morphism.
  for (Bit x : {Bit::zero, Bit::one}) {
    EXPECT_EQ(compose(I, Operator::identity(x)), I);
    EXPECT_EQ(compose(Operator::identity(flip(x)), I), I);
  }
}

TEST(Compose, IdentityImplicatesTheAutomorphism) {
  for (Bit x : {Bit::zero, Bit::one}) {
    const Operator id = Operator::identity(x);
    EXPECT_EQ(compose(O, id), id);
    EXPECT_EQ(compose(id, O), id);
  }
}

TEST(Compose, HomomorphismExhaustive) {
  int checked = 0;
  for (Operator a : all_operators)
    for (Operator b : all_operators) {
      if (!composable(a, b))
        continue;
      for (Bit s : {Bit::zero, Bit::one}) {
        Bit via_steps;
        try {
          via_steps = apply_operator(a, apply_operator(b, s));
        } catch (const undefined_morphism&) {
          continue;
        }
        EXPECT_EQ(apply_operator(compose(a, b), s), via_steps)
            << to_string(a) << " . " << to_string(b) << " on " << to_char(s);
        ++checked;
      }
    }
  EXPECT_GT(checked, 0);
}

TEST(Compose, AssociativeWhereDefined) {
  int triples = 0;
  for (Operator h : all_operators)
    for (Operator g : all_operators)
      for (Operator f : all_operators) {
        if (!composable(h, g) || !composable(g, f))
          continue;
        const Operator hg = compose(h, g);
        const Operator gf = compose(g, f);
        if (!composable(hg, f) || !composable(h, gf))
          continue;
        EXPECT_EQ(compose(hg, f), compose(h, gf));
        ++triples;
      }
  EXPECT_GT(triples, 40);
}

// 0^ . id = id, 1^ . id = 1^ and 1^ . 1^ = 0^ together force
// (1^ . 1^) . id_x = id_x but 1^ . (1^ . id_x) = 0^. These are the only
// defined triples on which the two groupings disagree.
TEST(Compose, AssociativityCounterexamplesAreExactlyTheDoubleFlips) {
  std::vector<std::array<Operator, 3>> broken;
  for (Operator h : all_operators)
    for (Operator g : all_operators)
      for (Operator f : all_operators) {
        if (!composable(h, g) || !composable(g, f) || !composable(compose(h, g), f) ||
            !composable(h, compose(g, f)))
          continue;
        if (compose(compose(h, g), f) != compose(h, compose(g, f)))
          broken.push_back({h, g, f});
      }
  const std::vector<std::array<Operator, 3>> expected = {
      {I, I, id0}, {I, I, id1}, {id0, I, I}, {id1, I, I}};
  EXPECT_EQ(broken, expected);
}

TEST(Compose, Involution) {
  for (Bit s : {Bit::zero, Bit::one})
    EXPECT_EQ(apply_operator(I, apply_operator(I, s)), s);
}

TEST(Morphism, TargetFollowsFundament) {
  EXPECT_EQ(make_morphism(Bit::zero, I).target, Bit::one);
  EXPECT_TRUE(is_valid(make_morphism(Bit::one, O)));
  EXPECT_FALSE(is_valid(Morphism{Bit::zero, I, Bit::zero}));
  EXPECT_FALSE(is_valid(Morphism{Bit::one, id0, Bit::one}));
}

TEST(ValidateChain, PiRuleChainIsValid) {
  const FiniteChain chain = parse_chain("0:00010011001");
  EXPECT_EQ(to_string(chain.objects), "000011101110");
  EXPECT_TRUE(validate_chain(chain).valid);
}

TEST(ValidateChain, ReportsFirstBadLink) {
  FiniteChain chain{Bit::zero, {I}, {Bit::zero, Bit::zero}};
  const auto report = validate_chain(chain);
  EXPECT_FALSE(report.valid);
  EXPECT_EQ(report.first_invalid, 1u);

  FiniteChain later{Bit::zero, {O, O, I, id0}, parse_bits("00011")};
  EXPECT_EQ(validate_chain(later).first_invalid, 4u);
}

TEST(ValidateChain, EmptyChainIsValid) {
  FiniteChain chain{Bit::zero, {}, {Bit::zero}};
  EXPECT_TRUE(validate_chain(chain).valid);
  EXPECT_EQ(fold_chain(chain), O);
}

TEST(ValidateChain, WrongObjectCount) {
  FiniteChain chain{Bit::zero, {O}, {Bit::zero}};
  const auto report = validate_chain(chain);
  EXPECT_FALSE(report.valid);
  EXPECT_EQ(report.first_invalid, 0u);
}

TEST(FoldChain, Examples) {
  EXPECT_EQ(fold_chain(FiniteChain::derive(Bit::zero, {I, I})), O);
  EXPECT_EQ(fold_chain(FiniteChain::derive(Bit::zero, {O, O, O})), O);
  // Four flips among eleven fundaments: the chain returns to its start.
  const FiniteChain pi_chain = parse_chain("0:00010011001");
  EXPECT_EQ(fold_chain(pi_chain), parity_fold(pi_chain.fundaments));
  EXPECT_EQ(fold_chain(pi_chain), O);
  EXPECT_EQ(apply_operator(fold_chain(pi_chain), pi_chain.initial), pi_chain.objects.back());
}

TEST(FoldChain, ParityOracleOnRandomChains) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<Operator> ops;
    for (std::size_t n = rng() % 40; n > 0; --n)
      ops.push_back(rng() % 2 ? I : O);
    const Bit s0 = to_bit(rng() % 2);
    const FiniteChain chain = FiniteChain::derive(s0, ops);
    const Operator folded = fold_chain(chain);
    EXPECT_EQ(folded, parity_fold(ops));
    EXPECT_EQ(apply_operator(folded, s0), chain.objects.back());
  }
}

TEST(FoldChain, ChainsWithIdentities) {
  const FiniteChain chain = parse_chain("0:i01i1");
  EXPECT_EQ(to_string(chain.objects), "0011");
  EXPECT_EQ(fold_chain(chain), I);
  EXPECT_EQ(fold_chain(parse_chain("1:i1")), id1);
}

TEST(FoldChain, RejectsInvalidChain) {
  FiniteChain chain{Bit::zero, {I}, {Bit::zero, Bit::zero}};
  EXPECT_THROW(fold_chain(chain), undefined_morphism);
}

TEST(Text, OperatorAndChainForms) {
  for (Operator u : all_operators)
    EXPECT_EQ(parse_operator(to_string(u)), u);
  EXPECT_EQ(to_string(parse_chain("1:0i11")), "1:0i11");
  EXPECT_THROW(parse_operator("2"), parse_error);
  EXPECT_THROW(parse_chain("0-01"), parse_error);
  EXPECT_THROW(parse_chain("0:0i"), parse_error);
  EXPECT_THROW(parse_chain("0:i1"), undefined_morphism);
}
