#include <c2/chaos.hpp>
#include <c2/errors.hpp>

#include <algorithm>
#include <cmath>
#include <random>

namespace c2 {

bool TransitionEstimate::joint_is_deterministic() const noexcept {
  for (const auto& row : joint.counts)
    if (row[0] != 0 && row[1] != 0)
      return false;
  return true;
}

BitStream sample_random_string(double p0, std::size_t length, std::uint64_t seed) {
  if (!(p0 >= 0.0 && p0 <= 1.0))
    throw invalid_argument("probability must lie in [0, 1]");
  // Uniform doubles are built from the top 53 bits by hand so the stream
  // does not depend on the standard library's distribution code.
  return BitStream::generated(
      [engine = std::mt19937_64{seed}, p0]() mutable {
        const double u = static_cast<double>(engine() >> 11) * 0x1.0p-53;
        return u < p0 ? Bit::zero : Bit::one;
      },
      length);
}

MorphicProgram enacting_program(const BitStream& s, std::size_t length) {
  return string_to_chain(s, length);
}

TransitionEstimate estimate_transitions(const MorphicProgram& program, const BitStream& s,
                                        std::size_t length) {
  if (length == 0)
    throw invalid_argument("length must be positive");
  if (program.length() < length)
    throw mismatch_error("program covers " + std::to_string(program.length()) +
                         " objects, need " + std::to_string(length));
  const BitString bits = s.materialize(length);
  const BitString expected = chain_to_string(program).materialize(length);
  const auto [mi, _] = std::mismatch(bits.begin(), bits.end(), expected.begin());
  if (mi != bits.end())
    throw mismatch_error("string is not the object sequence of the program (first difference at " +
                         std::to_string(mi - bits.begin()) + ")");

  TransitionEstimate est;
  for (std::size_t n = 1; n < length; ++n) {
    const auto prev = static_cast<std::size_t>(to_int(bits[n - 1]));
    const auto cur = static_cast<std::size_t>(to_int(bits[n]));
    const auto u = static_cast<std::size_t>(to_int(program.operators[n - 1]));
    ++est.object.counts[prev][cur];
    ++est.fundament.counts[prev][u];
    ++est.joint.counts[2 * prev + u][cur];
  }
  est.sample_count = length - 1;
  return est;
}

IndependenceTest independence_test(const BitStream& s, std::size_t length, double critical_value) {
  if (length < independence_floor)
    throw insufficient_samples("independence test needs at least " +
                               std::to_string(independence_floor) + " bits, got " +
                               std::to_string(length));
  const BitString bits = s.materialize(length);
  IndependenceTest t;
  t.critical_value = critical_value;
  for (std::size_t n = 1; n < length; ++n)
    ++t.table.counts[static_cast<std::size_t>(to_int(bits[n - 1]))]
                    [static_cast<std::size_t>(to_int(bits[n]))];
  t.sample_count = length - 1;

  const auto& o = t.table.counts;
  const double rows[2] = {static_cast<double>(o[0][0] + o[0][1]),
                          static_cast<double>(o[1][0] + o[1][1])};
  const double cols[2] = {static_cast<double>(o[0][0] + o[1][0]),
                          static_cast<double>(o[0][1] + o[1][1])};
  if (rows[0] == 0 || rows[1] == 0 || cols[0] == 0 || cols[1] == 0) {
    t.degenerate = true;
    return t;
  }
  const double total = static_cast<double>(t.sample_count);
  double chi2 = 0.0;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      const double e = rows[i] * cols[j] / total;
      const double d = static_cast<double>(o[i][j]) - e;
      chi2 += d * d / e;
    }
  t.statistic = chi2;
  t.rejected = chi2 >= critical_value;
  return t;
}

namespace {

// Online suffix automaton over {0,1}. Used to find, for each phrase start p,
// the longest prefix of s[p..] occurring somewhere starting before p.
class SuffixAutomaton {
public:
  explicit SuffixAutomaton(std::size_t capacity) {
    states_.reserve(2 * capacity + 1);
    states_.push_back({});
  }

  struct Split {
    std::int32_t original = -1;
    std::int32_t clone = -1;
  };

  Split extend(int c) {
    Split split;
    const auto cur = static_cast<std::int32_t>(states_.size());
    states_.push_back({{-1, -1}, -1, states_[static_cast<std::size_t>(last_)].len + 1});
    std::int32_t p = last_;
    while (p != -1 && at(p).next[c] == -1) {
      at(p).next[c] = cur;
      p = at(p).link;
    }
    if (p == -1) {
      at(cur).link = 0;
    } else {
      const std::int32_t q = at(p).next[c];
      if (at(p).len + 1 == at(q).len) {
        at(cur).link = q;
      } else {
        const auto clone = static_cast<std::int32_t>(states_.size());
        State copy = at(q);
        copy.len = at(p).len + 1;
        states_.push_back(copy);
        while (p != -1 && at(p).next[c] == q) {
          at(p).next[c] = clone;
          p = at(p).link;
        }
        at(q).link = clone;
        at(cur).link = clone;
        split = {q, clone};
      }
    }
    last_ = cur;
    return split;
  }

  std::int32_t next(std::int32_t state, int c) const { return at(state).next[c]; }
  std::int32_t len(std::int32_t state) const { return at(state).len; }

private:
  struct State {
    std::array<std::int32_t, 2> next{-1, -1};
    std::int32_t link = -1;
    std::int32_t len = 0;
  };

  State& at(std::int32_t i) { return states_[static_cast<std::size_t>(i)]; }
  const State& at(std::int32_t i) const { return states_[static_cast<std::size_t>(i)]; }

  std::vector<State> states_;
  std::int32_t last_ = 0;
};

} // namespace

std::size_t lz76_phrase_count(std::span<const Bit> s) {
  const std::size_t n = s.size();
  SuffixAutomaton sam(n);
  std::size_t added = 0;
  std::size_t phrases = 0;
  std::size_t p = 0;
  while (p < n) {
    // Longest L such that s[p, p+L) occurs inside s[0, p+L-1), i.e. starts
    // before p; the phrase is that match plus one innovation bit.
    std::int32_t state = 0;
    std::size_t match = 0;
    while (p + match < n) {
      while (added < p + match) {
        const auto split = sam.extend(to_int(s[added++]));
        if (state == split.original && static_cast<std::int32_t>(match) <= sam.len(split.clone))
          state = split.clone;
      }
      const std::int32_t nxt = sam.next(state, to_int(s[p + match]));
      if (nxt == -1)
        break;
      state = nxt;
      ++match;
    }
    ++phrases;
    p += match + 1;
  }
  return phrases;
}

double lz76_complexity(const BitStream& s, std::size_t length) {
  if (length < 2)
    throw invalid_argument("LZ76 complexity needs at least 2 bits");
  const BitString bits = s.materialize(length);
  const double n = static_cast<double>(length);
  return static_cast<double>(lz76_phrase_count(bits)) * std::log2(n) / n;
}

double zero_frequency(std::span<const Bit> bits) noexcept {
  if (bits.empty())
    return 0.0;
  const auto zeros = std::count(bits.begin(), bits.end(), Bit::zero);
  return static_cast<double>(zeros) / static_cast<double>(bits.size());
}

Analysis analyze(const BitStream& s, std::size_t length, double critical_value) {
  Analysis a;
  a.length = length;
  const BitStream prefix = BitStream::finite(s.materialize(length));
  a.program = enacting_program(prefix, length);
  a.transitions = estimate_transitions(a.program, prefix, length);

  a.sequence.sample_count = length;
  a.sequence.marginal_frequency = zero_frequency(prefix.preperiod());
  if (length >= 2)
    a.sequence.lz76_complexity = lz76_complexity(prefix, length);
  if (length >= independence_floor) {
    auto test = independence_test(prefix, length, critical_value);
    if (!test.degenerate)
      a.sequence.independence = test;
  }

  const std::size_t plen = a.program.operators.size();
  a.program_stats.sample_count = plen;
  a.program_stats.marginal_frequency = zero_frequency(a.program.operators);
  if (plen >= 2)
    a.program_stats.lz76_complexity =
        lz76_complexity(BitStream::finite(a.program.operators), plen);
  return a;
}

ChaosReport chaos_demonstration(double p0, std::size_t length, std::uint64_t seed,
                                double critical_value) {
  if (length < independence_floor)
    throw insufficient_samples("demonstration needs at least " +
                               std::to_string(independence_floor) + " bits");
  ChaosReport r;
  r.p0 = p0;
  r.seed = seed;
  const BitStream sample = sample_random_string(p0, length, seed);
  r.analysis = analyze(sample, length, critical_value);
  const CompressionCertificate cert = morphic_compress(sample, length);
  r.rule = cert.rule;
  r.certificate_digest = cert.digest;
  r.lz76_zero_control = lz76_complexity(BitStream::periodic({}, {Bit::zero}), length);
  r.degenerate = !r.analysis.sequence.independence.has_value();
  return r;
}

} // namespace c2
