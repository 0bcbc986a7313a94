#pragma once

// Points of the space of infinite binary strings, held either as a finite
// prefix, an eventually periodic form pre.(w)^omega, or a lazily generated
// sequence. Distances use the longest-common-prefix ultrametric 2^-n.

#include <c2/bits.hpp>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <memory>
#include <string>
#include <string_view>

namespace c2 {

class BitStream {
public:
  enum class Form : std::uint8_t { finite, periodic, generated };

  static constexpr std::size_t unbounded = std::numeric_limits<std::size_t>::max();

  /// Produces bit k of the sequence on its k-th call.
  using Source = std::function<Bit()>;

  BitStream();

  /// A prefix-only approximation; its horizon is its length.
  static BitStream finite(BitString bits);
  /// preperiod.period.period...; throws invalid_argument for an empty period.
  static BitStream periodic(BitString preperiod, BitString period, std::size_t horizon = unbounded);
  /// Lazily pulls bits from `source`, memoizing them. Readers on any thread
  /// see the same bits.
  static BitStream generated(Source source, std::size_t horizon);

  Form form() const noexcept;
  std::size_t horizon() const noexcept;

  /// Empty for generated streams.
  const BitString& preperiod() const noexcept;
  /// Empty unless periodic.
  const BitString& period() const noexcept;

  Bit at(std::size_t k) const;
  /// The first k bits; throws horizon_exceeded when k > horizon().
  BitString materialize(std::size_t k) const;

  /// Same underlying data at the same offset.
  bool same_point(const BitStream& other) const noexcept;

private:
  struct Generator;

  Form form_ = Form::finite;
  std::size_t horizon_ = 0;
  BitString preperiod_;
  BitString period_;
  std::shared_ptr<Generator> generator_;
  std::size_t offset_ = 0;

  friend BitStream shift(const BitStream& x, std::size_t k);
};

/// Result of the prefix metric in exponent form. `exact` means 2^-exponent,
/// `at_most` means the streams agreed through the whole horizon (the value
/// is at most 2^-exponent), `zero` means the streams are provably equal.
struct Distance {
  enum class Kind : std::uint8_t { zero, exact, at_most };

  Kind kind = Kind::zero;
  std::size_t exponent = 0;

  static Distance make_zero() noexcept { return {Kind::zero, 0}; }
  static Distance make_exact(std::size_t n) noexcept { return {Kind::exact, n}; }
  static Distance make_at_most(std::size_t n) noexcept { return {Kind::at_most, n}; }

  bool operator==(const Distance&) const = default;
};

/// Orders distances by their upper bound; ties between `at_most` and `exact`
/// with the same exponent place `at_most` first.
std::strong_ordering compare_upper_bound(const Distance& a, const Distance& b) noexcept;

std::string to_string(const Distance& d);

struct CycleReport {
  bool detected = false;
  std::size_t preperiod_length = 0;
  /// Primitive period; empty when not detected.
  BitString period;
  /// |period| when detected, otherwise the horizon scanned (a lower bound).
  std::size_t cycle_number = 0;
};

/// True iff the first |w| bits of x equal w.
bool is_prefix(const BitString& w, const BitStream& x);

Distance prefix_metric(const BitStream& x, const BitStream& y, std::size_t horizon);

/// preperiod.w.w.w...; throws invalid_argument when w is empty.
BitStream cycle_stream(const BitString& w, const BitString& preperiod = {});

/// Finds the lexicographically smallest (preperiod length, period length)
/// consistent with the first `horizon` bits. A candidate counts only when
/// its preperiod fits in the first half of the window and the period is
/// seen repeating at least twice after it.
CycleReport detect_cycle(const BitStream& x, std::size_t horizon);

/// Drops the first k bits, keeping periodic structure.
BitStream shift(const BitStream& x, std::size_t k);

/// Minimal preperiod and primitive period of an eventually periodic stream.
/// Other forms are returned unchanged.
BitStream canonical(const BitStream& x);

/// "PREFIX" or "PREFIX(PERIOD)", e.g. "1(10)" for 1101010...
BitStream parse_stream(std::string_view text);
/// Inverse of parse_stream; generated streams are written as their
/// materialized horizon.
std::string to_string(const BitStream& x);

} // namespace c2
