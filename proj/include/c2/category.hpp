#pragma once

// The X-OR operator algebra on the two-object category: objects are bits,
// the non-identity morphisms keep (0^) or negate (1^) their origin, and
// each object also carries its own identity.

#include <c2/bits.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace c2 {

/// A morphic fundament. The four values zero, one, identity(0) and
/// identity(1) are pairwise distinct even where zero and an identity act
/// alike on an object.
class Operator {
public:
  enum class Kind : std::uint8_t { zero, one, identity };

  static constexpr Operator zero() noexcept { return Operator{Kind::zero, Bit::zero}; }
  static constexpr Operator one() noexcept { return Operator{Kind::one, Bit::zero}; }
  static constexpr Operator identity(Bit object) noexcept {
    return Operator{Kind::identity, object};
  }

  /// Maps the bit of a morphic program onto zero/one.
  static constexpr Operator from_bit(Bit b) noexcept { return b == Bit::zero ? zero() : one(); }

  constexpr Kind kind() const noexcept { return kind_; }
  constexpr bool is_identity() const noexcept { return kind_ == Kind::identity; }

  /// The pinned object of an identity; empty for zero and one.
  constexpr std::optional<Bit> object() const noexcept {
    if (kind_ == Kind::identity)
      return object_;
    return std::nullopt;
  }

  constexpr bool operator==(const Operator&) const noexcept = default;

private:
  constexpr Operator(Kind kind, Bit object) noexcept : kind_{kind}, object_{object} {}

  Kind kind_;
  Bit object_;
};

inline constexpr Operator all_operators[] = {Operator::zero(), Operator::one(),
                                             Operator::identity(Bit::zero),
                                             Operator::identity(Bit::one)};

/// Target of the morphism with fundament `u` and origin `s`.
/// Throws undefined_morphism when an identity is applied to the other object.
Bit apply_operator(Operator u, Bit s);

/// outer . inner (inner acts first). Zero and one act on either object;
/// identities pin theirs, so the only non-composable pairs are identities
/// of different objects (throws non_composable).
Operator compose(Operator outer, Operator inner);

/// True when some origin lets `inner` and then `outer` both apply.
bool composable(Operator outer, Operator inner) noexcept;

struct Morphism {
  Bit origin;
  Operator fundament;
  Bit target;

  bool operator==(const Morphism&) const = default;
};

/// Builds the morphism with the given origin, computing its target.
Morphism make_morphism(Bit origin, Operator fundament);

/// The target matches the fundament's action and identities sit on their object.
bool is_valid(const Morphism& m) noexcept;

/// s0 -u1-> s1 -u2-> ... -un-> sn. Objects are stored rather than derived so
/// that externally supplied, possibly inconsistent chains can be validated.
struct FiniteChain {
  Bit initial = Bit::zero;
  std::vector<Operator> fundaments;
  BitString objects;

  /// Derives s0..sn from the initial object and fundaments.
  static FiniteChain derive(Bit initial, std::vector<Operator> fundaments);

  std::size_t size() const noexcept { return fundaments.size(); }
};

struct ChainValidation {
  bool valid = true;
  /// 1-based index k of the first bad link (s_{k-1}, u_k, s_k); 0 when the
  /// object list itself is malformed.
  std::size_t first_invalid = 0;
  std::string reason;
};

ChainValidation validate_chain(const FiniteChain& chain);

/// un . ... . u1. The empty chain folds to zero.
Operator fold_chain(const FiniteChain& chain);

// Text forms: operators are "0", "1", "i0", "i1"; chains are
// "s0:u1u2...un", e.g. "0:00010011001".
Operator parse_operator(std::string_view text);
std::string to_string(Operator u);
/// Concatenated operator tokens, e.g. "0i01" -> zero, identity(0), one.
std::vector<Operator> parse_operators(std::string_view text);
FiniteChain parse_chain(std::string_view text);
std::string to_string(const FiniteChain& chain);

} // namespace c2
