#include <c2/category.hpp>
#include <c2/errors.hpp>

namespace c2 {

Bit apply_operator(Operator u, Bit s) {
  switch (u.kind()) {
  case Operator::Kind::zero:
    return s;
  case Operator::Kind::one:
    return flip(s);
  case Operator::Kind::identity:
    if (*u.object() != s)
      throw undefined_morphism("identity of object " + std::string(1, to_char(*u.object())) +
                               " applied to object " + std::string(1, to_char(s)));
    return s;
  }
  return s;
}

bool composable(Operator outer, Operator inner) noexcept {
  return !(outer.is_identity() && inner.is_identity() && outer.object() != inner.object());
}

Operator compose(Operator outer, Operator inner) {
  using K = Operator::Kind;
  if (!composable(outer, inner))
    throw non_composable(to_string(outer) + " . " + to_string(inner) +
                         ": identities of different objects");
  // 0^ is neutral on both sides, including next to an identity.
  if (outer.kind() == K::zero)
    return inner;
  if (inner.kind() == K::zero)
    return outer;
  if (outer.kind() == K::one && inner.kind() == K::one)
    return Operator::zero();
  if (outer.kind() == K::one || inner.kind() == K::one)
    return Operator::one();
  return outer; // identical identities
}

Morphism make_morphism(Bit origin, Operator fundament) {
  return Morphism{origin, fundament, apply_operator(fundament, origin)};
}

bool is_valid(const Morphism& m) noexcept {
  if (m.fundament.is_identity() && *m.fundament.object() != m.origin)
    return false;
  switch (m.fundament.kind()) {
  case Operator::Kind::one:
    return m.target == flip(m.origin);
  default:
    return m.target == m.origin;
  }
}

FiniteChain FiniteChain::derive(Bit initial, std::vector<Operator> fundaments) {
  FiniteChain chain;
  chain.initial = initial;
  chain.objects.reserve(fundaments.size() + 1);
  chain.objects.push_back(initial);
  Bit s = initial;
  for (Operator u : fundaments) {
    s = apply_operator(u, s);
    chain.objects.push_back(s);
  }
  chain.fundaments = std::move(fundaments);
  return chain;
}

ChainValidation validate_chain(const FiniteChain& chain) {
  if (chain.objects.size() != chain.fundaments.size() + 1)
    return {false, 0,
            "expected " + std::to_string(chain.fundaments.size() + 1) + " objects, got " +
                std::to_string(chain.objects.size())};
  if (chain.objects.front() != chain.initial)
    return {false, 0, "first object differs from the initial object"};
  for (std::size_t k = 1; k <= chain.fundaments.size(); ++k) {
    const Morphism link{chain.objects[k - 1], chain.fundaments[k - 1], chain.objects[k]};
    if (!is_valid(link))
      return {false, k,
              "link " + std::to_string(k) + " (" + to_char(link.origin) + " -" +
                  to_string(link.fundament) + "-> " + to_char(link.target) + ") is not a morphism"};
  }
  return {};
}

Operator fold_chain(const FiniteChain& chain) {
  if (auto report = validate_chain(chain); !report.valid)
    throw undefined_morphism("cannot fold invalid chain: " + report.reason);
  Operator acc = Operator::zero();
  for (Operator u : chain.fundaments)
    acc = compose(u, acc);
  return acc;
}

Operator parse_operator(std::string_view text) {
  if (text == "0")
    return Operator::zero();
  if (text == "1")
    return Operator::one();
  if (text == "i0")
    return Operator::identity(Bit::zero);
  if (text == "i1")
    return Operator::identity(Bit::one);
  throw parse_error("unknown operator '" + std::string(text) + "' (expected 0, 1, i0 or i1)");
}

std::string to_string(Operator u) {
  switch (u.kind()) {
  case Operator::Kind::zero:
    return "0";
  case Operator::Kind::one:
    return "1";
  case Operator::Kind::identity:
    return *u.object() == Bit::zero ? "i0" : "i1";
  }
  return "?";
}

std::vector<Operator> parse_operators(std::string_view text) {
  std::vector<Operator> ops;
  while (!text.empty()) {
    const std::size_t width = text.front() == 'i' ? 2 : 1;
    if (text.size() < width)
      throw parse_error("truncated identity token");
    ops.push_back(parse_operator(text.substr(0, width)));
    text.remove_prefix(width);
  }
  return ops;
}

FiniteChain parse_chain(std::string_view text) {
  const auto colon = text.find(':');
  if (colon != 1)
    throw parse_error("chain must look like s0:u1u2...un");
  const BitString head = parse_bits(text.substr(0, 1));
  return FiniteChain::derive(head.front(), parse_operators(text.substr(2)));
}

std::string to_string(const FiniteChain& chain) {
  std::string out(1, to_char(chain.initial));
  out += ':';
  for (Operator u : chain.fundaments)
    out += to_string(u);
  return out;
}

} // namespace c2
