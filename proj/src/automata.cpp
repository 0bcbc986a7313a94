#include <c2/automata.hpp>
#include <c2/errors.hpp>

#include <boost/multiprecision/cpp_int.hpp>

namespace c2 {

namespace {

constexpr std::array<const char*, 16> function_names = {
    "FALSE", "AND",  "A_AND_NOT_B", "TRANSFER_A", "NOT_A_AND_B", "TRANSFER_B",
    "XOR",   "OR",   "NOR",         "XNOR",       "NOT_B",       "A_OR_NOT_B",
    "NOT_A", "NOT_A_OR_B", "NAND",  "TRUE"};

void require_positive(std::size_t n, const char* what) {
  if (n == 0)
    throw invalid_argument(std::string(what) + " must be positive");
}

} // namespace

std::string RuleCode12::bits() const {
  std::string out;
  out.reserve(12);
  for (int pair = 0; pair < 4; ++pair) {
    out += (pair & 2) ? '1' : '0';
    out += (pair & 1) ? '1' : '0';
    out += to_char(outputs_[static_cast<std::size_t>(pair)]);
  }
  return out;
}

RuleCode12 parse_rule(std::string_view text) {
  if (text.size() != 12)
    throw rule_length_error("rule code must have 12 characters, got " +
                            std::to_string(text.size()));
  for (std::size_t i = 0; i < text.size(); ++i)
    if (text[i] != '0' && text[i] != '1')
      throw rule_alphabet_error("rule code has non-binary character '" + std::string(1, text[i]) +
                                "' at position " + std::to_string(i));
  std::array<Bit, 4> outputs{};
  for (std::size_t pair = 0; pair < 4; ++pair) {
    const char a = text[3 * pair];
    const char b = text[3 * pair + 1];
    const char want_a = (pair & 2) ? '1' : '0';
    const char want_b = (pair & 1) ? '1' : '0';
    if (a != want_a || b != want_b)
      throw rule_order_error("triple " + std::to_string(pair + 1) + " has inputs " +
                             std::string{a, b} + ", expected " + std::string{want_a, want_b});
    outputs[pair] = to_bit(text[3 * pair + 2] == '1');
  }
  return RuleCode12{outputs};
}

std::string BooleanFunctionId::label() const {
  std::string column(4, '0');
  for (int i = 0; i < 4; ++i)
    column[static_cast<std::size_t>(i)] = ((id >> (3 - i)) & 1) ? '1' : '0';
  return name + " (" + column + ")";
}

BooleanFunctionId boolean_table(const RuleCode12& rule) {
  int id = 0;
  for (Bit out : rule.outputs())
    id = 2 * id + to_int(out);
  return {id, function_names[static_cast<std::size_t>(id)]};
}

BitStream apply_pi(const RuleCode12& rule, Bit s0, const BitStream& program, std::size_t length) {
  require_positive(length, "output length");
  // The recurrence is sequential in n by construction.
  const BitString u = program.materialize(length - 1);
  BitString s(length);
  s[0] = s0;
  for (std::size_t n = 1; n < length; ++n)
    s[n] = rule.output(u[n - 1], s[n - 1]);
  return BitStream::finite(std::move(s));
}

BitStream apply_shift_rule(const RuleCode12& rule, const BitStream& s, std::size_t length) {
  require_positive(length, "output length");
  if (s.form() == BitStream::Form::periodic) {
    const BitString& pre = s.preperiod();
    const BitString& w = s.period();
    BitString out_pre(pre.size());
    for (std::size_t n = 0; n < pre.size(); ++n)
      out_pre[n] = rule.output(pre[n], n + 1 < pre.size() ? pre[n + 1] : w.front());
    BitString out_w(w.size());
    for (std::size_t j = 0; j < w.size(); ++j)
      out_w[j] = rule.output(w[j], w[(j + 1) % w.size()]);
    return BitStream::periodic(std::move(out_pre), std::move(out_w), s.horizon());
  }
  const BitString in = s.materialize(length + 1);
  BitString out(length);
  for (std::size_t n = 0; n < length; ++n)
    out[n] = rule.output(in[n], in[n + 1]);
  return BitStream::finite(std::move(out));
}

std::vector<BitStream> iterate_bernoulli(const BitStream& s0, std::size_t steps,
                                         std::size_t length) {
  require_positive(steps, "step count");
  require_positive(length, "length");
  std::vector<BitStream> orbit;
  orbit.reserve(steps + 1);
  if (s0.form() == BitStream::Form::periodic)
    orbit.push_back(s0);
  else
    orbit.push_back(BitStream::finite(s0.materialize(length + steps)));
  for (std::size_t k = 0; k < steps; ++k) {
    const BitStream& cur = orbit.back();
    const std::size_t next_len =
        cur.form() == BitStream::Form::periodic ? length : cur.horizon() - 1;
    orbit.push_back(apply_shift_rule(shift_rule, cur, next_len));
  }
  return orbit;
}

BitString dyadic_doubling_oracle(const BitString& x_bits, std::size_t steps) {
  using boost::multiprecision::cpp_int;
  using boost::multiprecision::cpp_rational;
  if (steps > x_bits.size())
    throw invalid_argument("oracle asked for " + std::to_string(steps) + " doublings of a " +
                           std::to_string(x_bits.size()) + "-bit expansion");

  cpp_int numerator = 0;
  for (Bit b : x_bits)
    numerator = 2 * numerator + to_int(b);
  cpp_int denominator = 1;
  denominator <<= x_bits.size();
  cpp_rational x(numerator, denominator);

  const cpp_rational one(1);
  for (std::size_t k = 0; k < steps; ++k) {
    x *= 2;
    if (x >= one)
      x -= one;
  }

  BitString out(x_bits.size() - steps);
  for (auto& b : out) {
    x *= 2;
    b = to_bit(x >= one);
    if (x >= one)
      x -= one;
  }
  return out;
}

} // namespace c2
