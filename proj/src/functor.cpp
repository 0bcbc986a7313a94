#include <c2/errors.hpp>
#include <c2/functor.hpp>

#include <charconv>
#include <cstdio>
#include <map>

namespace c2 {

namespace {

constexpr int record_version = 1;

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

template <typename T>
T parse_number(std::string_view text, int base, const char* field) {
  T value{};
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value, base);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    throw parse_error(std::string("bad value for ") + field + ": '" + std::string(text) + "'");
  return value;
}

} // namespace

BitStream chain_to_string(const MorphicProgram& program) {
  return apply_pi(pi_rule, program.s0, BitStream::finite(program.operators), program.length());
}

MorphicProgram string_to_chain(const BitStream& s, std::size_t length) {
  if (length == 0)
    throw invalid_argument("length must be positive");
  const BitString bits = s.materialize(length);
  MorphicProgram program;
  program.s0 = bits.front();
  program.operators.resize(length - 1);
  for (std::size_t n = 1; n < length; ++n)
    program.operators[n - 1] = bits[n - 1] ^ bits[n];
  return program;
}

FiniteChain to_chain(const MorphicProgram& program) {
  std::vector<Operator> fundaments;
  fundaments.reserve(program.operators.size());
  for (Bit u : program.operators)
    fundaments.push_back(Operator::from_bit(u));
  return FiniteChain::derive(program.s0, std::move(fundaments));
}

std::uint64_t bit_digest(const BitString& bits) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (Bit b : bits) {
    h ^= static_cast<std::uint8_t>(to_char(b));
    h *= 0x100000001b3ULL;
  }
  return h;
}

CompressionCertificate morphic_compress(const BitStream& s, std::size_t length) {
  const BitString source = s.materialize(length);
  CompressionCertificate cert;
  cert.program = string_to_chain(BitStream::finite(source), length);
  cert.reproduced_prefix_length = length;

  const BitString reproduced = chain_to_string(cert.program).materialize(length);
  if (reproduced != source)
    throw verification_failure("pi automaton did not reproduce the source prefix");
  cert.digest = bit_digest(reproduced);
  return cert;
}

BitStream decompress(const CompressionCertificate& cert) {
  if (cert.program.length() < cert.reproduced_prefix_length)
    throw mismatch_error("program is shorter than the certified prefix");
  const BitStream out = apply_pi(cert.rule, cert.program.s0, BitStream::finite(cert.program.operators),
                                 cert.reproduced_prefix_length);
  if (bit_digest(out.materialize(out.horizon())) != cert.digest)
    throw mismatch_error("digest does not match the reproduced prefix");
  return out;
}

std::string to_record(const CompressionCertificate& cert) {
  std::string out;
  out += "version=" + std::to_string(record_version) + "\n";
  out += "rule=" + cert.rule.bits() + "\n";
  out += "s0=" + std::string(1, to_char(cert.program.s0)) + "\n";
  out += "operators=" + to_string(cert.program.operators) + "\n";
  out += "prefix_length=" + std::to_string(cert.reproduced_prefix_length) + "\n";
  out += "digest=fnv1a64:" + hex64(cert.digest) + "\n";
  return out;
}

CompressionCertificate parse_certificate(std::string_view text) {
  std::map<std::string, std::string, std::less<>> fields;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    if (!line.empty() && line.back() == '\r')
      line.remove_suffix(1);
    if (line.empty() || line.front() == '#')
      continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos)
      throw parse_error("certificate line without '=': " + std::string(line));
    fields[std::string(line.substr(0, eq))] = std::string(line.substr(eq + 1));
  }
  auto field = [&](const char* key) -> const std::string& {
    const auto it = fields.find(key);
    if (it == fields.end())
      throw parse_error(std::string("certificate is missing '") + key + "'");
    return it->second;
  };

  if (parse_number<int>(field("version"), 10, "version") != record_version)
    throw parse_error("unsupported certificate version " + field("version"));
  CompressionCertificate cert;
  cert.rule = parse_rule(field("rule"));
  const BitString s0 = parse_bits(field("s0"));
  if (s0.size() != 1)
    throw parse_error("s0 must be a single bit");
  cert.program.s0 = s0.front();
  cert.program.operators = parse_bits(field("operators"));
  cert.reproduced_prefix_length =
      parse_number<std::size_t>(field("prefix_length"), 10, "prefix_length");
  const std::string& digest = field("digest");
  constexpr std::string_view tag = "fnv1a64:";
  if (digest.rfind(tag, 0) != 0)
    throw parse_error("digest must be tagged fnv1a64:");
  cert.digest = parse_number<std::uint64_t>(std::string_view(digest).substr(tag.size()), 16, "digest");
  return cert;
}

} // namespace c2
