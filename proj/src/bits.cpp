#include <c2/bits.hpp>
#include <c2/errors.hpp>

namespace c2 {

BitString parse_bits(std::string_view text) {
  BitString bits;
  bits.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c != '0' && c != '1')
      throw parse_error("invalid bit character '" + std::string(1, c) + "' at position " +
                        std::to_string(i));
    bits.push_back(to_bit(c == '1'));
  }
  return bits;
}

std::string to_string(const BitString& bits) {
  std::string out(bits.size(), '0');
  for (std::size_t i = 0; i < bits.size(); ++i)
    out[i] = to_char(bits[i]);
  return out;
}

} // namespace c2
