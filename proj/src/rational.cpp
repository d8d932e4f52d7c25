#include "fpmine/rational.hpp"

#include <cctype>
#include <cstdlib>

namespace fpmine {

Ratio Ratio::parse_decimal(std::string_view text) {
  const auto fail = [&] {
    throw std::invalid_argument("not a decimal number: '" + std::string(text) + "'");
  };

  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    negative = text[pos] == '-';
    ++pos;
  }

  std::int64_t num = 0;
  std::int64_t den = 1;
  std::size_t digits = 0;
  bool seen_point = false;
  for (; pos < text.size(); ++pos) {
    const char c = text[pos];
    if (c == '.') {
      if (seen_point) fail();
      seen_point = true;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(c))) fail();
    if (++digits > 15) fail();  // keeps num/den far from int64 limits
    num = num * 10 + (c - '0');
    if (seen_point) den *= 10;
  }
  if (digits == 0) fail();
  return Ratio(negative ? -num : num, den);
}

std::string to_decimal_string(const Ratio& value) {
  std::int64_t p = value.num();
  const std::int64_t q = value.den();
  std::string out;
  if (p < 0) {
    out += '-';
    p = -p;
  }
  out += std::to_string(p / q);
  std::int64_t rem = p % q;
  if (rem == 0) return out;
  out += '.';
  for (int i = 0; i < 18 && rem != 0; ++i) {
    rem *= 10;
    out += static_cast<char>('0' + rem / q);
    rem %= q;
  }
  if (rem != 0) throw std::domain_error("to_decimal_string: fraction does not terminate");
  return out;
}

std::string to_scheme_decimal(const Ratio& value) {
  std::string out = to_decimal_string(value);
  if (out.find('.') == std::string::npos) out += ".0";
  return out;
}

}  // namespace fpmine
