#include "matro/rational.hpp"

#include <cctype>

#include "matro/errors.hpp"

namespace matro {

namespace {

bool parse_integer(std::string_view text, BigInt& out) {
  if (text.empty()) return false;
  std::size_t pos = 0;
  bool negative = false;
  if (text[0] == '+' || text[0] == '-') {
    negative = text[0] == '-';
    pos = 1;
  }
  if (pos == text.size()) return false;
  BigInt value = 0;
  for (; pos < text.size(); ++pos) {
    if (!std::isdigit(static_cast<unsigned char>(text[pos]))) return false;
    value = value * 10 + (text[pos] - '0');
  }
  out = negative ? -value : value;
  return true;
}

}  // namespace

Rat parse_rational(std::string_view text) {
  auto bad = [&]() -> Rat {
    fail(Errc::RationalParseError,
         "cannot parse rational '" + std::string(text) +
             "': expected an integer or 'p/q' with nonzero q");
  };
  std::size_t slash = text.find('/');
  BigInt num, den;
  if (slash == std::string_view::npos) {
    if (!parse_integer(text, num)) return bad();
    return Rat(num);
  }
  if (!parse_integer(text.substr(0, slash), num) ||
      !parse_integer(text.substr(slash + 1), den) || den == 0) {
    return bad();
  }
  if (den < 0) {  // canonical form keeps the sign in the numerator
    num = -num;
    den = -den;
  }
  return Rat(num, den);
}

std::string format_rational(const Rat& value) {
  std::string out = numerator(value).str();
  if (denominator(value) != 1) {
    out += "/";
    out += denominator(value).str();
  }
  return out;
}

WeightVector parse_weights(std::string_view text) {
  WeightVector weights;
  std::size_t start = 0;
  if (text.empty()) {
    fail(Errc::RationalParseError, "empty weight list");
  }
  while (true) {
    std::size_t comma = text.find(',', start);
    std::string_view token = comma == std::string_view::npos
                                 ? text.substr(start)
                                 : text.substr(start, comma - start);
    // tolerate surrounding blanks
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    weights.push_back(parse_rational(token));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return weights;
}

}  // namespace matro
