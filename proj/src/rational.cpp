#include "fo/rational.hpp"

#include <cctype>

#include "fo/errors.hpp"

namespace fo {
namespace {

bool is_integer_literal(std::string_view text) {
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    text.remove_prefix(1);
  }
  if (text.empty()) return false;
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

Integer parse_integer(std::string_view text, std::string_view whole) {
  if (!is_integer_literal(text)) {
    throw ParseError("malformed rational \"" + std::string(whole) + "\"");
  }
  if (text.front() == '+') text.remove_prefix(1);
  return Integer(std::string(text));
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(parse_integer(text, text));
  }
  Integer num = parse_integer(text.substr(0, slash), text);
  std::string_view den_text = text.substr(slash + 1);
  if (!den_text.empty() && den_text.front() == '-') {
    throw ParseError("malformed rational \"" + std::string(text) + "\"");
  }
  Integer den = parse_integer(den_text, text);
  if (den == 0) {
    throw ParseError("zero denominator in \"" + std::string(text) + "\"");
  }
  return Rational(num, den);
}

std::string to_string(const Rational& value) { return value.str(); }

}  // namespace fo
