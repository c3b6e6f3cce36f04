#include "orbitforge/rat.hpp"

#include <cctype>
#include <stdexcept>

namespace orbitforge {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

BigInt parse_int(std::string_view s) {
  if (!is_integer_literal(s)) {
    throw std::invalid_argument("malformed integer '" + std::string(s) + "'");
  }
  std::string digits(s[0] == '+' ? s.substr(1) : s);
  return BigInt(digits, 10);
}

}  // namespace

Rat parse_rat(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw std::invalid_argument("empty rational");

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    BigInt num = parse_int(text.substr(0, slash));
    BigInt den = parse_int(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    Rat r(num, den);
    r.canonicalize();
    return r;
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    bool negative = !whole.empty() && whole[0] == '-';
    if (whole.empty() || whole == "-" || whole == "+") whole = "0";
    if (frac.empty() || !is_integer_literal(frac) || frac[0] == '-' || frac[0] == '+') {
      throw std::invalid_argument("malformed decimal '" + std::string(text) + "'");
    }
    BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    BigInt w = parse_int(whole);
    if (w < 0) w = -w;
    BigInt num = w * scale + parse_int(frac);
    Rat r(negative ? BigInt(-num) : num, scale);
    r.canonicalize();
    return r;
  }
  return Rat(parse_int(text));
}

std::string to_string(const Rat& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string to_short_string(const Rat& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return to_string(value);
}

}  // namespace orbitforge
