#include "grasshopper/bigint.hpp"

#include <cctype>

#include "grasshopper/errors.hpp"

namespace grasshopper {
namespace {

bool is_integer_literal(const std::string& text) {
  std::size_t start = (!text.empty() && (text[0] == '-' || text[0] == '+')) ? 1 : 0;
  if (start == text.size()) return false;
  for (std::size_t i = start; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
  }
  return true;
}

}  // namespace

BigInt parse_bigint(const std::string& text) {
  if (!is_integer_literal(text)) throw InputError("not an integer: '" + text + "'");
  // GMP rejects a leading '+'.
  return BigInt(text[0] == '+' ? text.substr(1) : text, 10);
}

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_bigint(text));
  BigInt num = parse_bigint(text.substr(0, slash));
  std::string den_text = text.substr(slash + 1);
  if (den_text.empty() || den_text[0] == '-' || den_text[0] == '+') {
    throw InputError("bad denominator in '" + text + "'");
  }
  BigInt den = parse_bigint(den_text);
  if (den == 0) throw InputError("zero denominator in '" + text + "'");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_decimal(const BigInt& value) { return value.get_str(10); }

std::string to_string(const Rational& value) { return value.get_str(10); }

std::string to_scientific(const BigInt& value, int significant) {
  if (significant < 1) significant = 1;
  if (value == 0) return "0e0";
  std::string sign = value < 0 ? "-" : "";
  BigInt magnitude = abs(value);
  std::string digits = magnitude.get_str(10);
  long exponent = static_cast<long>(digits.size()) - 1;

  std::string mantissa;
  if (static_cast<int>(digits.size()) <= significant) {
    mantissa = digits + std::string(significant - digits.size(), '0');
  } else {
    BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits.size() - significant);
    BigInt head = magnitude / scale;
    BigInt rest = magnitude % scale;
    if (2 * rest >= scale) head += 1;
    mantissa = head.get_str(10);
    if (static_cast<int>(mantissa.size()) > significant) {  // 9.9995 -> 10.00
      mantissa.pop_back();
      ++exponent;
    }
  }
  std::string out = sign + mantissa.substr(0, 1);
  if (significant > 1) out += "." + mantissa.substr(1);
  return out + "e" + std::to_string(exponent);
}

}  // namespace grasshopper
