#include "grasshopper/cli/instance_io.hpp"

#include <algorithm>

#include <json.hpp>

#include "grasshopper/errors.hpp"

namespace grasshopper::cli {
namespace {

using nlohmann::json;

Rational read_number(const json& value, const char* field) {
  if (value.is_number_integer()) {
    if (value.is_number_unsigned()) {
      return Rational(BigInt(std::to_string(value.get<std::uint64_t>())));
    }
    return Rational(BigInt(std::to_string(value.get<std::int64_t>())));
  }
  if (value.is_string()) return parse_rational(value.get<std::string>());
  throw InputError(std::string("'") + field + "' entries must be integers or \"p/q\" strings, got " +
                   value.dump());
}

std::vector<Rational> read_array(const json& doc, const char* field) {
  if (!doc.contains(field)) throw InputError(std::string("instance is missing '") + field + "'");
  const json& array = doc.at(field);
  if (!array.is_array()) throw InputError(std::string("'") + field + "' must be an array");
  std::vector<Rational> out;
  for (const auto& value : array) out.push_back(read_number(value, field));
  return out;
}

std::int64_t to_int64(const Rational& q) {
  if (q.get_den() != 1) throw InputError("non-integer value " + to_string(q));
  const BigInt& z = q.get_num();
  if (!z.fits_slong_p()) throw InputError("integer out of 64-bit range: " + to_decimal(z));
  return z.get_si();
}

}  // namespace

InstanceDocument parse_instance_document(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed instance document: ") + e.what());
  }
  if (!doc.is_object()) throw InputError("instance document must be a JSON object");
  return InstanceDocument{read_array(doc, "jumps"), read_array(doc, "mines")};
}

bool all_integral(const InstanceDocument& doc) {
  auto integral = [](const Rational& q) { return q.get_den() == 1; };
  return std::all_of(doc.jumps.begin(), doc.jumps.end(), integral) &&
         std::all_of(doc.mines.begin(), doc.mines.end(), integral);
}

Instance to_integer_instance(const InstanceDocument& doc) {
  std::vector<std::int64_t> jumps;
  std::vector<std::int64_t> mines;
  for (const auto& q : doc.jumps) jumps.push_back(to_int64(q));
  for (const auto& q : doc.mines) mines.push_back(to_int64(q));
  return Instance{JumpMultiset(std::move(jumps)), MineField(std::move(mines))};
}

PositiveInstance to_positive_instance(const InstanceDocument& doc) {
  return PositiveInstance(doc.jumps, doc.mines);
}

}  // namespace grasshopper::cli
