#pragma once

// Instance documents: {"jumps": [...], "mines": [...]}. Entries are JSON
// integers or strings holding a decimal integer or a rational "p/q".
// Rationals are only meaningful for the positive-jump algorithm.

#include <string>
#include <vector>

#include "grasshopper/olympiad.hpp"
#include "grasshopper/route.hpp"

namespace grasshopper::cli {

struct InstanceDocument {
  std::vector<Rational> jumps;
  std::vector<Rational> mines;
};

/// Throws InputError on malformed JSON, missing fields or bad numbers.
InstanceDocument parse_instance_document(const std::string& text);

bool all_integral(const InstanceDocument& doc);

/// Integer instance for the signed-jump search; throws InputError if any
/// value is not an integer representable in 64 bits.
Instance to_integer_instance(const InstanceDocument& doc);

PositiveInstance to_positive_instance(const InstanceDocument& doc);

}  // namespace grasshopper::cli
