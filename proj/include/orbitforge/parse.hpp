#pragma once

#include "orbitforge/mpoly.hpp"

#include <map>
#include <string>
#include <string_view>

namespace orbitforge {

/// Reads an arithmetic expression over the ring's variables: integers, + - * /
/// ^ (non-negative integer exponents) and parentheses. Names found in
/// `bindings` are replaced by their value. Division is only allowed by
/// constants. Throws std::invalid_argument on malformed input.
MPoly parse_poly(const RingPtr& ring, std::string_view text, const std::map<std::string, Rat>& bindings = {});

}  // namespace orbitforge
