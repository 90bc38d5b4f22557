#pragma once

#include <string_view>
#include <vector>

#include "charp/multipoly.hpp"

namespace charp {

// Grammar (whitespace ignored, no implicit multiplication):
//   expr   := term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := base ('^' natural)?
//   base   := natural | variable | '(' expr ')' | '-' factor
// Integer literals are reduced mod p. Throws ParseError with the offending
// position, including for unknown variable names.
MultiPoly parse(std::string_view text, const RingPtr& ring);

// Parses each string independently.
std::vector<MultiPoly> parse_all(const std::vector<std::string>& texts, const RingPtr& ring);

}  // namespace charp
