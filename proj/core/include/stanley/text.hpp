#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "stanley/ideal.hpp"

namespace stanley {

struct ParseOptions {
  // Overrides both the `ring <n>` header and the inferred variable count.
  std::optional<int> nvars;
  int exponent_cap = kDefaultExponentCap;
};

/// Parses `[ring <n> [;|:]] term, term, ...` where a term is `1` or a
/// `*`-separated product of `x<i>` / `x<i>^<e>` factors. The body `0` is the
/// zero ideal. Whitespace between tokens is ignored.
///
/// Throws ParseError (with byte offset) on malformed input and
/// ExponentCapError when an exponent exceeds the cap.
MonomialIdeal parse_ideal(std::string_view text, const ParseOptions& options = {});

}  // namespace stanley
