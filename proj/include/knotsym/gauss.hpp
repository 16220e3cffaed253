#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "knotsym/symbol.hpp"

namespace knotsym {

enum class Pass { Over, Under };

struct GaussToken {
  Pass pass = Pass::Over;
  int crossing_id = 0;
  int sign = 0;

  friend bool operator==(const GaussToken&, const GaussToken&) = default;
};

/// An oriented signed Gauss code: the crossings met on one trip around the
/// diagram. Each crossing id appears exactly twice, once over and once
/// under, with one sign.
struct GaussCode {
  std::vector<GaussToken> tokens;
};

/// Parses whitespace-separated tokens "O<id><sign>" / "U<id><sign>",
/// e.g. "O1+ U2+ O3+ U1+ O2+ U3+". Case-insensitive pass letter.
GaussCode parse_gauss(std::string_view text);

/// Re-encodes a Gauss code as a symbol: the token at trip position k
/// contributes the label k, and each crossing becomes (position of its
/// over token, position of its under token) with the token sign.
Symbol from_gauss(const GaussCode& code);

}  // namespace knotsym
