#pragma once

#include <string_view>

#include "periodkit/bipoly.hpp"
#include "periodkit/unipoly.hpp"

namespace periodkit {

/// Parses sums of terms like `3/4 * x^2 * z`, `-2x^3`, `(x+1)^2`. Whitespace is
/// insignificant; juxtaposition means multiplication. Only the two label
/// letters are accepted as variables.
BiPoly parse_bipoly(std::string_view text, std::pair<char, char> labels = {'x', 'z'}, int line = 1);

/// Univariate version. With var = 0 the first letter seen becomes the variable.
UniPoly parse_unipoly(std::string_view text, char var = 0, int line = 1);

}  // namespace periodkit
