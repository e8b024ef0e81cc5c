#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace niltrans {

// Permutations are image vectors on 0-based points; cycle notation in text
// uses 1-based points. Composition is left-to-right: (a*b)(p) = b[a[p]].

std::vector<int> identity_permutation(int degree);
std::vector<int> compose_permutations(const std::vector<int>& a, const std::vector<int>& b);

// Parses "(1 2 3)(4 5)"; "()" or an all-whitespace string is the identity.
// Points must be distinct, in 1..degree. Throws ParseError with the column.
std::vector<int> parse_cycles(int degree, std::string_view text);

// Cycle notation for display; "()" for the identity.
std::string cycle_string(const std::vector<int>& perm);

}  // namespace niltrans
