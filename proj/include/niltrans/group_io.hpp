#pragma once

#include <iosfwd>
#include <string>

#include "niltrans/finite_group.hpp"

namespace niltrans {

// Cayley format:       optional `name ...` line, `order n`, then n rows of
//                      n space-separated indices.
// Permutation format:  optional `name ...` line, `degree d`, then one
//                      generator per line in cycle notation `(1 2 3)(4 5)`.
// The leading keyword selects the format. ParseError carries line/column.
FiniteGroup parse_group_stream(std::istream& in, std::size_t order_cap = kDefaultOrderCap);
FiniteGroup parse_group_file(const std::string& path, std::size_t order_cap = kDefaultOrderCap);

// `family:...` builds a family; `-` reads stdin; anything else is a path.
FiniteGroup load_group(const std::string& arg, std::size_t order_cap = kDefaultOrderCap);

}  // namespace niltrans
