#include "niltrans/permutation.hpp"

#include <numeric>

#include "niltrans/errors.hpp"

namespace niltrans {

std::vector<int> identity_permutation(int degree) {
  std::vector<int> p(static_cast<std::size_t>(degree));
  std::iota(p.begin(), p.end(), 0);
  return p;
}

std::vector<int> compose_permutations(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = b[static_cast<std::size_t>(a[i])];
  return r;
}

std::vector<int> parse_cycles(int degree, std::string_view text) {
  auto perm = identity_permutation(degree);
  std::vector<char> used(static_cast<std::size_t>(degree), 0);
  std::size_t i = 0;
  const auto err = [&](const std::string& what) -> ParseError {
    return ParseError(what, i + 1);
  };
  const auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  };

  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') throw err("expected '('");
    ++i;
    std::vector<int> cycle;
    skip_ws();
    while (i < text.size() && text[i] != ')') {
      if (text[i] < '0' || text[i] > '9') throw err("expected point or ')'");
      long v = 0;
      while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
        v = v * 10 + (text[i] - '0');
        if (v > degree) throw err("point exceeds degree");
        ++i;
      }
      if (v < 1) throw err("points are 1-based");
      if (used[static_cast<std::size_t>(v - 1)]) throw err("repeated point");
      used[static_cast<std::size_t>(v - 1)] = 1;
      cycle.push_back(static_cast<int>(v - 1));
      skip_ws();
      if (i < text.size() && text[i] == ',') {
        ++i;
        skip_ws();
      }
    }
    if (i >= text.size()) throw err("unterminated cycle");
    ++i;  // ')'
    for (std::size_t j = 0; j < cycle.size(); ++j)
      perm[static_cast<std::size_t>(cycle[j])] = cycle[(j + 1) % cycle.size()];
    skip_ws();
  }
  return perm;
}

std::string cycle_string(const std::vector<int>& perm) {
  std::string out;
  std::vector<char> seen(perm.size(), 0);
  for (std::size_t start = 0; start < perm.size(); ++start) {
    if (seen[start] || perm[start] == static_cast<int>(start)) continue;
    out += '(';
    std::size_t p = start;
    bool first = true;
    while (!seen[p]) {
      seen[p] = 1;
      if (!first) out += ' ';
      out += std::to_string(p + 1);
      first = false;
      p = static_cast<std::size_t>(perm[p]);
    }
    out += ')';
  }
  if (out.empty()) out = "()";
  return out;
}

}  // namespace niltrans
