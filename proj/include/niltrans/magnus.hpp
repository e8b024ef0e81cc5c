#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace niltrans {

using BigInt = boost::multiprecision::cpp_int;

// A freely reduced word in generators x1, x2, ...; letters are +g / -g with
// g >= 1. The empty word is the identity.
struct FreeWord {
  std::vector<int> letters;

  bool empty() const { return letters.empty(); }
  int max_generator() const;
};

// Removes adjacent cancelling pairs until none remain.
FreeWord reduce(FreeWord w);
FreeWord concat(const FreeWord& u, const FreeWord& v);  // reduced product
FreeWord inverse(const FreeWord& w);
FreeWord word_power(const FreeWord& w, long long n);

// Grammar:  word := term+ ; term := primary ('^' int)? ;
//           primary := gen | '[' word (',' word)+ ']' | '(' word ')'
//           gen := 'x' digits
// '[u,v]' = u^{-1}v^{-1}uv, '[u,v,w]' = '[[u,v],w]'. Result is freely reduced.
FreeWord parse_word(std::string_view text);

std::string word_to_string(const FreeWord& w);

// Noncommutative polynomial over arbitrary-precision integers in `rank`
// letters, truncated at total degree `degree`. Monomials are ordered by
// length, then lexicographically; zero coefficients are never stored.
class TruncatedSeries {
public:
  using Monomial = std::vector<std::uint8_t>;

  TruncatedSeries(int rank, int degree);
  static TruncatedSeries one(int rank, int degree);
  // 1 + X_g for sign +1; 1 - X_g + X_g^2 - ... +- X_g^degree for sign -1.
  static TruncatedSeries generator(int rank, int degree, int g, int sign);

  int rank() const { return rank_; }
  int degree() const { return degree_; }

  TruncatedSeries operator*(const TruncatedSeries& o) const;
  bool is_one() const;
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b);

  const std::map<Monomial, BigInt>& coefficients() const { return coeffs_; }
  std::string to_string() const;  // canonical, e.g. "1 + X1*X2 - X2*X1"

private:
  int rank_;
  int degree_;
  std::map<Monomial, BigInt> coeffs_;  // len-lex keys by std::vector order
};

// Product over the letters of (1 + X_i) resp. the truncated inverse series.
TruncatedSeries magnus_image(const FreeWord& w, int m, int k);

// w = 1 in the free nilpotent group of rank m and class k (equivalently,
// w lies in gamma_{k+1} of the free group).
bool is_identity_nmk(const FreeWord& w, int m, int k);
bool equal_nmk(const FreeWord& u, const FreeWord& v, int m, int k);

// Canonical coordinates in the free class-2 group of rank m:
// w = x1^{e_1} ... xm^{e_m} * prod_{i<j} [x_j,x_i]^{c_{ji}}.
struct Class2Coordinates {
  int rank = 0;
  std::vector<long long> exponents;                      // e_1..e_m
  std::map<std::pair<int, int>, long long> commutators;  // (j,i) with j > i

  bool is_identity() const;
  friend bool operator==(const Class2Coordinates& a, const Class2Coordinates& b) = default;
};

// Naive collection: swap adjacent letters via yx = xy*[y,x] with [y,x]
// central; each swap lowers the inversion count, so it terminates.
Class2Coordinates collect_class2(const FreeWord& w, int m);

// The canonical word x1^{e1}...xm^{em} [x2,x1]^{c21}... for the coordinates.
FreeWord class2_canonical_word(const Class2Coordinates& c);

std::string class2_to_string(const Class2Coordinates& c);

}  // namespace niltrans
