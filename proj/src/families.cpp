#include "niltrans/families.hpp"

#include <cctype>

namespace niltrans {

namespace {

long long index2(int n, int a, int b) {
  return static_cast<long long>(a) * n + b;
}

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

FiniteGroup cyclic_group(int n, std::size_t order_cap) {
  if (n < 1) throw BadParamsError("cyclic(n) needs n >= 1");
  std::vector<int> flat(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) flat[index2(n, a, b)] = (a + b) % n;
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back(i == 0 ? "e" : "g^" + std::to_string(i));
  return make_group_from_flat_table(n, std::move(flat), "C" + std::to_string(n),
                                    std::move(labels), order_cap);
}

FiniteGroup dihedral_group(int n, std::size_t order_cap) {
  if (n < 1) throw BadParamsError("dihedral(n) needs n >= 1");
  const int order = 2 * n;
  std::vector<int> flat(static_cast<std::size_t>(order) * order);
  // index f*n+i = r^i s^f; (r^i s^f)(r^j s^g) = r^{i +- j} s^{f+g}.
  for (int f = 0; f < 2; ++f)
    for (int i = 0; i < n; ++i)
      for (int gg = 0; gg < 2; ++gg)
        for (int j = 0; j < n; ++j) {
          const int rot = ((f ? i - j : i + j) % n + n) % n;
          const int flip = (f + gg) % 2;
          flat[index2(order, f * n + i, gg * n + j)] = flip * n + rot;
        }
  std::vector<std::string> labels;
  for (int f = 0; f < 2; ++f)
    for (int i = 0; i < n; ++i) {
      std::string l = i == 0 ? (f ? "s" : "e") : "r^" + std::to_string(i) + (f ? " s" : "");
      if (i == 1) l = f ? "r s" : "r";
      labels.push_back(l);
    }
  return make_group_from_flat_table(order, std::move(flat), "D" + std::to_string(n),
                                    std::move(labels), order_cap);
}

FiniteGroup symmetric_group(int n, std::size_t order_cap) {
  if (n < 1 || n > 6) throw BadParamsError("symmetric(n) supports 1 <= n <= 6");
  std::vector<std::string> gens;
  if (n >= 2) {
    gens.push_back("(1 2)");
    std::string cycle = "(1";
    for (int i = 2; i <= n; ++i) cycle += " " + std::to_string(i);
    cycle += ")";
    if (n > 2) gens.push_back(cycle);
  }
  return FiniteGroup::from_permutation_generators(n, gens, "S" + std::to_string(n), order_cap);
}

FiniteGroup alternating_group(int n, std::size_t order_cap) {
  if (n < 1 || n > 6) throw BadParamsError("alternating(n) supports 1 <= n <= 6");
  std::vector<std::string> gens;
  for (int i = 1; i + 2 <= n; ++i)
    gens.push_back("(" + std::to_string(i) + " " + std::to_string(i + 1) + " " +
                   std::to_string(i + 2) + ")");
  return FiniteGroup::from_permutation_generators(std::max(n, 1), gens,
                                                  "A" + std::to_string(n), order_cap);
}

FiniteGroup quaternion8() {
  // 0..7 = 1, -1, i, -i, j, -j, k, -k; encode as (axis, sign).
  const auto enc = [](int axis, int sign) { return axis * 2 + (sign < 0 ? 1 : 0); };
  // Axis products: axis_table[a][b] = (axis, sign) of basis product.
  static const int axis_table[4][4][2] = {
      {{0, 1}, {1, 1}, {2, 1}, {3, 1}},
      {{1, 1}, {0, -1}, {3, 1}, {2, -1}},
      {{2, 1}, {3, -1}, {0, -1}, {1, 1}},
      {{3, 1}, {2, 1}, {1, -1}, {0, -1}},
  };
  std::vector<int> flat(64);
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      const int ax = a / 2, sx = a % 2 ? -1 : 1;
      const int bx = b / 2, sy = b % 2 ? -1 : 1;
      const int axis = axis_table[ax][bx][0];
      const int sign = axis_table[ax][bx][1] * sx * sy;
      flat[index2(8, a, b)] = enc(axis, sign);
    }
  std::vector<std::string> labels{"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
  return make_group_from_flat_table(8, std::move(flat), "Q8", std::move(labels));
}

FiniteGroup heisenberg_mod_p(int p, std::size_t order_cap) {
  if (!is_prime(p) || p > 7) throw BadParamsError("heisenberg(p) needs a prime p <= 7");
  const int n = p * p * p;
  const auto idx = [&](int a, int b, int c) { return (a * p + b) * p + c; };
  std::vector<int> flat(static_cast<std::size_t>(n) * n);
  // [[1,a,c],[0,1,b],[0,0,1]]: (a,b,c)(a',b',c') = (a+a', b+b', c+c'+a*b').
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < p; ++b)
      for (int c = 0; c < p; ++c)
        for (int a2 = 0; a2 < p; ++a2)
          for (int b2 = 0; b2 < p; ++b2)
            for (int c2 = 0; c2 < p; ++c2)
              flat[index2(n, idx(a, b, c), idx(a2, b2, c2))] =
                  idx((a + a2) % p, (b + b2) % p, (c + c2 + a * b2) % p);
  std::vector<std::string> labels;
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < p; ++b)
      for (int c = 0; c < p; ++c)
        labels.push_back("(" + std::to_string(a) + "," + std::to_string(b) + "," +
                         std::to_string(c) + ")");
  return make_group_from_flat_table(n, std::move(flat), "Heis(" + std::to_string(p) + ")",
                                    std::move(labels), order_cap);
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b, std::size_t order_cap) {
  const long long order = static_cast<long long>(a.order()) * b.order();
  if (order > static_cast<long long>(order_cap))
    throw OrderLimitError(static_cast<std::size_t>(order), order_cap);
  const int n = static_cast<int>(order);
  std::vector<int> flat(static_cast<std::size_t>(n) * n);
  const auto idx = [&](int ga, int gb) { return ga * b.order() + gb; };
  for (int xa = 0; xa < a.order(); ++xa)
    for (int xb = 0; xb < b.order(); ++xb)
      for (int ya = 0; ya < a.order(); ++ya)
        for (int yb = 0; yb < b.order(); ++yb)
          flat[index2(n, idx(xa, xb), idx(ya, yb))] = idx(a.mul(xa, ya), b.mul(xb, yb));
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(n));
  for (int xa = 0; xa < a.order(); ++xa)
    for (int xb = 0; xb < b.order(); ++xb)
      labels.push_back("(" + a.label(xa) + "," + b.label(xb) + ")");
  return make_group_from_flat_table(n, std::move(flat), a.name() + " x " + b.name(),
                                    std::move(labels), order_cap);
}

FiniteGroup semidirect_zp_on_zq(int p, int q, std::size_t order_cap) {
  if (!is_prime(p) || !is_prime(q)) throw BadParamsError("semidirect(p,q) needs primes");
  if ((q - 1) % p != 0) throw BadParamsError("semidirect(p,q) needs q = 1 mod p");
  // Least t of multiplicative order exactly p mod q.
  int t = 0;
  for (int cand = 2; cand < q; ++cand) {
    long long pow = cand;
    int ord = 1;
    while (pow != 1) {
      pow = pow * cand % q;
      ++ord;
    }
    if (ord == p) {
      t = cand;
      break;
    }
  }
  if (t == 0) throw BadParamsError("no element of order p mod q");

  const int n = p * q;
  // Element x^a y^b with x^p = y^q = 1, x^{-1} y x = y^t:
  // (x^a y^b)(x^c y^d) = x^{a+c} y^{b t^c + d}.
  std::vector<long long> tpow(static_cast<std::size_t>(p), 1);
  for (int i = 1; i < p; ++i) tpow[static_cast<std::size_t>(i)] = tpow[i - 1] * t % q;
  std::vector<int> flat(static_cast<std::size_t>(n) * n);
  const auto idx = [&](int a, int b) { return a * q + b; };
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < q; ++b)
      for (int c = 0; c < p; ++c)
        for (int d = 0; d < q; ++d)
          flat[index2(n, idx(a, b), idx(c, d))] =
              idx((a + c) % p, static_cast<int>((b * tpow[static_cast<std::size_t>(c)] + d) % q));
  std::vector<std::string> labels;
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < q; ++b)
      labels.push_back(a == 0 && b == 0
                           ? "e"
                           : "x^" + std::to_string(a) + " y^" + std::to_string(b));
  return make_group_from_flat_table(n, std::move(flat),
                                    "C" + std::to_string(q) + ":C" + std::to_string(p),
                                    std::move(labels), order_cap);
}

namespace {

// Recursive-descent parser for family specs.
struct SpecParser {
  std::string_view text;
  std::size_t pos = 0;
  std::size_t order_cap;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  [[noreturn]] void fail(const std::string& what) { throw BadParamsError(what + " in family spec '" + std::string(text) + "'"); }

  std::string ident() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
      ++pos;
    if (start == pos) fail("expected family name");
    return std::string(text.substr(start, pos - start));
  }

  int integer() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) fail("expected integer");
    return std::stoi(std::string(text.substr(start, pos - start)));
  }

  bool accept(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  FiniteGroup group() {
    const std::string name = ident();
    if (name == "quaternion8" || name == "q8") return quaternion8();
    expect('(');
    FiniteGroup result = [&]() -> FiniteGroup {
      if (name == "cyclic") return cyclic_group(integer(), order_cap);
      if (name == "dihedral") return dihedral_group(integer(), order_cap);
      if (name == "symmetric") return symmetric_group(integer(), order_cap);
      if (name == "alternating") return alternating_group(integer(), order_cap);
      if (name == "heisenberg" || name == "heisenberg_mod_p")
        return heisenberg_mod_p(integer(), order_cap);
      if (name == "semidirect" || name == "semidirect_z_p_on_z_q") {
        const int p = integer();
        expect(',');
        const int q = integer();
        return semidirect_zp_on_zq(p, q, order_cap);
      }
      if (name == "direct_product") {
        FiniteGroup a = group();
        expect(',');
        FiniteGroup b = group();
        return direct_product(a, b, order_cap);
      }
      fail("unknown family '" + name + "'");
    }();
    expect(')');
    return result;
  }
};

}  // namespace

FiniteGroup build_family(const std::string& spec, std::size_t order_cap) {
  SpecParser p{spec, 0, order_cap};
  FiniteGroup g = p.group();
  p.skip_ws();
  if (p.pos != spec.size()) p.fail("trailing input");
  return g;
}

}  // namespace niltrans
