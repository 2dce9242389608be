#include "bicirc/bicirculant.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "bicirc/aut.hpp"
#include "bicirc/blocks.hpp"
#include "bicirc/errors.hpp"

namespace bicirc {

namespace {

int mod(int x, int n) {
  int r = x % n;
  return r < 0 ? r + n : r;
}

// Inverse of a mod n for gcd(a, n) = 1, by extended Euclid.
int mod_inverse(int a, int n) {
  int old_r = a, r = n, old_s = 1, s = 0;
  while (r != 0) {
    int q = old_r / r;
    old_r = std::exchange(r, old_r - q * r);
    old_s = std::exchange(s, old_s - q * s);
  }
  return mod(old_s, n);
}

int half_norm(int x, int n) {
  x = mod(x, n);
  return std::min(x, n - x);
}

// Lexicographically least translate of X: only translations moving some
// element to 0 can win, since any set containing 0 precedes any set without.
std::vector<int> least_translate(const std::vector<int>& x, int n) {
  std::vector<int> best, cand(x.size());
  for (int t : x) {
    for (std::size_t i = 0; i < x.size(); ++i) cand[i] = mod(x[i] - t, n);
    std::sort(cand.begin(), cand.end());
    if (best.empty() || cand < best) best = cand;
  }
  return best;
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

Graph complete(int m) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) edges.emplace_back(i, j);
  return Graph(m, edges);
}

Graph generalized_petersen(int n, int k) {
  if (n < 3 || k < 1 || 2 * k >= n)
    throw std::invalid_argument("GP(n,k) needs n >= 3 and 1 <= k < n/2");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) {
    edges.emplace_back(i, (i + 1) % n);
    edges.emplace_back(i, n + i);
    edges.emplace_back(n + i, n + (i + k) % n);
  }
  return Graph(2 * n, edges);
}

// Q4 plus the diagonals: neighbours differ in one coordinate or in all four.
Graph clebsch() {
  std::vector<std::pair<int, int>> edges;
  for (int a = 0; a < 16; ++a)
    for (int b = a + 1; b < 16; ++b) {
      int x = a ^ b;
      if ((x & (x - 1)) == 0 || x == 15) edges.emplace_back(a, b);
    }
  return Graph(16, edges);
}

// Vertices (i, j) as 4i + j; adjacent iff equal row or equal column.
Graph lattice_l2_4() {
  std::vector<std::pair<int, int>> edges;
  for (int a = 0; a < 16; ++a)
    for (int b = a + 1; b < 16; ++b)
      if (a / 4 == b / 4 || a % 4 == b % 4) edges.emplace_back(a, b);
  return Graph(16, edges);
}

}  // namespace

void validate_symbol(const BicirculantSymbol& sym) {
  if (sym.n < 3) throw std::invalid_argument("symbol: n must be at least 3");
  if (sym.spokes.empty()) throw std::invalid_argument("symbol: empty spoke set");
  if (static_cast<int>(sym.spokes.size()) > sym.n)
    throw std::invalid_argument("symbol: more spokes than residues");
  for (std::size_t i = 0; i < sym.spokes.size(); ++i) {
    if (sym.spokes[i] < 0 || sym.spokes[i] >= sym.n)
      throw std::invalid_argument("symbol: spoke out of range");
    if (i > 0 && sym.spokes[i - 1] >= sym.spokes[i])
      throw std::invalid_argument("symbol: spokes not strictly ascending");
  }
  if (sym.b < 1 || 2 * sym.b >= sym.n)
    throw std::invalid_argument("symbol: b must lie in 1..floor((n-1)/2)");
}

std::string to_string(const BicirculantSymbol& sym) {
  std::string out = "BC(" + std::to_string(sym.n) + "; " +
                    std::to_string(sym.b) + "; ";
  for (std::size_t i = 0; i < sym.spokes.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(sym.spokes[i]);
  }
  return out + ")";
}

BicirculantSymbol parse_symbol(const std::string& text) {
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && text[pos] == ' ') ++pos;
  };
  auto expect = [&](char c) {
    skip_ws();
    if (pos >= text.size() || text[pos] != c)
      throw ParseError(std::string("expected '") + c + "'", pos);
    ++pos;
  };
  auto read_int = [&] {
    skip_ws();
    int value = 0;
    auto [ptr, ec] =
        std::from_chars(text.data() + pos, text.data() + text.size(), value);
    if (ec != std::errc()) throw ParseError("expected an integer", pos);
    pos = ptr - text.data();
    return value;
  };

  skip_ws();
  if (text.compare(pos, 3, "BC(") != 0)
    throw ParseError("symbol must start with \"BC(\"", pos);
  pos += 3;
  BicirculantSymbol sym;
  sym.n = read_int();
  expect(';');
  sym.b = read_int();
  expect(';');
  sym.spokes.push_back(read_int());
  for (skip_ws(); pos < text.size() && text[pos] == ','; skip_ws()) {
    ++pos;
    sym.spokes.push_back(read_int());
  }
  expect(')');
  skip_ws();
  if (pos != text.size()) throw ParseError("trailing input", pos);
  try {
    validate_symbol(sym);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), 0);
  }
  return sym;
}

BuiltBicirculant build_bicirculant(const BicirculantSymbol& sym) {
  validate_symbol(sym);
  int n = sym.n;
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(n) * sym.valence() / 2);
  for (int i = 0; i < n; ++i) {
    edges.emplace_back(i, (i + 1) % n);
    edges.emplace_back(n + i, n + (i + sym.b) % n);
    for (int s : sym.spokes) edges.emplace_back(i, n + (i + s) % n);
  }
  std::vector<int> img(2 * n);
  for (int i = 0; i < n; ++i) {
    img[i] = (i + 1) % n;
    img[n + i] = n + (i + 1) % n;
  }
  return {Graph(2 * n, edges), Perm(std::move(img))};
}

BicirculantSymbol canonical_symbol(const BicirculantSymbol& sym) {
  validate_symbol(sym);
  int n = sym.n;
  BicirculantSymbol best = sym;
  best.spokes.clear();

  auto consider = [&](const std::vector<int>& scaled, int b) {
    std::vector<int> s = least_translate(scaled, n);
    if (best.spokes.empty() || std::tie(s, b) < std::tie(best.spokes, best.b))
      best.spokes = std::move(s), best.b = b;
  };

  std::vector<int> scaled(sym.spokes.size());
  for (int eps : {1, -1}) {
    for (std::size_t i = 0; i < sym.spokes.size(); ++i)
      scaled[i] = mod(eps * sym.spokes[i], n);
    consider(scaled, sym.b);
  }
  if (std::gcd(sym.b, n) == 1) {
    int binv = mod_inverse(sym.b, n);
    for (int eps : {1, -1}) {
      for (std::size_t i = 0; i < sym.spokes.size(); ++i)
        scaled[i] = mod(eps * binv * sym.spokes[i], n);
      consider(scaled, half_norm(binv, n));
    }
  }
  return best;
}

static std::vector<BicirculantSymbol> enumerate_common(int n, int d, int b_lo,
                                                       int b_hi,
                                                       SymbolCount* count) {
  if (n < 3 || d < 3)
    throw std::invalid_argument("enumeration needs n >= 3 and d >= 3");
  SymbolCount local;
  std::vector<BicirculantSymbol> out;
  int k = d - 2;
  if (k <= n && b_lo <= b_hi) {
    local.raw = binomial(n, k) * (b_hi - b_lo + 1);
    // Canonical spoke sets contain 0: walk k-subsets {0} + (k-1 of 1..n-1).
    std::vector<int> s(k);
    std::iota(s.begin(), s.end(), 0);
    for (;;) {
      for (int b = b_lo; b <= b_hi; ++b) {
        BicirculantSymbol sym{n, s, b};
        if (canonical_symbol(sym) == sym) out.push_back(std::move(sym));
      }
      int i = k - 1;
      while (i >= 1 && s[i] == n - k + i) --i;
      if (i < 1) break;  // s[0] stays 0
      ++s[i];
      for (int j = i + 1; j < k; ++j) s[j] = s[j - 1] + 1;
    }
  }
  local.canonical = out.size();
  if (count) *count = local;
  return out;
}

std::vector<BicirculantSymbol> enumerate_symbols(int n, int d,
                                                 SymbolCount* count) {
  return enumerate_common(n, d, 1, (n - 1) / 2, count);
}

std::vector<BicirculantSymbol> enumerate_symbols_slice(int n, int d, int b,
                                                       SymbolCount* count) {
  if (b < 1 || 2 * b >= n)
    throw std::invalid_argument("slice b out of range");
  return enumerate_common(n, d, b, b, count);
}

FamilyCheck in_family_F(const Graph& g, int d, std::uint64_t element_cap) {
  int nv = g.vertex_count();
  if (nv < 6 || nv % 2 != 0) return {};
  for (int v = 0; v < nv; ++v)
    if (g.degree(v) != d) return {};

  Group aut = automorphism_group(g, {.element_cap = element_cap});
  BigOrder ord = aut.order_big();
  if (!ord.exact || !ord.fits_u64() || ord.as_u64() > element_cap)
    return {Outcome::undecided, std::nullopt};

  for (const Perm& p : aut.elements()) {
    OrbitPair pair;
    if (!semiregular_with_two_equal_orbits(p, &pair)) continue;
    for (std::vector<int>* o : {&pair.first, &pair.second}) {
      std::sort(o->begin(), o->end());
      if (is_cycle(induced_subgraph(g, *o)))
        return {Outcome::yes, FamilyWitness{p, std::move(*o)}};
    }
  }
  return {};
}

Graph named_graph(const std::string& name) {
  if (name == "petersen") return generalized_petersen(5, 2);
  if (name == "petersen_complement")
    return complement(generalized_petersen(5, 2));
  if (name == "clebsch") return clebsch();
  if (name == "lattice_L2_4") return lattice_l2_4();

  auto args = [&](const std::string& prefix) -> std::optional<std::vector<int>> {
    if (name.compare(0, prefix.size(), prefix) != 0 || name.back() != ')')
      return std::nullopt;
    std::vector<int> vals;
    const char* p = name.data() + prefix.size();
    const char* end = name.data() + name.size() - 1;
    for (;;) {
      int v = 0;
      auto [ptr, ec] = std::from_chars(p, end, v);
      if (ec != std::errc()) return std::nullopt;
      vals.push_back(v);
      if (ptr == end) return vals;
      if (*ptr != ',') return std::nullopt;
      p = ptr + 1;
    }
  };

  if (auto a = args("complete(")) {
    if (a->size() == 1 && (*a)[0] >= 1) return complete((*a)[0]);
  } else if (auto gp = args("GP(")) {
    if (gp->size() == 2) return generalized_petersen((*gp)[0], (*gp)[1]);
  }
  throw std::invalid_argument("named_graph: unknown name \"" + name + "\"");
}

Outcome primitive_case_check(const Graph& g, int d) {
  Group aut = automorphism_group(g);
  int nv = g.vertex_count();
  if (static_cast<int>(orbit(aut, 0).size()) != nv) return Outcome::yes;
  if (!is_primitive(aut)) return Outcome::yes;

  const std::pair<const char*, int> cases[] = {{"complete(6)", 5},
                                               {"petersen", 3},
                                               {"petersen_complement", 6},
                                               {"lattice_L2_4", 6}};
  for (auto [name, valence] : cases) {
    if (valence != d) continue;
    Graph target = named_graph(name);
    if (target.vertex_count() == nv && is_isomorphic(g, target))
      return Outcome::yes;
  }
  return Outcome::no;
}

}  // namespace bicirc
