#include "bicirc/circulant.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <tuple>
#include <utility>

#include "bicirc/aut.hpp"
#include "bicirc/blocks.hpp"
#include "bicirc/group.hpp"
#include "bicirc/perm.hpp"

namespace bicirc {

namespace {

Perm rotation(int n, int amount) {
  std::vector<int> im(n);
  for (int x = 0; x < n; ++x) im[x] = (x + amount) % n;
  return Perm(std::move(im));
}

// The rotations form one cyclic group C, so C^g subseteq C already forces
// C^g = C, and conjugating a single generator of C decides the inclusion.
// Only the generators of a are touched.
bool rotations_normal(int n, const Group& a) {
  Perm rho = rotation(n, 1);
  for (const Perm& gen : a.generators()) {
    Perm q = conjugate(rho, gen);
    int c = q[0];
    for (int x = 0; x < n; ++x)
      if (q[x] != (x + c) % n) return false;
  }
  return true;
}

// The unique subgroup of Z_n with k elements: multiples of n/k, sorted.
std::vector<int> subgroup_of_order(int n, int k) {
  std::vector<int> d(k);
  for (int i = 0; i < k; ++i) d[i] = i * (n / k);
  return d;
}

// Every block of aut through 0 is also a block of the regular rotation
// action, hence a subgroup, so the minimal block containing {0, n/k}
// contains the whole subgroup of order k. It equals that subgroup exactly
// when the subgroup is a block.
bool subgroup_is_block(const Group& aut, int n, int k) {
  return minimal_block(aut, {0, n / k}) == subgroup_of_order(n, k);
}

bool quotient_is_arc_transitive(const CirculantSymbol& q) {
  if (!circulant_connected(q)) return false;
  Graph g = circulant(q);
  Group a = automorphism_group(g);
  return is_arc_transitive(g, a);
}

ClassificationReport classify_checked(const CirculantSymbol& sym, const Group& aut) {
  const int n = sym.n;
  ClassificationReport rep;
  rep.complete = sym.valence() == n - 1;
  rep.normal = rotations_normal(n, aut);

  std::vector<char> in(n, 0);
  for (int s : sym.step) in[s] = 1;

  std::vector<int> divisors;  // candidate subgroup orders
  for (int k = 2; k < n; ++k)
    if (n % k == 0) divisors.push_back(k);
  std::vector<char> block(n + 1, 0);
  for (int k : divisors) block[k] = subgroup_is_block(aut, n, k);

  // Reduction modulo a block subgroup D of order k. Cosets of D are the
  // residue classes mod n/k; each must lie inside or outside the steps, and
  // the coset D itself may only contribute all of its nonzero part.
  for (int k : divisors) {
    if (!block[k]) continue;
    const int m = n / k;
    bool ok = true;
    std::vector<int> qsteps;
    for (int c = 1; c < m && ok; ++c) {
      int cnt = 0;
      for (int j = 0; j < k; ++j) cnt += in[c + j * m];
      if (cnt == k)
        qsteps.push_back(c);
      else
        ok = cnt == 0;
    }
    int interior = 0;
    for (int j = 1; j < k; ++j) interior += in[j * m];
    ok = ok && (interior == 0 || interior == k - 1) && !qsteps.empty();
    if (!ok) continue;
    CirculantSymbol q{m, std::move(qsteps)};
    if (!quotient_is_arc_transitive(q)) continue;
    rep.block_quotients.push_back({subgroup_of_order(n, k), interior > 0, std::move(q)});
  }

  // Tensor factorization Z_n = D x E, |D| = k > 3, |E| = l coprime to k.
  // D is the multiples of l, E the multiples of k; each step must split as
  // d + e with d in D nonzero and e in a common set R inside E nonzero.
  for (int k : divisors) {
    const int l = n / k;
    if (k <= 3 || std::gcd(k, l) != 1) continue;
    if (!block[k] || !block[l]) continue;
    bool ok = true;
    std::vector<char> rin(n, 0);
    for (int s : sym.step) {
      int e = 0;
      for (int t = 0; t < l; ++t)
        if (k * t % l == s % l) {
          e = k * t;
          break;
        }
      if (e == 0 || (s - e + n) % n == 0) {
        ok = false;
        break;
      }
      rin[e] = 1;
    }
    if (!ok) continue;
    std::vector<int> r;
    for (int e = 1; e < n; ++e)
      if (rin[e]) r.push_back(e);
    for (int e : r) ok = ok && rin[n - e];  // inverse-closed
    std::vector<char> recon(n, 0);
    for (int j = 1; j < k; ++j)
      for (int e : r) recon[(j * l + e) % n] = 1;
    for (int x = 0; ok && x < n; ++x) ok = recon[x] == in[x];
    if (!ok) continue;
    std::vector<int> fsteps;
    fsteps.reserve(r.size());
    for (int e : r) fsteps.push_back(e / k);
    CirculantSymbol f{l, std::move(fsteps)};
    if (!quotient_is_arc_transitive(f)) continue;
    rep.tensor_factors.push_back(
        {subgroup_of_order(n, k), subgroup_of_order(n, l), std::move(r), std::move(f)});
  }
  return rep;
}

// Triangles through the edge {0, s} are the steps w with w - s again a
// step; an edge-transitive graph has the same count on every edge. Steps
// are kept as a residue bitmask, n < 32.
bool equal_triangle_counts(int n, std::uint32_t set) {
  const std::uint32_t wrap = (1u << n) - 1;
  int want = -1;
  for (int s = 1; s < n; ++s) {
    if (!(set >> s & 1)) continue;
    std::uint32_t shifted = ((set << s) | (set >> (n - s))) & wrap;
    int t = std::popcount(set & shifted);
    if (want < 0) want = t;
    if (t != want) return false;
  }
  return true;
}

}  // namespace

void validate_circulant(const CirculantSymbol& sym) {
  if (sym.n < 2)
    throw std::invalid_argument("circulant symbol: order must be at least 2");
  if (sym.step.empty())
    throw std::invalid_argument("circulant symbol: empty step set");
  for (std::size_t i = 0; i < sym.step.size(); ++i) {
    int s = sym.step[i];
    if (s < 1 || s >= sym.n)
      throw std::invalid_argument("circulant symbol: step out of range");
    if (i > 0 && sym.step[i - 1] >= s)
      throw std::invalid_argument("circulant symbol: steps must strictly ascend");
  }
  for (int s : sym.step)
    if (!std::binary_search(sym.step.begin(), sym.step.end(), sym.n - s))
      throw std::invalid_argument("circulant symbol: step set must be inverse-closed");
}

std::string to_string(const CirculantSymbol& sym) {
  std::string out = "C" + std::to_string(sym.n) + "(";
  for (std::size_t i = 0; i < sym.step.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(sym.step[i]);
  }
  return out + ")";
}

Graph circulant(const CirculantSymbol& sym) {
  validate_circulant(sym);
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(sym.n) * sym.step.size());
  for (int i = 0; i < sym.n; ++i)
    for (int s : sym.step) edges.push_back({i, (i + s) % sym.n});
  return Graph(sym.n, edges);
}

bool circulant_connected(const CirculantSymbol& sym) {
  validate_circulant(sym);
  int g = sym.n;
  for (int s : sym.step) g = std::gcd(g, s);
  return g == 1;
}

bool is_normal_circulant(const CirculantSymbol& sym) {
  Graph g = circulant(sym);
  Group a = automorphism_group(g);
  return rotations_normal(sym.n, a);
}

std::string ClassificationReport::case_labels() const {
  std::string out;
  auto add = [&out](const char* label) {
    if (!out.empty()) out += '+';
    out += label;
  };
  if (complete) add("complete");
  if (normal) add("normal");
  if (!block_quotients.empty()) add("block-quotient");
  if (!tensor_factors.empty()) add("tensor");
  return out;
}

ClassificationReport classify_arc_transitive_circulant(const CirculantSymbol& sym) {
  if (!circulant_connected(sym))
    throw std::invalid_argument("classify_arc_transitive_circulant: disconnected circulant");
  Graph g = circulant(sym);
  Group a = automorphism_group(g);
  if (!is_arc_transitive(g, a))
    throw std::invalid_argument("classify_arc_transitive_circulant: not arc-transitive");
  return classify_checked(sym, a);
}

CoverageReport exhaustive_case_coverage(int max_n) {
  if (max_n < 2 || max_n > kCoverageOrderLimit)
    throw std::invalid_argument("exhaustive_case_coverage: max_n out of range");
  CoverageReport rep;
  rep.max_n = max_n;
  rep.all_classified = true;
  for (int n = 2; n <= max_n; ++n) {
    CoverageCount cnt{n, 0, 0};
    const int half = n / 2;
    for (std::uint32_t mask = 1; mask < (1u << half); ++mask) {
      std::uint32_t set = 0;
      for (int i = 0; i < half; ++i)
        if (mask >> i & 1) set |= (1u << (i + 1)) | (1u << (n - (i + 1)));
      int g = n;
      for (int s = 1; s < n && g > 1; ++s)
        if (set >> s & 1) g = std::gcd(g, s);
      if (g != 1) continue;
      ++cnt.connected;
      if (!equal_triangle_counts(n, set)) continue;
      CirculantSymbol sym{n, {}};
      for (int s = 1; s < n; ++s)
        if (set >> s & 1) sym.step.push_back(s);
      Graph gr = circulant(sym);
      Group a = automorphism_group(gr);
      if (!is_arc_transitive(gr, a)) continue;
      ++cnt.arc_transitive;
      ClassificationReport r = classify_checked(sym, a);
      rep.all_classified = rep.all_classified && r.classified();
      rep.rows.push_back({std::move(sym), std::move(r)});
    }
    rep.counts.push_back(cnt);
  }
  std::sort(rep.rows.begin(), rep.rows.end(), [](const CoverageRow& a, const CoverageRow& b) {
    return std::tie(a.sym.n, a.sym.step) < std::tie(b.sym.n, b.sym.step);
  });
  return rep;
}

}  // namespace bicirc
