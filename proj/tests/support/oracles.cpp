#include "support/oracles.hpp"

#include <algorithm>

namespace testsup {

using bicirc::Graph;
using bicirc::Perm;

namespace {

// Assign an image to vertex v consistent with every earlier assignment; on a
// full assignment either record it (enumeration) or stop (single search).
bool extend(const Graph& a, const Graph& b, std::vector<int>& img,
            std::vector<char>& used, int v, std::vector<Perm>* all,
            std::optional<Perm>* first) {
  const int n = a.vertex_count();
  if (v == n) {
    if (all) {
      all->emplace_back(img);
      return false;
    }
    *first = Perm(img);
    return true;
  }
  for (int w = 0; w < n; ++w) {
    if (used[w]) continue;
    bool ok = true;
    for (int u = 0; u < v && ok; ++u)
      ok = (a.adjacent(v, u) == b.adjacent(w, img[u]));
    if (!ok) continue;
    used[w] = 1;
    img[v] = w;
    if (extend(a, b, img, used, v + 1, all, first)) return true;
    used[w] = 0;
  }
  return false;
}

}  // namespace

std::vector<Perm> brute_force_automorphisms(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> img(n, -1);
  std::vector<char> used(n, 0);
  std::vector<Perm> all;
  extend(g, g, img, used, 0, &all, nullptr);
  std::sort(all.begin(), all.end());
  return all;
}

std::optional<Perm> brute_force_isomorphism(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count())
    return std::nullopt;
  const int n = a.vertex_count();
  std::vector<int> img(n, -1);
  std::vector<char> used(n, 0);
  std::optional<Perm> first;
  extend(a, b, img, used, 0, nullptr, &first);
  return first;
}

}  // namespace testsup
