#include "bicirc/blocks.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace bicirc {

namespace {

struct UnionFind {
  std::vector<int> parent;

  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }

  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }

  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);
    parent[static_cast<std::size_t>(b)] = a;
    return true;
  }
};

void require_transitive(const Group& G) {
  if (G.degree() <= 0) throw std::invalid_argument("group has empty domain");
  if (orbit(G.generators(), 0, G.degree()).size() != static_cast<std::size_t>(G.degree()))
    throw std::invalid_argument("group is not transitive");
}

// Orbit of a block under the generators; returns the classes sorted by their
// least element. For a transitive group and a genuine block this partitions
// the domain.
std::vector<std::vector<int>> block_orbit(const Group& G, const std::vector<int>& block) {
  std::set<std::vector<int>> seen{block};
  std::vector<std::vector<int>> stack{block};
  while (!stack.empty()) {
    std::vector<int> b = std::move(stack.back());
    stack.pop_back();
    for (const Perm& p : G.generators()) {
      std::vector<int> im;
      im.reserve(b.size());
      for (int v : b) im.push_back(p[v]);
      std::sort(im.begin(), im.end());
      if (seen.insert(im).second) stack.push_back(std::move(im));
    }
  }
  std::vector<std::vector<int>> classes(seen.begin(), seen.end());
  std::sort(classes.begin(), classes.end(),
            [](const auto& a, const auto& b) { return a[0] < b[0]; });
  return classes;
}

std::vector<std::vector<int>> sorted_partition(const VertexPartition& pi) {
  std::vector<std::vector<int>> classes = pi.classes;
  for (auto& c : classes) std::sort(c.begin(), c.end());
  std::sort(classes.begin(), classes.end());
  return classes;
}

}  // namespace

std::vector<int> minimal_block(const Group& G, std::pair<int, int> seed) {
  require_transitive(G);
  const int n = G.degree();
  if (seed.first < 0 || seed.first >= n || seed.second < 0 || seed.second >= n)
    throw std::invalid_argument("seed point out of range");
  if (seed.first == seed.second) throw std::invalid_argument("seed points must differ");

  UnionFind uf(n);
  std::vector<std::pair<int, int>> stack;
  auto push = [&](int a, int b) {
    if (uf.unite(a, b)) stack.emplace_back(a, b);
  };
  push(seed.first, seed.second);
  while (!stack.empty()) {
    auto [x, y] = stack.back();
    stack.pop_back();
    for (const Perm& p : G.generators()) push(p[x], p[y]);
  }

  std::vector<int> block;
  const int root = uf.find(seed.first);
  for (int v = 0; v < n; ++v)
    if (uf.find(v) == root) block.push_back(v);
  return block;
}

std::vector<BlockSystem> all_minimal_block_systems(const Group& G) {
  require_transitive(G);
  const int n = G.degree();
  std::vector<BlockSystem> out;
  if (n <= 1) return out;

  std::set<std::vector<std::vector<int>>> seen;
  for (int x = 1; x < n; ++x) {
    std::vector<int> block = minimal_block(G, {0, x});
    if (block.size() == static_cast<std::size_t>(n)) continue;
    // B is minimal iff every pair {0, y} inside it regenerates all of B: a
    // proper sub-block through 0 would trap the closure of its own pairs.
    bool minimal = true;
    for (int y : block) {
      if (y == 0) continue;
      if (minimal_block(G, {0, y}) != block) {
        minimal = false;
        break;
      }
    }
    if (!minimal) continue;
    std::vector<std::vector<int>> classes = block_orbit(G, block);
    std::size_t covered = 0;
    for (const auto& c : classes) covered += c.size();
    if (covered != static_cast<std::size_t>(n))
      throw std::logic_error("block orbit does not partition the domain");
    if (!seen.insert(classes).second) continue;

    VertexPartition pi{classes};
    Group kernel = kernel_of_action(G, pi);
    NormalityCheck nc = is_normal_block_system(G, pi);
    out.push_back(BlockSystem{G, std::move(pi), std::move(kernel), nc.is_normal});
  }
  std::sort(out.begin(), out.end(), [](const BlockSystem& a, const BlockSystem& b) {
    if (a.blocks.classes[0].size() != b.blocks.classes[0].size())
      return a.blocks.classes[0].size() < b.blocks.classes[0].size();
    return a.blocks.classes < b.blocks.classes;
  });
  return out;
}

bool is_primitive(const Group& G) {
  require_transitive(G);
  const int n = G.degree();
  for (int x = 1; x < n; ++x)
    if (minimal_block(G, {0, x}).size() != static_cast<std::size_t>(n)) return false;
  return true;
}

Group kernel_of_action(const Group& G, const VertexPartition& pi) {
  const int n = G.degree();
  std::vector<int> class_of = validate_partition(pi, n);
  for (const Perm& p : G.generators()) {
    for (const auto& cls : pi.classes) {
      const int target = class_of[static_cast<std::size_t>(p[cls[0]])];
      for (int v : cls)
        if (class_of[static_cast<std::size_t>(p[v])] != target)
          throw std::invalid_argument("partition is not invariant under the group");
    }
  }
  std::vector<Perm> kernel;
  for (const Perm& e : G.elements()) {
    bool fixes = true;
    for (int v = 0; v < n && fixes; ++v)
      fixes = class_of[static_cast<std::size_t>(e[v])] == class_of[static_cast<std::size_t>(v)];
    if (fixes) kernel.push_back(e);
  }
  return Group::from_elements(n, kernel);
}

NormalityCheck is_normal_block_system(const Group& G, const VertexPartition& pi) {
  // If any normal subgroup N has the classes as orbits, then N lies in the
  // kernel K, so K's orbits refine the classes; K fixes classes setwise, so
  // its orbits also coarsen into them. Hence normal witnesses exist iff K
  // itself is one.
  Group kernel = kernel_of_action(G, pi);
  std::vector<std::vector<int>> kernel_orbits = orbits(kernel);
  std::sort(kernel_orbits.begin(), kernel_orbits.end());
  if (kernel_orbits == sorted_partition(pi)) return {true, std::move(kernel)};
  return {false, std::nullopt};
}

std::vector<int> subdegrees(const Group& G) {
  require_transitive(G);
  Group stab = stabilizer(G, 0);
  std::vector<int> lengths;
  for (const auto& orb : orbits(stab)) lengths.push_back(static_cast<int>(orb.size()));
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

int rank(const Group& G) { return static_cast<int>(subdegrees(G).size()); }

bool is_regular(const Group& G, const std::vector<int>& subset) {
  if (subset.empty()) return false;
  for (int v : subset)
    if (v < 0 || v >= G.degree()) throw std::invalid_argument("subset point out of range");
  std::vector<int> sorted = subset;
  std::sort(sorted.begin(), sorted.end());
  if (orbit(G.generators(), sorted[0], G.degree()) != sorted) return false;
  for (const Perm& e : G.elements()) {
    if (e[sorted[0]] != sorted[0]) continue;
    for (int v : sorted)
      if (e[v] != v) return false;
  }
  return true;
}

}  // namespace bicirc
