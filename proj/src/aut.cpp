#include "bicirc/aut.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <utility>

namespace bicirc {

namespace {

std::vector<std::uint64_t> cell_mask(const std::vector<int>& cell, int words) {
  std::vector<std::uint64_t> m(static_cast<std::size_t>(words), 0);
  for (int v : cell) m[static_cast<std::size_t>(v) >> 6] |= std::uint64_t{1} << (v & 63);
  return m;
}

int count_into(const Graph& g, int v, const std::vector<std::uint64_t>& mask) {
  const std::uint64_t* row = g.row(v);
  int c = 0;
  for (std::size_t i = 0; i < mask.size(); ++i) c += std::popcount(row[i] & mask[i]);
  return c;
}

// Neighbour counts from one representative per cell into every cell. After
// refinement the count is constant on each cell, so this is a partition
// invariant; two aligned partitions with different matrices admit no
// cell-respecting isomorphism.
std::vector<std::vector<int>> cell_count_matrix(const Graph& g, const OrderedPartition& pi) {
  const int words = g.words();
  std::vector<std::vector<std::uint64_t>> masks;
  masks.reserve(pi.cells.size());
  for (const auto& cell : pi.cells) masks.push_back(cell_mask(cell, words));
  std::vector<std::vector<int>> m(pi.cells.size(), std::vector<int>(pi.cells.size()));
  for (std::size_t i = 0; i < pi.cells.size(); ++i)
    for (std::size_t j = 0; j < pi.cells.size(); ++j)
      m[i][j] = count_into(g, pi.cells[i][0], masks[j]);
  return m;
}

OrderedPartition individualize(const OrderedPartition& pi, std::size_t t, int u) {
  OrderedPartition out;
  out.cells.reserve(pi.cells.size() + 1);
  for (std::size_t i = 0; i < pi.cells.size(); ++i) {
    if (i != t) {
      out.cells.push_back(pi.cells[i]);
      continue;
    }
    std::vector<int> rest;
    rest.reserve(pi.cells[i].size() - 1);
    for (int v : pi.cells[i])
      if (v != u) rest.push_back(v);
    out.cells.push_back({u});
    out.cells.push_back(std::move(rest));
  }
  return out;
}

// Target cell for branching: the first cell of maximal size (> 1).
std::size_t branch_cell(const OrderedPartition& pi) {
  std::size_t best = pi.cells.size();
  std::size_t best_size = 1;
  for (std::size_t i = 0; i < pi.cells.size(); ++i)
    if (pi.cells[i].size() > best_size) {
      best_size = pi.cells[i].size();
      best = i;
    }
  return best;
}

bool same_shape(const OrderedPartition& a, const OrderedPartition& b) {
  if (a.cells.size() != b.cells.size()) return false;
  for (std::size_t i = 0; i < a.cells.size(); ++i)
    if (a.cells[i].size() != b.cells[i].size()) return false;
  return true;
}

// Complete search for a map a -> b sending cell i of pa onto cell i of pb.
std::optional<Perm> map_search(const Graph& a, OrderedPartition pa,
                               const Graph& b, OrderedPartition pb) {
  pa = refine(a, pa);
  pb = refine(b, pb);
  if (!same_shape(pa, pb)) return std::nullopt;
  if (cell_count_matrix(a, pa) != cell_count_matrix(b, pb)) return std::nullopt;
  if (pa.discrete()) {
    std::vector<int> img(static_cast<std::size_t>(a.vertex_count()));
    for (std::size_t i = 0; i < pa.cells.size(); ++i)
      img[static_cast<std::size_t>(pa.cells[i][0])] = pb.cells[i][0];
    for (auto [u, v] : a.edges())
      if (!b.adjacent(img[static_cast<std::size_t>(u)], img[static_cast<std::size_t>(v)]))
        return std::nullopt;
    return Perm(std::move(img));
  }
  const std::size_t t = branch_cell(pa);
  const int u = pa.cells[t][0];
  for (int w : pb.cells[t]) {
    auto found = map_search(a, individualize(pa, t, u), b, individualize(pb, t, w));
    if (found) return found;
  }
  return std::nullopt;
}

struct AutResult {
  std::vector<Perm> gens;
  BigOrder order;
};

// Stabilizer tower. At each level the group fixing the cells of pi pointwise
// down the individualization chain is generated by the level below plus one
// coset representative per new point of the branch orbit; the order is the
// product of orbit lengths (orbit-stabilizer).
AutResult aut_search(const Graph& g, const OrderedPartition& start) {
  OrderedPartition pi = refine(g, start);
  if (pi.discrete()) return {{}, BigOrder{}};
  const std::size_t t = branch_cell(pi);
  const int u = pi.cells[t][0];
  AutResult result = aut_search(g, individualize(pi, t, u));
  const int n = g.vertex_count();
  for (int w : pi.cells[t]) {
    if (w == u) continue;
    std::vector<int> orb = orbit(result.gens, u, n);
    if (std::binary_search(orb.begin(), orb.end(), w)) continue;
    auto found = map_search(g, individualize(pi, t, u), g, individualize(pi, t, w));
    if (found) result.gens.push_back(std::move(*found));
  }
  result.order.mul(orbit(result.gens, u, n).size());
  return result;
}

void validate_generators(const Graph& g, const Group& G) {
  if (G.degree() != g.vertex_count())
    throw std::invalid_argument("group degree does not match vertex count");
  for (const Perm& p : G.generators())
    if (!is_automorphism(g, p))
      throw std::invalid_argument("generator is not an automorphism of the graph");
}

// Orbit size of one arc (ordered pair) under the generators.
std::size_t arc_orbit_size(const Group& G, std::pair<int, int> arc) {
  std::set<std::pair<int, int>> seen{arc};
  std::vector<std::pair<int, int>> stack{arc};
  while (!stack.empty()) {
    auto [x, y] = stack.back();
    stack.pop_back();
    for (const Perm& p : G.generators()) {
      std::pair<int, int> im{p[x], p[y]};
      if (seen.insert(im).second) stack.push_back(im);
    }
  }
  return seen.size();
}

}  // namespace

OrderedPartition OrderedPartition::unit(int n) {
  OrderedPartition pi;
  std::vector<int> all(static_cast<std::size_t>(n));
  std::iota(all.begin(), all.end(), 0);
  pi.cells.push_back(std::move(all));
  return pi;
}

bool OrderedPartition::discrete() const {
  for (const auto& cell : cells)
    if (cell.size() != 1) return false;
  return true;
}

OrderedPartition refine(const Graph& g, OrderedPartition pi) {
  const int words = g.words();
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t ti = 0; ti < pi.cells.size() && !changed; ++ti) {
      if (pi.cells[ti].size() <= 1) continue;
      for (std::size_t si = 0; si < pi.cells.size() && !changed; ++si) {
        auto mask = cell_mask(pi.cells[si], words);
        std::map<int, std::vector<int>> by_count;
        for (int v : pi.cells[ti]) by_count[count_into(g, v, mask)].push_back(v);
        if (by_count.size() <= 1) continue;
        std::vector<std::vector<int>> split;
        split.reserve(by_count.size());
        for (auto& [cnt, vs] : by_count) split.push_back(std::move(vs));
        pi.cells.erase(pi.cells.begin() + static_cast<std::ptrdiff_t>(ti));
        pi.cells.insert(pi.cells.begin() + static_cast<std::ptrdiff_t>(ti),
                        std::make_move_iterator(split.begin()),
                        std::make_move_iterator(split.end()));
        changed = true;
      }
    }
  }
  return pi;
}

Group automorphism_group(const Graph& g, const GroupOptions& opts) {
  AutResult r = aut_search(g, OrderedPartition::unit(g.vertex_count()));
  GroupOptions o = opts;
  o.known_order = r.order;
  return Group(g.vertex_count(), r.gens, o);
}

bool is_automorphism(const Graph& g, const Perm& p) {
  if (p.degree() != g.vertex_count()) return false;
  // A bijection mapping every edge to an edge maps edges onto edges.
  for (auto [u, v] : g.edges())
    if (!g.adjacent(p[u], p[v])) return false;
  return true;
}

std::optional<Perm> find_isomorphism(const Graph& g, const Graph& h) {
  if (g.vertex_count() != h.vertex_count()) return std::nullopt;
  if (g.edge_count() != h.edge_count()) return std::nullopt;
  if (degree_sequence(g) != degree_sequence(h)) return std::nullopt;
  return map_search(g, OrderedPartition::unit(g.vertex_count()),
                    h, OrderedPartition::unit(h.vertex_count()));
}

bool is_isomorphic(const Graph& g, const Graph& h) {
  return find_isomorphism(g, h).has_value();
}

bool is_vertex_transitive(const Graph& g, const Group& G) {
  validate_generators(g, G);
  const int n = g.vertex_count();
  return orbit(G.generators(), 0, n).size() == static_cast<std::size_t>(n);
}

bool is_edge_transitive(const Graph& g, const Group& G) {
  validate_generators(g, G);
  auto edges = g.edges();
  if (edges.empty()) return true;
  // The orbit of one edge is everything iff there is a single orbit.
  std::set<std::pair<int, int>> seen{edges[0]};
  std::vector<std::pair<int, int>> stack{edges[0]};
  while (!stack.empty()) {
    auto [x, y] = stack.back();
    stack.pop_back();
    for (const Perm& p : G.generators()) {
      std::pair<int, int> im{std::min(p[x], p[y]), std::max(p[x], p[y])};
      if (seen.insert(im).second) stack.push_back(im);
    }
  }
  return seen.size() == edges.size();
}

bool is_arc_transitive(const Graph& g, const Group& G) {
  validate_generators(g, G);
  auto edges = g.edges();
  if (edges.empty()) return true;
  return arc_orbit_size(G, {edges[0].first, edges[0].second}) == 2 * edges.size();
}

}  // namespace bicirc
