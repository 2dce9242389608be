#include "bicirc/graph.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace bicirc {

Graph::Graph(int n) : n_(n), words_((n + 63) / 64) {
  if (n <= 0) throw std::invalid_argument("graph needs at least one vertex");
  rows_.assign(static_cast<std::size_t>(n_) * words_, 0);
  degrees_.assign(n_, 0);
}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : Graph(n) {
  for (auto [u, v] : edges) add_edge(u, v);
}

void Graph::add_edge(int u, int v) {
  if (u < 0 || u >= n_ || v < 0 || v >= n_)
    throw std::invalid_argument("edge endpoint out of range");
  if (u == v) throw std::invalid_argument("loops are not allowed");
  if (adjacent(u, v)) return;
  rows_[static_cast<std::size_t>(u) * words_ + (v >> 6)] |= 1ull << (v & 63);
  rows_[static_cast<std::size_t>(v) * words_ + (u >> 6)] |= 1ull << (u & 63);
  ++degrees_[u];
  ++degrees_[v];
  ++edge_count_;
}

std::vector<int> Graph::neighbors(int v) const {
  std::vector<int> out;
  out.reserve(degrees_[v]);
  const std::uint64_t* r = row(v);
  for (int w = 0; w < words_; ++w) {
    std::uint64_t bits = r[w];
    while (bits) {
      int b = std::countr_zero(bits);
      out.push_back(w * 64 + b);
      bits &= bits - 1;
    }
  }
  return out;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(edge_count_);
  for (int u = 0; u < n_; ++u)
    for (int v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

std::vector<int> validate_partition(const VertexPartition& pi, int n) {
  std::vector<int> cls(n, -1);
  for (std::size_t c = 0; c < pi.classes.size(); ++c) {
    if (pi.classes[c].empty())
      throw std::invalid_argument("partition class is empty");
    for (int v : pi.classes[c]) {
      if (v < 0 || v >= n)
        throw std::invalid_argument("partition vertex out of range");
      if (cls[v] != -1)
        throw std::invalid_argument("partition classes overlap");
      cls[v] = static_cast<int>(c);
    }
  }
  for (int v = 0; v < n; ++v)
    if (cls[v] == -1)
      throw std::invalid_argument("partition does not cover all vertices");
  return cls;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& verts) {
  if (verts.empty())
    throw std::invalid_argument("induced_subgraph: empty vertex set");
  for (int v : verts)
    if (v < 0 || v >= g.vertex_count())
      throw std::invalid_argument("induced_subgraph: vertex out of range");
  std::vector<int> sorted = verts;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("induced_subgraph: duplicate vertex");
  std::vector<std::pair<int, int>> edges;
  for (std::size_t i = 0; i < sorted.size(); ++i)
    for (std::size_t j = i + 1; j < sorted.size(); ++j)
      if (g.adjacent(sorted[i], sorted[j]))
        edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
  return Graph(static_cast<int>(sorted.size()), edges);
}

bool is_connected(const Graph& g) {
  int n = g.vertex_count();
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : g.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == n;
}

bool is_cycle(const Graph& g) {
  if (g.vertex_count() < 3) return false;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) != 2) return false;
  return is_connected(g);
}

Graph quotient(const Graph& g, const VertexPartition& pi) {
  auto cls = validate_partition(pi, g.vertex_count());
  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : g.edges()) {
    int a = cls[u], b = cls[v];
    if (a != b) edges.emplace_back(a, b);
  }
  return Graph(static_cast<int>(pi.classes.size()), edges);
}

std::optional<int> r_cover_check(const Graph& g, const VertexPartition& pi) {
  auto cls = validate_partition(pi, g.vertex_count());
  int n_classes = static_cast<int>(pi.classes.size());
  std::optional<int> r;
  std::vector<int> count(n_classes, 0);
  for (int v = 0; v < g.vertex_count(); ++v) {
    std::fill(count.begin(), count.end(), 0);
    for (int w : g.neighbors(v)) {
      if (cls[w] == cls[v]) return std::nullopt;  // internal edge
      ++count[cls[w]];
    }
    for (int c = 0; c < n_classes; ++c) {
      if (count[c] == 0) continue;
      if (!r) r = count[c];
      if (count[c] != *r) return std::nullopt;
    }
  }
  return r;
}

Graph complement(const Graph& g) {
  int n = g.vertex_count();
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.adjacent(u, v)) edges.emplace_back(u, v);
  return Graph(n, edges);
}

std::vector<int> degree_sequence(const Graph& g) {
  std::vector<int> out(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) out[v] = g.degree(v);
  std::sort(out.begin(), out.end());
  return out;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<std::pair<int, int>> edges = a.edges();
  int off = a.vertex_count();
  for (auto [u, v] : b.edges()) edges.emplace_back(u + off, v + off);
  return Graph(a.vertex_count() + b.vertex_count(), edges);
}

int common_neighbors(const Graph& g, int u, int v) {
  const std::uint64_t* ru = g.row(u);
  const std::uint64_t* rv = g.row(v);
  int count = 0;
  for (int w = 0; w < g.words(); ++w)
    count += std::popcount(ru[w] & rv[w]);
  return count;
}

}  // namespace bicirc
