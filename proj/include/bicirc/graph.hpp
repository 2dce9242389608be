#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace bicirc {

// A finite simple undirected graph on dense vertices 0..n-1.
// Adjacency is a packed bit matrix; immutable after construction, freely
// shareable across threads. Loops are rejected, duplicate edges collapse.
class Graph {
public:
  explicit Graph(int n);  // edgeless
  Graph(int n, const std::vector<std::pair<int, int>>& edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return edge_count_; }

  bool adjacent(int u, int v) const {
    return (rows_[static_cast<std::size_t>(u) * words_ + (v >> 6)] >>
            (v & 63)) & 1u;
  }

  int degree(int v) const { return degrees_[v]; }
  std::vector<int> neighbors(int v) const;

  // Edges as sorted pairs (u < v), lexicographically ordered.
  std::vector<std::pair<int, int>> edges() const;

  // Raw adjacency row words for hot loops (row v, words() entries).
  const std::uint64_t* row(int v) const {
    return rows_.data() + static_cast<std::size_t>(v) * words_;
  }
  int words() const { return words_; }

  friend bool operator==(const Graph& a, const Graph& b) = default;

private:
  int n_ = 0;
  int words_ = 0;
  int edge_count_ = 0;
  std::vector<std::uint64_t> rows_;
  std::vector<int> degrees_;

  void add_edge(int u, int v);
};

// Partition of 0..n-1 into disjoint nonempty classes covering everything.
struct VertexPartition {
  std::vector<std::vector<int>> classes;
};

// Throws std::invalid_argument unless classes are disjoint, nonempty and
// cover 0..n-1. Returns the class index of every vertex.
std::vector<int> validate_partition(const VertexPartition& pi, int n);

// Induced subgraph on verts; vertices relabelled 0..|verts|-1 in ascending
// original order. Empty vertex set is an error.
Graph induced_subgraph(const Graph& g, const std::vector<int>& verts);

bool is_connected(const Graph& g);

// Connected, 2-regular, >= 3 vertices.
bool is_cycle(const Graph& g);

// Vertices = classes of pi (in pi's order); edge between distinct classes
// iff some cross edge exists. Loops are always dropped.
Graph quotient(const Graph& g, const VertexPartition& pi);

// r when every edge joins distinct classes and every adjacent (vertex,
// class) pair meets in exactly r neighbours; nothing otherwise.
std::optional<int> r_cover_check(const Graph& g, const VertexPartition& pi);

Graph complement(const Graph& g);

std::vector<int> degree_sequence(const Graph& g);  // ascending

Graph disjoint_union(const Graph& a, const Graph& b);

// Common-neighbour count of an edge's endpoints (triangles through it).
int common_neighbors(const Graph& g, int u, int v);

}  // namespace bicirc
