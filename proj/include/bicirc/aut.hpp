#pragma once

#include <optional>
#include <vector>

#include "bicirc/graph.hpp"
#include "bicirc/group.hpp"
#include "bicirc/perm.hpp"

namespace bicirc {

// Ordered partition of a vertex set. Cell order is significant: the search
// keeps cells of two graphs aligned index by index, so partitions with the
// same cells in a different order are different objects. Cells are sorted.
struct OrderedPartition {
  std::vector<std::vector<int>> cells;

  static OrderedPartition unit(int n);
  bool discrete() const;
};

// Equitable refinement. Repeatedly splits a cell by neighbour counts into
// another cell, subcells ordered by count ascending, restarting the scan
// after every split. Deterministic; isomorphism-invariant.
OrderedPartition refine(const Graph& g, OrderedPartition pi);

// Full automorphism group with exact order. opts.element_cap is forwarded to
// the returned Group; the order is known without enumeration.
Group automorphism_group(const Graph& g, const GroupOptions& opts = {});

bool is_automorphism(const Graph& g, const Perm& p);

// Vertex map g -> h preserving adjacency, or nullopt. Complete search.
std::optional<Perm> find_isomorphism(const Graph& g, const Graph& h);
bool is_isomorphic(const Graph& g, const Graph& h);

// Orbit-closure transitivity tests. They touch only the generators, never
// the element list, so they work for groups past the element cap. Throws
// std::invalid_argument if some generator is not an automorphism of g.
bool is_vertex_transitive(const Graph& g, const Group& G);
bool is_edge_transitive(const Graph& g, const Group& G);
bool is_arc_transitive(const Graph& g, const Group& G);

}  // namespace bicirc
