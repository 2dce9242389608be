#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "bicirc/graph.hpp"
#include "bicirc/group.hpp"

namespace bicirc {

struct BlockSystem {
  Group base_group;
  VertexPartition blocks;
  Group kernel;     // elements fixing every block setwise; normal in base_group
  bool is_normal;   // blocks are exactly the orbits of some normal subgroup
};

// Smallest block of a transitive group containing both seed points, by
// union-find closure under generator images. Equals the whole domain iff no
// proper block contains the seed. Throws std::invalid_argument if G is
// intransitive or the seed is degenerate.
std::vector<int> minimal_block(const Group& G, std::pair<int, int> seed);

// One BlockSystem per minimal block up to translation, deduplicated by the
// partition itself, ordered by block size then partition content. Empty for
// a primitive group.
std::vector<BlockSystem> all_minimal_block_systems(const Group& G);

// True iff there is no nontrivial block. Generator-only.
bool is_primitive(const Group& G);

// {g in G : every class fixed setwise}. Throws std::invalid_argument if some
// generator fails to map every class onto a class. Enumerates G.
Group kernel_of_action(const Group& G, const VertexPartition& pi);

struct NormalityCheck {
  bool is_normal = false;
  std::optional<Group> witness;  // normal subgroup whose orbits are the classes
};

// A G-invariant partition consists of the orbits of a normal subgroup iff it
// consists of the orbits of the kernel of the action on it, so the kernel is
// the canonical witness.
NormalityCheck is_normal_block_system(const Group& G, const VertexPartition& pi);

// Orbit lengths of the stabilizer of point 0, ascending; rank is the count.
// Requires G transitive; enumerates G.
std::vector<int> subdegrees(const Group& G);
int rank(const Group& G);

// Transitive on the subset with trivial point stabilizers there. The subset
// must be G-invariant; a subset G does not even preserve reports false.
bool is_regular(const Group& G, const std::vector<int>& subset);

}  // namespace bicirc
