#pragma once

#include <random>

#include "bicirc/graph.hpp"

namespace testsup {

bicirc::Graph cycle_graph(int n);
bicirc::Graph path_graph(int n);
bicirc::Graph complete_graph(int n);
bicirc::Graph star_graph(int leaves);  // center is vertex 0

// Outer rim 0..n-1, inner rim n..2n-1, spokes i -- n+i, inner step k.
bicirc::Graph generalized_petersen(int n, int k);
bicirc::Graph petersen();

// 4x4 rook's graph; vertex 4*i+j is cell (i,j), adjacency = same row or column.
bicirc::Graph rook_4x4();

bicirc::Graph random_graph(int n, double p, std::mt19937& rng);

}  // namespace testsup
