#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "bicirc/bicirculant.hpp"
#include "bicirc/graph.hpp"
#include "bicirc/group.hpp"

namespace bicirc {

// One exhaustive sweep over canonical bicirculant symbols of a fixed valence.
struct CensusJob {
  int valence = 6;
  int max_order = 50;       // inclusive cap on the order 2n
  bool twice_odd_only = true;
  bool connected_only = true;
  std::uint64_t element_cap = kDefaultElementCap;
  int jobs = 1;             // worker threads over (n, b) slices

  friend bool operator==(const CensusJob&, const CensusJob&) = default;
};

// valence >= 3 and max_order >= 2 * valence + 2; throws std::invalid_argument.
void validate_job(const CensusJob& job);

// A row of the census table: one edge-transitive isomorphism class
// representative (the least symbol found), or a symbol whose verdict hit the
// element cap. Decided non-edge-transitive symbols are only counted.
struct CensusRecord {
  BicirculantSymbol symbol;
  int order = 0;
  bool connected = false;
  Outcome edge_transitive = Outcome::no;
  bool vertex_transitive = false;
  bool arc_transitive = false;
  bool primitive = false;
  BigOrder aut_order;
  int iso_class = -1;       // id among edge-transitive rows; -1 when undecided
  std::string note;         // cause of an undecided verdict, empty otherwise

  friend bool operator==(const CensusRecord&, const CensusRecord&) = default;
};

struct CensusPerN {
  int n = 0;
  std::uint64_t canonical = 0;        // canonical symbols enumerated
  std::uint64_t connected = 0;
  std::uint64_t prune_survivors = 0;  // passed the triangle-count test
  std::uint64_t et_symbols = 0;       // edge-transitive before isomorphism dedup
  std::uint64_t et_classes = 0;
  std::uint64_t undecided = 0;

  friend bool operator==(const CensusPerN&, const CensusPerN&) = default;
};

struct CensusResult {
  CensusJob job;
  std::vector<CensusRecord> records;  // sorted by (order, symbol)
  std::vector<CensusPerN> per_n;      // ascending n
  std::uint64_t scanned = 0;          // canonical symbols examined in total

  bool complete() const;              // no undecided record
  int class_count() const;

  friend bool operator==(const CensusResult&, const CensusResult&) = default;
};

// Cheap necessary condition for edge-transitivity: the rotation splits the
// edges into outer, per-spoke and inner classes, and any automorphism fusing
// them must preserve the triangle count through an edge. Never rejects an
// edge-transitive graph.
bool equal_edge_class_triangles(const BicirculantSymbol& sym, const Graph& g);

// Enumerates canonical symbols for every admissible n under the cap, builds
// and filters them (connectivity, triangle prune), runs the automorphism
// engine on the survivors, and returns edge-transitive class representatives.
// Slices (n, b) are processed by job.jobs workers; the merge is by slice
// order, so results do not depend on scheduling. Progress lines go to *log
// when given.
CensusResult run_census(const CensusJob& job, std::ostream* log = nullptr);

}  // namespace bicirc
