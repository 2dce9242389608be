#pragma once

#include <string>
#include <vector>

#include "bicirc/graph.hpp"

namespace bicirc {

// Connection set of a Cayley graph of Z_n. Vertex i is adjacent to i+s for
// every step s, so the valence is step.size().
struct CirculantSymbol {
  int n = 0;
  std::vector<int> step;  // strictly ascending residues in [1, n-1], closed under s -> n-s

  int valence() const { return static_cast<int>(step.size()); }

  friend bool operator==(const CirculantSymbol&, const CirculantSymbol&) = default;
  friend auto operator<=>(const CirculantSymbol&, const CirculantSymbol&) = default;
};

// Throws std::invalid_argument: n < 2, empty or unsorted steps, a step
// outside [1, n-1], or a step s without its mirror n-s.
void validate_circulant(const CirculantSymbol& sym);

// "C10(1,3,7,9)"
std::string to_string(const CirculantSymbol& sym);

Graph circulant(const CirculantSymbol& sym);

// gcd(steps, n) == 1, which is equivalent to circulant(sym) being connected.
bool circulant_connected(const CirculantSymbol& sym);

// Whether the rotation subgroup is normal in the full automorphism group.
// Decided by conjugating the unit rotation by each automorphism generator;
// no element enumeration happens, so the verdict is exact at any group order.
bool is_normal_circulant(const CirculantSymbol& sym);

// A verified reduction of the graph modulo a subgroup D: D is a block for
// the automorphism group, every coset of D lies inside or outside the step
// set, and the quotient circulant is again connected and arc-transitive.
struct BlockQuotientWitness {
  std::vector<int> d;  // the subgroup, sorted, contains 0
  // The coset D itself is special since 0 is never a step: false means the
  // steps miss D entirely, true means they contain all of D except 0.
  bool d_interior_in_steps = false;
  CirculantSymbol quotient;  // steps of the full cosets, as residues mod |Z_n / D|

  friend bool operator==(const BlockQuotientWitness&, const BlockQuotientWitness&) = default;
};

// A verified factorization Z_n = D x E with coprime orders, |D| > 3, both
// factors blocks for the automorphism group, and the step set exactly
// (D \ {0}) + R, which makes the graph the tensor product of a complete
// graph on |D| vertices with the connected arc-transitive circulant Cay(E, R).
struct TensorFactorWitness {
  std::vector<int> d;  // sorted, contains 0
  std::vector<int> e;
  std::vector<int> r;       // the E-parts of the steps; nonzero, inverse-closed
  CirculantSymbol factor;   // Cay(E, R) rewritten on Z_|E|

  friend bool operator==(const TensorFactorWitness&, const TensorFactorWitness&) = default;
};

// Outcome of testing each structural case independently on one connected
// arc-transitive circulant. The cases are not mutually exclusive; every one
// whose full conditions verify is listed, with witnesses. At least one case
// applies to every valid input.
struct ClassificationReport {
  bool complete = false;
  bool normal = false;
  std::vector<BlockQuotientWitness> block_quotients;
  std::vector<TensorFactorWitness> tensor_factors;

  bool classified() const {
    return complete || normal || !block_quotients.empty() || !tensor_factors.empty();
  }
  // "complete+normal", "block-quotient", ... in the order above; "" if none.
  std::string case_labels() const;
};

// Verifies the symbol is connected and arc-transitive (std::invalid_argument
// otherwise), then reports every case that holds.
ClassificationReport classify_arc_transitive_circulant(const CirculantSymbol& sym);

// Largest order exhaustive_case_coverage accepts; the subset scan doubles
// per added vertex pair.
inline constexpr int kCoverageOrderLimit = 30;

struct CoverageCount {
  int n = 0;
  int connected = 0;        // connected symbols on Z_n
  int arc_transitive = 0;   // of those, arc-transitive ones

  friend bool operator==(const CoverageCount&, const CoverageCount&) = default;
};

struct CoverageRow {
  CirculantSymbol sym;
  ClassificationReport report;
};

struct CoverageReport {
  int max_n = 0;
  std::vector<CoverageCount> counts;  // one entry per n in [2, max_n]
  std::vector<CoverageRow> rows;      // arc-transitive symbols, by (n, steps)
  bool all_classified = false;        // every row received at least one case
};

// Scans every connected circulant symbol with 2 <= n <= max_n, keeps the
// arc-transitive ones and classifies each. Candidates are prefiltered by
// equal triangle counts across step classes, which edge-transitivity forces,
// so no arc-transitive symbol is skipped.
CoverageReport exhaustive_case_coverage(int max_n);

}  // namespace bicirc
