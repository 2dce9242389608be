#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bicirc/graph.hpp"
#include "bicirc/group.hpp"
#include "bicirc/perm.hpp"

namespace bicirc {

// Symbol for a graph on 2n vertices u_0..u_{n-1}, v_0..v_{n-1}:
//
//   u_i ~ u_{i+1}          outer cycle (differences fixed to +-1)
//   u_i ~ v_{i+s}, s in S  spokes
//   v_i ~ v_{i+b}          inner edges (differences +-b)
//
// Every vertex has valence |S| + 2. The outer differences carry no
// information: an induced cycle orbit means differences {+-a} with a
// invertible, and i -> a^-1 i relabels them to +-1, so the symbol stores
// none. Equal valence on both orbits forces exactly two inner differences,
// hence the single b. gcd(b, n) > 1 is fine (the inner orbit then induces
// disjoint cycles; only one orbit has to induce a cycle).
struct BicirculantSymbol {
  int n = 0;
  std::vector<int> spokes;  // strictly ascending, values in 0..n-1
  int b = 0;                // 1..floor((n-1)/2); n/2 is never valid

  int valence() const { return static_cast<int>(spokes.size()) + 2; }

  friend bool operator==(const BicirculantSymbol&,
                         const BicirculantSymbol&) = default;
  friend auto operator<=>(const BicirculantSymbol&,
                          const BicirculantSymbol&) = default;
};

// Throws std::invalid_argument with the offending field named.
void validate_symbol(const BicirculantSymbol& sym);

// "BC(n; b; s1,s2,...)".
std::string to_string(const BicirculantSymbol& sym);

// Inverse of to_string; tolerates spaces. Throws ParseError.
BicirculantSymbol parse_symbol(const std::string& text);

struct BuiltBicirculant {
  Graph graph;  // u_i -> i, v_i -> n + i
  Perm rho;     // (u_0 .. u_{n-1})(v_0 .. v_{n-1}); always an automorphism
};

BuiltBicirculant build_bicirculant(const BicirculantSymbol& sym);

// Least symbol generating an isomorphic graph under the symbol moves:
//   S -> eps*S + c (eps = +-1, c in Z_n), b fixed;
//   and, when gcd(b, n) = 1, the orbit swap
//   (S, b) -> (eps*b^-1*S + c, min(b^-1, n - b^-1) mod n).
// Least = (spokes, b) lexicographic; the canonical spoke set contains 0.
// Multipliers other than +-1 are NOT isomorphisms of the labeled shape: a
// spoke condition (m' - m) i + const in S' for all i forces the u and v
// multipliers equal, and the +-1 outer differences then pin them to +-1.
BicirculantSymbol canonical_symbol(const BicirculantSymbol& sym);

struct SymbolCount {
  std::uint64_t raw = 0;        // symbols before canonical dedup
  std::uint64_t canonical = 0;  // symbols emitted
};

// Every canonical symbol with the given half-order and valence exactly once,
// sorted ascending. Out of range (d - 2 > n) yields an empty list; n < 3 or
// d < 3 throws. Raw count is C(n, d-2) * floor((n-1)/2).
std::vector<BicirculantSymbol> enumerate_symbols(int n, int d,
                                                 SymbolCount* count = nullptr);

// The b = fixed slice of enumerate_symbols, for parallel sweeps; the union
// over b of the slices is exactly the full enumeration.
std::vector<BicirculantSymbol> enumerate_symbols_slice(
    int n, int d, int b, SymbolCount* count = nullptr);

enum class Outcome { yes, no, undecided };

struct FamilyWitness {
  Perm rho;                     // semiregular, two orbits of length n
  std::vector<int> cycle_orbit; // sorted orbit whose induced subgraph is a cycle
};

struct FamilyCheck {
  Outcome status = Outcome::no;
  std::optional<FamilyWitness> witness;  // set iff status == yes
};

// Does g belong to the valence-d family: d-regular with an automorphism
// having exactly two equal-length orbits, one of which induces a cycle?
// Scans Aut(g) in lexicographic element order and reports the first witness,
// so results are deterministic. When |Aut(g)| exceeds element_cap the scan
// is impossible and the check reports undecided rather than guessing.
FamilyCheck in_family_F(const Graph& g, int d,
                        std::uint64_t element_cap = kDefaultElementCap);

// petersen, petersen_complement, clebsch, lattice_L2_4, complete(m), GP(n,k).
// Unknown names throw std::invalid_argument.
Graph named_graph(const std::string& name);

// True iff primitivity of Aut(g) on vertices implies g is one of K6, the
// Petersen graph, its complement, or the lattice graph L2(4); vacuously true
// whenever Aut(g) is imprimitive or intransitive. Entirely generator-level
// (block closures plus isomorphism search), so the current implementation
// always decides; undecided is reserved for capped callers.
Outcome primitive_case_check(const Graph& g, int d);

}  // namespace bicirc
