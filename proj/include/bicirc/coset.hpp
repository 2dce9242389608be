#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "bicirc/graph.hpp"
#include "bicirc/group.hpp"
#include "bicirc/perm.hpp"

namespace bicirc {

// H contains no nontrivial normal subgroup of G, i.e. the intersection of
// all G-conjugates of H is trivial. Verifies H <= G; both enumerated.
bool core_free(const Group& g, const Group& h);

struct CosetGraphSpec {
  Group ambient;
  Group h;  // core-free subgroup
  Perm g;   // connection element; never in h
};

// Graph on the right cosets of H (indexed as in right_cosets: sorted by
// least member), with {Hx, Hy} an edge iff y x^-1 lies in HgH or Hg^-1H.
// The connection set H{g, g^-1}H is inverse-closed by construction, so the
// graph is simple and undirected; g in H would mean loops and is rejected.
Graph coset_graph(const CosetGraphSpec& spec);

// |H| / |H meet H^g| when HgH = Hg^-1H, twice that otherwise. Always equals
// the (regular) valence of coset_graph(spec).
int coset_valence(const CosetGraphSpec& spec);

// Right-multiplication action of ambient on the right cosets of H, returned
// as a permutation group on coset indices. Faithful exactly when H is
// core-free; always vertex-transitive on the coset graph.
Group coset_action(const Group& ambient, const Group& h);

// The connection set {x in R : v^x adjacent to v} of a group R acting
// regularly on the vertices of g; Cay(R, S) is isomorphic to g under
// x -> v^x. Sorted; inverse-closed and identity-free automatically.
// Throws std::invalid_argument if R is not a regular automorphism group.
std::vector<Perm> sabidussi_connection_set(const Graph& g, const Group& r,
                                           int v);

// The two condition sets a connection element can satisfy:
//   (1) HgH = Hg^-1H  and |H| = 6 |H meet H^g| = |H<g> meet HgH| / 2
//   (2) HgH != Hg^-1H and |H| = 3 |H meet H^g| = |H<g> meet HgH|
// Full cardinalities are reported, not just the verdicts: downstream
// checks consume the individual sizes.
struct LemmaCondReport {
  std::uint64_t h_order = 0;
  std::uint64_t conj_meet = 0;         // |H meet H^g|
  std::uint64_t double_coset_size = 0; // |HgH|
  std::uint64_t product_meet = 0;      // |H<g> meet HgH|
  bool double_coset_symmetric = false; // HgH = Hg^-1H
  bool case1 = false;
  bool case2 = false;
};

LemmaCondReport lemma_cond_eval(const Group& g_group, const Group& h,
                                const Perm& g);

struct OrderNWitness {
  Perm witness;
  LemmaCondReport report;
  // Set when a subgroup C was supplied: whether the witness lies inside it.
  std::optional<bool> inside_c;
};

// First element of order n in lexicographic order satisfying condition set
// (1) or (2), or nothing. The scan covers all of G, not just a cyclic
// subgroup; callers tracking a specific C pass it to have witnesses labeled
// inside/outside.
std::optional<OrderNWitness> exists_order_n_witness(const Group& g_group,
                                                    const Group& h,
                                                    std::uint64_t n,
                                                    const Group* c = nullptr);

}  // namespace bicirc
