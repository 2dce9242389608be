#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include "bicirc/perm.hpp"

namespace bicirc {

// Default ceiling for full element enumeration; see CapExceededError.
inline constexpr std::uint64_t kDefaultElementCap = 2'000'000;

// Group order with headroom beyond uint64 (automorphism groups of dense
// graphs overflow 64 bits long before enumeration is an option). exact
// goes false only if a product saturates 128 bits.
struct BigOrder {
  unsigned __int128 value = 1;
  bool exact = true;

  void mul(std::uint64_t k);
  bool fits_u64() const;
  std::uint64_t as_u64() const;  // requires fits_u64
  std::string str() const;       // decimal, or ">= 2^128" when saturated

  friend bool operator==(const BigOrder& a, const BigOrder& b) = default;
};

struct GroupOptions {
  std::uint64_t element_cap = kDefaultElementCap;
  std::optional<BigOrder> known_order = std::nullopt;
};

// A finitely generated permutation group. Immutable value type: copies share
// state, and the element set is enumerated lazily (thread-safe, at most once)
// the first time elements(), contains() or an order query needs it.
// Enumeration past the element cap raises CapExceededError; operations that
// only walk generators (orbits, block closures, transitivity tests) never
// enumerate.
class Group {
public:
  Group();                                       // trivial group, degree 0
  explicit Group(int degree);                    // trivial group
  Group(int degree, std::vector<Perm> generators, GroupOptions opts = {});

  // Wraps an already-known full element set (closure is trusted, not checked).
  static Group from_elements(int degree, std::vector<Perm> elements);

  int degree() const;
  const std::vector<Perm>& generators() const;
  std::uint64_t element_cap() const;

  bool enumerated() const;
  // Sorted element list; lazily computed. Throws CapExceededError.
  const std::vector<Perm>& elements() const;
  bool contains(const Perm& p) const;

  // Exact order. Uses the order recorded at construction when available
  // (automorphism engine), otherwise enumerates. order() throws
  // std::overflow_error for groups past uint64; order_big() never does.
  std::uint64_t order() const;
  BigOrder order_big() const;
  bool order_known_without_enumeration() const;

  bool is_trivial() const;

private:
  struct State;
  std::shared_ptr<State> state_;
};

// Eager closure of a generator set; throws CapExceededError past cap.
Group group_closure(const std::vector<Perm>& generators,
                    std::uint64_t cap = kDefaultElementCap);

// Orbit of a point under the generators only (no enumeration); sorted.
std::vector<int> orbit(const Group& g, int point);
std::vector<int> orbit(std::span<const Perm> generators, int point, int degree);

// All orbits on {0..degree-1}, each sorted, ordered by least element.
std::vector<std::vector<int>> orbits(const Group& g);

// Subgroup relation by element membership; both sides enumerated.
bool is_subgroup(const Group& h, const Group& g);

// Point stabilizer of an enumerated group; satisfies orbit-stabilizer.
Group stabilizer(const Group& g, int point);

// {g in G : B^g = B} for an enumerated group.
Group setwise_stabilizer(const Group& g, const std::vector<int>& block);

// H normal in G. Verifies H <= G first; conjugates H's elements by G's
// generators only, which suffices since |H^g| = |H|.
bool normal_in(const Group& h, const Group& g);

// {g in G : g p = p g} for an enumerated group.
Group centralizer(const Group& g, const Perm& p);

// {g in G : H^g = H}; both groups enumerated.
Group normalizer(const Group& g, const Group& h);

// Right cosets Hx of H in G, each coset sorted, cosets ordered by their
// least member (lexicographic image sequence). Verifies H <= G.
std::vector<std::vector<Perm>> right_cosets(const Group& g, const Group& h);

struct DoubleCoset {
  Perm representative;
  std::vector<Perm> members;  // sorted
};

// HgK = {h g k}; |HgK| = |H||K| / |K meet H^g| is asserted internally.
DoubleCoset double_coset(const Group& h, const Perm& g, const Group& k);

struct SetProductMeet {
  std::uint64_t size = 0;              // |H<g> meet HgH|
  bool double_coset_symmetric = false; // HgH == Hg^-1H
};

// Cardinality of the intersection of the set product H<g> with the double
// coset HgH, plus the HgH = Hg^-1H flag.
SetProductMeet set_product_intersection(const Group& h, const Perm& g);

// Action of G on sorted 2-subsets of {0..m-1}, ordered lexicographically:
// (0,1) < (0,2) < ... < (m-2,m-1). Degree m(m-1)/2.
Group induced_action_on_pairs(const Group& g);

// The lexicographically ordered 2-subsets used by induced_action_on_pairs.
std::vector<std::pair<int, int>> pair_domain(int m);

}  // namespace bicirc
