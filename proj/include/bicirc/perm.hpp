#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace bicirc {

// A permutation of {0..degree-1}, stored as its image table.
//
// Convention: permutations act on the right, x^(pq) = (x^p)^q, so
// compose(p, q) applies p first. All comparisons are lexicographic on the
// image table, which fixes every "deterministic order" promise elsewhere.
class Perm {
public:
  Perm() = default;
  explicit Perm(int degree);                      // identity
  explicit Perm(std::vector<int> images);        // validated bijection

  // Builds from 0-indexed disjoint cycles, e.g. Perm::from_cycles(5, {{0,1},{2,3,4}}).
  static Perm from_cycles(int degree, const std::vector<std::vector<int>>& cycles);

  int degree() const { return static_cast<int>(images_.size()); }
  int apply(int x) const { return images_[x]; }
  int operator[](int x) const { return images_[x]; }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const;

  friend bool operator==(const Perm& a, const Perm& b) = default;
  friend std::strong_ordering operator<=>(const Perm& a, const Perm& b) = default;

private:
  std::vector<int> images_;
};

// p then q (right-action order).
Perm compose(const Perm& p, const Perm& q);
Perm operator*(const Perm& p, const Perm& q);

Perm inverse(const Perm& p);

// g^-1 * p * g; preserves cycle type.
Perm conjugate(const Perm& p, const Perm& g);

// Cycle lengths in ascending order, fixed points included as length-1 entries.
std::vector<int> cycle_type(const Perm& p);

// Cycles of length >= 2, each rotated to start at its least point, sorted by
// that least point. Empty for the identity.
std::vector<std::vector<int>> cycles(const Perm& p);

std::uint64_t order_of(const Perm& p);

// True iff every cycle (fixed points included) has the same length.
bool is_semiregular(const Perm& p);

// The two cycles of p when p has exactly two cycles of equal length
// degree/2; otherwise nothing.
struct OrbitPair {
  std::vector<int> first;
  std::vector<int> second;
};
bool semiregular_with_two_equal_orbits(const Perm& p, OrbitPair* out = nullptr);

// Cycle notation, 1-indexed to match common convention: "(1,2,3)(4,5)".
// Identity prints as "()". parse_perm accepts that form, optional commas or
// spaces between points, and an optional degree larger than the largest point.
std::string to_cycle_string(const Perm& p);
Perm parse_perm(const std::string& text, int degree = 0);

struct PermHash {
  std::size_t operator()(const Perm& p) const {
    std::size_t h = 1469598103934665603ull;
    for (int x : p.images()) {
      h ^= static_cast<std::size_t>(x);
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace bicirc
