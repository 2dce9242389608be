#pragma once

#include <optional>
#include <vector>

#include "bicirc/group.hpp"
#include "bicirc/perm.hpp"

namespace bicirc {

// Stabilizer data inside the alternating or symmetric group on 5 points.
// ambient is A5 or S5, stabilizer the normalizer of <(0,1,2)> in it, and
// even_part the even permutations of the stabilizer. These are the vertex
// stabilizers that a valence-6 edge-transitive cover with a nonabelian
// composition factor would have to admit; the checks below rule them out.
struct NormalizerContext {
  Group ambient;
  Group stabilizer;
  Group even_part;  // equals stabilizer when ambient is A5
};

// ambient A5; stabilizer <(0,1,2),(0,1)(3,4)>, order 6.
NormalizerContext alternating_context();
// ambient S5; stabilizer <(0,1,2),(0,1),(3,4)>, order 12, even part of index 2.
NormalizerContext symmetric_context();

// All 24 five-cycles on {0..4}, ordered lexicographically by the cycle word
// (0,a,b,c,d) written from 0.
std::vector<Perm> five_cycles();

// Evaluation of |H| = 3|H meet H^s| = |H<s> meet HsH| for the context
// stabilizer H. A five-cycle s satisfying both equalities would feed an
// asymmetric-orbit coset graph; none exists in either context.
struct DirectCheck {
  int stabilizer_order = 0;
  int conjugate_meet = 0;        // |H meet H^s|
  int product_meet = 0;          // |H<s> meet HsH|
  bool coset_symmetric = false;  // HsH == Hs^-1H, diagnostic only
  bool satisfied = false;

  friend bool operator==(const DirectCheck&, const DirectCheck&) = default;
};

// Throws std::invalid_argument unless sigma is a five-cycle of degree 5.
DirectCheck direct_case_check(const NormalizerContext& ctx, const Perm& sigma);

// Even lambda1, lambda2 in even_part with s^-1 = t lambda1 s t lambda2 for
// t = (3,4), products applying the left factor first. Existence for every
// five-cycle forces HgH = Hg^-1H in the twisted extension.
struct InverseWitness {
  Perm lambda1;
  Perm lambda2;

  friend bool operator==(const InverseWitness&, const InverseWitness&) = default;
};

// First witness in the sorted even_part x even_part scan; requires the
// symmetric context (a stabilizer with an odd half).
std::optional<InverseWitness> inverse_coset_witness(const NormalizerContext& ctx,
                                                    const Perm& sigma);

// Evaluation of the paired equalities |H| = 6|H meet H1^s| and
// |H<s> meet H1 s H| + |H<s> meet t H1 s H| = 2|H|, where H1 is the even
// part and t = (3,4). A five-cycle satisfying both would feed a
// symmetric-orbit coset graph in the twisted extension; none exists.
struct TwistedCheck {
  int stabilizer_order = 0;
  int even_conjugate_meet = 0;  // |H meet H1^s|
  int even_product_meet = 0;    // |H<s> meet H1 s H|
  int odd_product_meet = 0;     // |H<s> meet t H1 s H|
  bool first_equality = false;
  bool second_equality = false;
  bool satisfied = false;

  friend bool operator==(const TwistedCheck&, const TwistedCheck&) = default;
};

// Requires the symmetric context, like inverse_coset_witness.
TwistedCheck twisted_case_check(const NormalizerContext& ctx, const Perm& sigma);

struct FiveCycleRow {
  Perm sigma;
  DirectCheck alternating_direct;
  DirectCheck symmetric_direct;
  std::optional<InverseWitness> inverse;
  TwistedCheck twisted;

  friend bool operator==(const FiveCycleRow&, const FiveCycleRow&) = default;
};

// Every check over every five-cycle, rows in five_cycles() order.
struct FiveCycleScan {
  std::vector<FiveCycleRow> rows;
  int alternating_direct_hits = 0;
  int symmetric_direct_hits = 0;
  int inverse_hits = 0;
  int twisted_hits = 0;

  bool direct_infeasible() const;
  bool inverse_total() const;
  bool twisted_infeasible() const;
  bool all_claims_hold() const;

  friend bool operator==(const FiveCycleScan&, const FiveCycleScan&) = default;
};

FiveCycleScan scan_five_cycles();

}  // namespace bicirc
