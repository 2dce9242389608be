#include "bicirc/fivecycle_scan.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>
#include <utility>

namespace bicirc {
namespace {

Perm three_cycle() { return Perm::from_cycles(5, {{0, 1, 2}}); }
Perm swap_last_two() { return Perm::from_cycles(5, {{3, 4}}); }

bool is_even(const Perm& p) {
  int transpositions = 0;
  for (const auto& c : cycles(p)) transpositions += static_cast<int>(c.size()) - 1;
  return transpositions % 2 == 0;
}

NormalizerContext make_context(Group ambient) {
  Group core = group_closure({three_cycle()});
  Group stab = normalizer(ambient, core);
  std::vector<Perm> evens;
  for (const Perm& p : stab.elements())
    if (is_even(p)) evens.push_back(p);
  Group even = Group::from_elements(5, std::move(evens));
  return NormalizerContext{std::move(ambient), std::move(stab), std::move(even)};
}

void require_five_cycle(const Perm& sigma) {
  if (sigma.degree() != 5 || cycle_type(sigma) != std::vector<int>{5})
    throw std::invalid_argument("expected a five-cycle on 5 points");
}

// Context whose stabilizer splits as even_part plus (3,4) even_part.
void require_odd_half(const NormalizerContext& ctx) {
  if (ctx.stabilizer.order() != 2 * ctx.even_part.order())
    throw std::invalid_argument("context stabilizer has no odd half");
}

// H<s> as a set of permutations, products applying the left factor first.
std::unordered_set<Perm, PermHash> product_with_cycle(const Group& h,
                                                      const Perm& sigma) {
  std::unordered_set<Perm, PermHash> out;
  Perm power(5);
  for (int j = 0; j < 5; ++j) {
    for (const Perm& a : h.elements()) out.insert(compose(a, power));
    power = compose(power, sigma);
  }
  return out;
}

}  // namespace

NormalizerContext alternating_context() {
  Group a5(5, {Perm::from_cycles(5, {{0, 1, 2, 3, 4}}), three_cycle()});
  return make_context(std::move(a5));
}

NormalizerContext symmetric_context() {
  Group s5(5, {Perm::from_cycles(5, {{0, 1, 2, 3, 4}}),
               Perm::from_cycles(5, {{0, 1}})});
  return make_context(std::move(s5));
}

std::vector<Perm> five_cycles() {
  std::vector<int> word = {1, 2, 3, 4};
  std::vector<Perm> out;
  do {
    out.push_back(
        Perm::from_cycles(5, {{0, word[0], word[1], word[2], word[3]}}));
  } while (std::next_permutation(word.begin(), word.end()));
  return out;
}

DirectCheck direct_case_check(const NormalizerContext& ctx, const Perm& sigma) {
  require_five_cycle(sigma);
  const Group& h = ctx.stabilizer;
  DirectCheck out;
  out.stabilizer_order = static_cast<int>(h.order());
  for (const Perm& a : h.elements())
    if (h.contains(conjugate(a, sigma))) ++out.conjugate_meet;
  SetProductMeet meet = set_product_intersection(h, sigma);
  out.product_meet = static_cast<int>(meet.size);
  out.coset_symmetric = meet.double_coset_symmetric;
  out.satisfied = out.stabilizer_order == 3 * out.conjugate_meet &&
                  out.product_meet == out.stabilizer_order;
  return out;
}

std::optional<InverseWitness> inverse_coset_witness(const NormalizerContext& ctx,
                                                    const Perm& sigma) {
  require_five_cycle(sigma);
  require_odd_half(ctx);
  Perm t = swap_last_two();
  Perm target = inverse(sigma);
  for (const Perm& l1 : ctx.even_part.elements()) {
    Perm head = compose(compose(compose(t, l1), sigma), t);
    for (const Perm& l2 : ctx.even_part.elements())
      if (compose(head, l2) == target) return InverseWitness{l1, l2};
  }
  return std::nullopt;
}

TwistedCheck twisted_case_check(const NormalizerContext& ctx, const Perm& sigma) {
  require_five_cycle(sigma);
  require_odd_half(ctx);
  const Group& h = ctx.stabilizer;
  const Group& h1 = ctx.even_part;
  TwistedCheck out;
  out.stabilizer_order = static_cast<int>(h.order());
  for (const Perm& a : h1.elements())
    if (h.contains(conjugate(a, sigma))) ++out.even_conjugate_meet;
  std::unordered_set<Perm, PermHash> hs = product_with_cycle(h, sigma);
  Perm t = swap_last_two();
  for (const Perm& m : double_coset(h1, sigma, h).members) {
    if (hs.count(m)) ++out.even_product_meet;
    if (hs.count(compose(t, m))) ++out.odd_product_meet;
  }
  out.first_equality = out.stabilizer_order == 6 * out.even_conjugate_meet;
  out.second_equality =
      out.even_product_meet + out.odd_product_meet == 2 * out.stabilizer_order;
  out.satisfied = out.first_equality && out.second_equality;
  return out;
}

bool FiveCycleScan::direct_infeasible() const {
  return alternating_direct_hits == 0 && symmetric_direct_hits == 0;
}

bool FiveCycleScan::inverse_total() const {
  return inverse_hits == static_cast<int>(rows.size());
}

bool FiveCycleScan::twisted_infeasible() const { return twisted_hits == 0; }

bool FiveCycleScan::all_claims_hold() const {
  return direct_infeasible() && inverse_total() && twisted_infeasible();
}

FiveCycleScan scan_five_cycles() {
  NormalizerContext alt = alternating_context();
  NormalizerContext sym = symmetric_context();
  FiveCycleScan out;
  for (const Perm& sigma : five_cycles()) {
    FiveCycleRow row;
    row.sigma = sigma;
    row.alternating_direct = direct_case_check(alt, sigma);
    row.symmetric_direct = direct_case_check(sym, sigma);
    row.inverse = inverse_coset_witness(sym, sigma);
    row.twisted = twisted_case_check(sym, sigma);
    out.alternating_direct_hits += row.alternating_direct.satisfied;
    out.symmetric_direct_hits += row.symmetric_direct.satisfied;
    out.inverse_hits += row.inverse.has_value();
    out.twisted_hits += row.twisted.satisfied;
    out.rows.push_back(std::move(row));
  }
  return out;
}

}  // namespace bicirc
