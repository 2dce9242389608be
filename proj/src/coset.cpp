#include "bicirc/coset.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "bicirc/aut.hpp"
#include "bicirc/blocks.hpp"

namespace bicirc {

namespace {

// |H meet H^g| by sorted-merge over the conjugated element list.
std::uint64_t conjugate_meet(const Group& h, const Perm& g) {
  std::vector<Perm> conj;
  conj.reserve(h.elements().size());
  for (const Perm& p : h.elements()) conj.push_back(conjugate(p, g));
  std::sort(conj.begin(), conj.end());
  std::uint64_t count = 0;
  for (const Perm& p : h.elements())
    if (std::binary_search(conj.begin(), conj.end(), p)) ++count;
  return count;
}

void check_spec(const CosetGraphSpec& spec) {
  if (!is_subgroup(spec.h, spec.ambient))
    throw std::invalid_argument("coset graph: H is not a subgroup of G");
  if (!spec.ambient.contains(spec.g))
    throw std::invalid_argument("coset graph: g lies outside G");
  if (spec.h.contains(spec.g))
    throw std::invalid_argument("coset graph: g in H would produce loops");
  if (!core_free(spec.ambient, spec.h))
    throw std::invalid_argument("coset graph: H is not core-free");
}

}  // namespace

bool core_free(const Group& g, const Group& h) {
  if (!is_subgroup(h, g))
    throw std::invalid_argument("core_free: H is not a subgroup of G");
  // The core is the intersection of all conjugates: a member of H survives
  // iff every conjugate of it stays inside H.
  for (const Perm& p : h.elements()) {
    if (p.is_identity()) continue;
    bool inside_all = true;
    for (const Perm& x : g.elements())
      if (!h.contains(conjugate(p, x))) {
        inside_all = false;
        break;
      }
    if (inside_all) return false;
  }
  return true;
}

Graph coset_graph(const CosetGraphSpec& spec) {
  check_spec(spec);
  auto cosets = right_cosets(spec.ambient, spec.h);
  DoubleCoset fwd = double_coset(spec.h, spec.g, spec.h);
  DoubleCoset bwd = double_coset(spec.h, inverse(spec.g), spec.h);
  auto in_connection = [&](const Perm& p) {
    return std::binary_search(fwd.members.begin(), fwd.members.end(), p) ||
           std::binary_search(bwd.members.begin(), bwd.members.end(), p);
  };
  int m = static_cast<int>(cosets.size());
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (in_connection(compose(cosets[j][0], inverse(cosets[i][0]))))
        edges.emplace_back(i, j);
  return Graph(m, edges);
}

int coset_valence(const CosetGraphSpec& spec) {
  check_spec(spec);
  std::uint64_t meet = conjugate_meet(spec.h, spec.g);
  std::uint64_t valence = spec.h.order() / meet;
  if (!set_product_intersection(spec.h, spec.g).double_coset_symmetric)
    valence *= 2;
  return static_cast<int>(valence);
}

Group coset_action(const Group& ambient, const Group& h) {
  auto cosets = right_cosets(ambient, h);
  std::unordered_map<Perm, int, PermHash> coset_of;
  for (std::size_t i = 0; i < cosets.size(); ++i)
    for (const Perm& p : cosets[i]) coset_of.emplace(p, static_cast<int>(i));
  int m = static_cast<int>(cosets.size());
  std::vector<Perm> gens;
  for (const Perm& a : ambient.generators()) {
    std::vector<int> img(m);
    for (int i = 0; i < m; ++i) img[i] = coset_of.at(compose(cosets[i][0], a));
    gens.push_back(Perm(std::move(img)));
  }
  return Group(m, std::move(gens));
}

std::vector<Perm> sabidussi_connection_set(const Graph& g, const Group& r,
                                           int v) {
  if (v < 0 || v >= g.vertex_count())
    throw std::invalid_argument("sabidussi: base vertex out of range");
  for (const Perm& p : r.generators())
    if (!is_automorphism(g, p))
      throw std::invalid_argument("sabidussi: R is not an automorphism group");
  std::vector<int> all(g.vertex_count());
  for (int i = 0; i < g.vertex_count(); ++i) all[i] = i;
  if (!is_regular(r, all))
    throw std::invalid_argument("sabidussi: R is not regular on the vertices");
  std::vector<Perm> s;
  for (const Perm& x : r.elements())
    if (g.adjacent(v, x[v])) s.push_back(x);
  return s;
}

LemmaCondReport lemma_cond_eval(const Group& g_group, const Group& h,
                                const Perm& g) {
  if (!is_subgroup(h, g_group) || !g_group.contains(g))
    throw std::invalid_argument("lemma_cond_eval: needs H <= G and g in G");
  LemmaCondReport r;
  r.h_order = h.order();
  r.conj_meet = conjugate_meet(h, g);
  r.double_coset_size = double_coset(h, g, h).members.size();
  SetProductMeet spm = set_product_intersection(h, g);
  r.product_meet = spm.size;
  r.double_coset_symmetric = spm.double_coset_symmetric;
  r.case1 = r.double_coset_symmetric && r.h_order == 6 * r.conj_meet &&
            2 * r.h_order == r.product_meet;
  r.case2 = !r.double_coset_symmetric && r.h_order == 3 * r.conj_meet &&
            r.h_order == r.product_meet;
  return r;
}

std::optional<OrderNWitness> exists_order_n_witness(const Group& g_group,
                                                    const Group& h,
                                                    std::uint64_t n,
                                                    const Group* c) {
  for (const Perm& p : g_group.elements()) {
    if (order_of(p) != n) continue;
    LemmaCondReport r = lemma_cond_eval(g_group, h, p);
    if (!r.case1 && !r.case2) continue;
    OrderNWitness w{p, r, std::nullopt};
    if (c) w.inside_c = c->contains(p);
    return w;
  }
  return std::nullopt;
}

}  // namespace bicirc
