#include "bicirc/group.hpp"

#include <algorithm>
#include <limits>
#include <mutex>
#include <stdexcept>

#include "bicirc/errors.hpp"

namespace bicirc {

void BigOrder::mul(std::uint64_t k) {
  if (!exact) return;
  if (k != 0 && value > ~static_cast<unsigned __int128>(0) / k) {
    exact = false;
    value = ~static_cast<unsigned __int128>(0);
    return;
  }
  value *= k;
}

bool BigOrder::fits_u64() const {
  return exact && value <= std::numeric_limits<std::uint64_t>::max();
}

std::uint64_t BigOrder::as_u64() const {
  if (!fits_u64()) throw std::overflow_error("group order exceeds uint64");
  return static_cast<std::uint64_t>(value);
}

std::string BigOrder::str() const {
  if (!exact) return ">= 2^128";
  unsigned __int128 v = value;
  if (v == 0) return "0";
  std::string s;
  while (v > 0) {
    s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  std::reverse(s.begin(), s.end());
  return s;
}

struct Group::State {
  int degree = 0;
  std::vector<Perm> gens;
  std::uint64_t cap = kDefaultElementCap;
  std::optional<BigOrder> known_order;

  mutable std::mutex mu;
  mutable bool ready = false;
  mutable std::exception_ptr error;
  mutable std::vector<Perm> elements;
  mutable std::unordered_set<Perm, PermHash> element_set;

  void ensure_elements() const {
    std::lock_guard<std::mutex> lock(mu);
    if (error) std::rethrow_exception(error);
    if (ready) return;
    try {
      enumerate();
      ready = true;
    } catch (...) {
      error = std::current_exception();
      std::rethrow_exception(error);
    }
  }

  void enumerate() const {
    Perm id(degree);
    element_set.insert(id);
    std::vector<Perm> frontier{id};
    while (!frontier.empty()) {
      std::vector<Perm> next;
      for (const Perm& a : frontier) {
        for (const Perm& g : gens) {
          Perm b = compose(a, g);
          if (element_set.insert(b).second) {
            if (element_set.size() > cap) {
              std::uint64_t reached = element_set.size();
              element_set.clear();
              throw CapExceededError(cap, reached);
            }
            next.push_back(std::move(b));
          }
        }
      }
      frontier = std::move(next);
    }
    elements.assign(element_set.begin(), element_set.end());
    std::sort(elements.begin(), elements.end());
  }
};

static std::vector<Perm> normalize_gens(int degree, std::vector<Perm> gens) {
  std::vector<Perm> out;
  for (auto& g : gens) {
    if (g.degree() != degree)
      throw std::invalid_argument("generator degree mismatch");
    if (g.is_identity()) continue;
    if (std::find(out.begin(), out.end(), g) == out.end())
      out.push_back(std::move(g));
  }
  return out;
}

Group::Group() : Group(0) {}

Group::Group(int degree) : state_(std::make_shared<State>()) {
  if (degree < 0) throw std::invalid_argument("negative group degree");
  state_->degree = degree;
  state_->elements = {Perm(degree)};
  state_->element_set.insert(Perm(degree));
  state_->ready = true;
  state_->known_order = BigOrder{};
}

Group::Group(int degree, std::vector<Perm> generators, GroupOptions opts)
    : state_(std::make_shared<State>()) {
  if (degree < 0) throw std::invalid_argument("negative group degree");
  state_->degree = degree;
  state_->gens = normalize_gens(degree, std::move(generators));
  state_->cap = opts.element_cap;
  state_->known_order = opts.known_order;
}

Group Group::from_elements(int degree, std::vector<Perm> elements) {
  Group g(degree);
  for (const auto& e : elements)
    if (e.degree() != degree)
      throw std::invalid_argument("element degree mismatch");
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  g.state_->element_set =
      std::unordered_set<Perm, PermHash>(elements.begin(), elements.end());
  g.state_->gens = normalize_gens(degree, elements);
  g.state_->elements = std::move(elements);
  BigOrder ord;
  ord.value = g.state_->elements.size();
  g.state_->known_order = ord;
  g.state_->ready = true;
  return g;
}

int Group::degree() const { return state_->degree; }
const std::vector<Perm>& Group::generators() const { return state_->gens; }
std::uint64_t Group::element_cap() const { return state_->cap; }

bool Group::enumerated() const {
  std::lock_guard<std::mutex> lock(state_->mu);
  return state_->ready;
}

const std::vector<Perm>& Group::elements() const {
  state_->ensure_elements();
  return state_->elements;
}

bool Group::contains(const Perm& p) const {
  if (p.degree() != degree()) return false;
  state_->ensure_elements();
  return state_->element_set.count(p) > 0;
}

std::uint64_t Group::order() const { return order_big().as_u64(); }

BigOrder Group::order_big() const {
  if (state_->known_order) return *state_->known_order;
  state_->ensure_elements();
  BigOrder ord;
  ord.value = state_->elements.size();
  return ord;
}

bool Group::order_known_without_enumeration() const {
  return state_->known_order.has_value();
}

bool Group::is_trivial() const {
  if (state_->known_order) return state_->known_order->value == 1;
  return state_->gens.empty();
}

Group group_closure(const std::vector<Perm>& generators, std::uint64_t cap) {
  if (generators.empty())
    throw std::invalid_argument("group_closure needs at least one generator");
  GroupOptions opts;
  opts.element_cap = cap;
  Group g(generators.front().degree(), generators, opts);
  g.elements();
  return g;
}

std::vector<int> orbit(std::span<const Perm> generators, int point, int degree) {
  if (point < 0 || point >= degree)
    throw std::invalid_argument("orbit: point out of range");
  std::vector<char> seen(degree, 0);
  std::vector<int> out{point}, frontier{point};
  seen[point] = 1;
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int x : frontier) {
      for (const Perm& g : generators) {
        int y = g[x];
        if (!seen[y]) {
          seen[y] = 1;
          out.push_back(y);
          next.push_back(y);
        }
      }
    }
    frontier = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> orbit(const Group& g, int point) {
  return orbit(std::span<const Perm>(g.generators()), point, g.degree());
}

std::vector<std::vector<int>> orbits(const Group& g) {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(g.degree(), 0);
  for (int v = 0; v < g.degree(); ++v) {
    if (seen[v]) continue;
    auto orb = orbit(g, v);
    for (int x : orb) seen[x] = 1;
    out.push_back(std::move(orb));
  }
  return out;
}

bool is_subgroup(const Group& h, const Group& g) {
  if (h.degree() != g.degree()) return false;
  for (const Perm& p : h.elements())
    if (!g.contains(p)) return false;
  return true;
}

bool normal_in(const Group& h, const Group& g) {
  if (!is_subgroup(h, g))
    throw std::invalid_argument("normal_in: H is not a subgroup of G");
  for (const Perm& gen : g.generators())
    for (const Perm& p : h.elements())
      if (!h.contains(conjugate(p, gen))) return false;
  return true;
}

Group centralizer(const Group& g, const Perm& p) {
  if (p.degree() != g.degree())
    throw std::invalid_argument("centralizer: degree mismatch");
  std::vector<Perm> fixed;
  for (const Perm& x : g.elements())
    if (compose(x, p) == compose(p, x)) fixed.push_back(x);
  return Group::from_elements(g.degree(), std::move(fixed));
}

Group normalizer(const Group& g, const Group& h) {
  if (h.degree() != g.degree())
    throw std::invalid_argument("normalizer: degree mismatch");
  std::vector<Perm> fixed;
  for (const Perm& x : g.elements()) {
    bool ok = true;
    for (const Perm& gen : h.generators())
      if (!h.contains(conjugate(gen, x))) {
        ok = false;
        break;
      }
    if (ok) fixed.push_back(x);
  }
  return Group::from_elements(g.degree(), std::move(fixed));
}

Group stabilizer(const Group& g, int point) {
  if (point < 0 || point >= g.degree())
    throw std::invalid_argument("stabilizer: point out of range");
  std::vector<Perm> fixed;
  for (const Perm& p : g.elements())
    if (p[point] == point) fixed.push_back(p);
  return Group::from_elements(g.degree(), std::move(fixed));
}

Group setwise_stabilizer(const Group& g, const std::vector<int>& block) {
  std::vector<char> in_block(g.degree(), 0);
  for (int v : block) {
    if (v < 0 || v >= g.degree())
      throw std::invalid_argument("setwise_stabilizer: point out of range");
    in_block[v] = 1;
  }
  std::vector<Perm> fixed;
  for (const Perm& p : g.elements()) {
    bool ok = true;
    for (int v : block)
      if (!in_block[p[v]]) {
        ok = false;
        break;
      }
    if (ok) fixed.push_back(p);
  }
  return Group::from_elements(g.degree(), std::move(fixed));
}

std::vector<std::vector<Perm>> right_cosets(const Group& g, const Group& h) {
  if (!is_subgroup(h, g))
    throw std::invalid_argument("right_cosets: H is not a subgroup of G");
  std::unordered_set<Perm, PermHash> assigned;
  std::vector<std::vector<Perm>> cosets;
  for (const Perm& x : g.elements()) {
    if (assigned.count(x)) continue;
    std::vector<Perm> coset;
    coset.reserve(h.elements().size());
    for (const Perm& hh : h.elements()) {
      Perm y = compose(hh, x);
      assigned.insert(y);
      coset.push_back(std::move(y));
    }
    std::sort(coset.begin(), coset.end());
    cosets.push_back(std::move(coset));
  }
  // Sweeping G in sorted order makes each coset appear keyed by its least
  // member, so the list is already ordered by minimal element.
  return cosets;
}

DoubleCoset double_coset(const Group& h, const Perm& g, const Group& k) {
  if (h.degree() != g.degree() || k.degree() != g.degree())
    throw std::invalid_argument("double_coset: degree mismatch");
  std::unordered_set<Perm, PermHash> members;
  for (const Perm& a : h.elements()) {
    Perm ag = compose(a, g);
    for (const Perm& b : k.elements()) members.insert(compose(ag, b));
  }
  // |HgK| = |H||K| / |K meet H^g|
  std::uint64_t meet = 0;
  for (const Perm& a : h.elements())
    if (k.contains(conjugate(a, g))) ++meet;
  std::uint64_t expect =
      h.elements().size() * static_cast<std::uint64_t>(k.elements().size()) / meet;
  if (expect != members.size())
    throw std::logic_error("double coset size disagrees with |H||K|/|K meet H^g|");
  DoubleCoset dc;
  dc.representative = g;
  dc.members.assign(members.begin(), members.end());
  std::sort(dc.members.begin(), dc.members.end());
  return dc;
}

SetProductMeet set_product_intersection(const Group& h, const Perm& g) {
  if (h.degree() != g.degree())
    throw std::invalid_argument("set_product_intersection: degree mismatch");
  std::unordered_set<Perm, PermHash> hgh;
  for (const Perm& a : h.elements()) {
    Perm ag = compose(a, g);
    for (const Perm& b : h.elements()) hgh.insert(compose(ag, b));
  }
  std::unordered_set<Perm, PermHash> hg1h;
  Perm gi = inverse(g);
  for (const Perm& a : h.elements()) {
    Perm ag = compose(a, gi);
    for (const Perm& b : h.elements()) hg1h.insert(compose(ag, b));
  }
  SetProductMeet out;
  out.double_coset_symmetric = (hgh == hg1h);
  // H<g> as a set: h * g^j over the cyclic group generated by g.
  std::unordered_set<Perm, PermHash> prod;
  std::uint64_t n = order_of(g);
  Perm pw(g.degree());
  for (std::uint64_t j = 0; j < n; ++j) {
    for (const Perm& a : h.elements()) prod.insert(compose(a, pw));
    pw = compose(pw, g);
  }
  std::uint64_t count = 0;
  for (const Perm& p : prod)
    if (hgh.count(p)) ++count;
  out.size = count;
  return out;
}

std::vector<std::pair<int, int>> pair_domain(int m) {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) out.emplace_back(i, j);
  return out;
}

Group induced_action_on_pairs(const Group& g) {
  int m = g.degree();
  if (m < 2)
    throw std::invalid_argument("induced_action_on_pairs: degree < 2");
  auto domain = pair_domain(m);
  std::vector<std::vector<int>> index(m, std::vector<int>(m, -1));
  for (std::size_t i = 0; i < domain.size(); ++i)
    index[domain[i].first][domain[i].second] = static_cast<int>(i);
  auto lift = [&](const Perm& p) {
    std::vector<int> img(domain.size());
    for (std::size_t i = 0; i < domain.size(); ++i) {
      int a = p[domain[i].first], b = p[domain[i].second];
      if (a > b) std::swap(a, b);
      img[i] = index[a][b];
    }
    return Perm(std::move(img));
  };
  std::vector<Perm> gens;
  gens.reserve(g.generators().size());
  for (const Perm& p : g.generators()) gens.push_back(lift(p));
  GroupOptions opts;
  opts.element_cap = g.element_cap();
  return Group(static_cast<int>(domain.size()), std::move(gens), opts);
}

}  // namespace bicirc
