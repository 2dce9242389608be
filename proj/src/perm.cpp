#include "bicirc/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "bicirc/errors.hpp"

namespace bicirc {

Perm::Perm(int degree) : images_(degree) {
  if (degree < 0) throw std::invalid_argument("negative permutation degree");
  std::iota(images_.begin(), images_.end(), 0);
}

Perm::Perm(std::vector<int> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size(), 0);
  for (int x : images_) {
    if (x < 0 || x >= degree() || seen[x])
      throw std::invalid_argument("image table is not a bijection");
    seen[x] = 1;
  }
}

Perm Perm::from_cycles(int degree, const std::vector<std::vector<int>>& cycs) {
  std::vector<int> img(degree);
  std::iota(img.begin(), img.end(), 0);
  std::vector<char> seen(degree, 0);
  for (const auto& c : cycs) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      int from = c[i], to = c[(i + 1) % c.size()];
      if (from < 0 || from >= degree)
        throw std::invalid_argument("cycle point out of range");
      if (seen[from]) throw std::invalid_argument("cycles are not disjoint");
      seen[from] = 1;
      img[from] = to;
    }
  }
  return Perm(std::move(img));
}

bool Perm::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Perm compose(const Perm& p, const Perm& q) {
  if (p.degree() != q.degree())
    throw std::invalid_argument("compose: degree mismatch");
  std::vector<int> img(p.degree());
  for (int i = 0; i < p.degree(); ++i) img[i] = q[p[i]];
  return Perm(std::move(img));
}

Perm operator*(const Perm& p, const Perm& q) { return compose(p, q); }

Perm inverse(const Perm& p) {
  std::vector<int> img(p.degree());
  for (int i = 0; i < p.degree(); ++i) img[p[i]] = i;
  return Perm(std::move(img));
}

Perm conjugate(const Perm& p, const Perm& g) {
  if (p.degree() != g.degree())
    throw std::invalid_argument("conjugate: degree mismatch");
  // x -> g^-1(x) -> p -> g, computed directly without forming g^-1.
  std::vector<int> img(p.degree());
  for (int x = 0; x < p.degree(); ++x) img[g[x]] = g[p[x]];
  return Perm(std::move(img));
}

std::vector<int> cycle_type(const Perm& p) {
  std::vector<int> lens;
  std::vector<char> seen(p.degree(), 0);
  for (int i = 0; i < p.degree(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (int x = i; !seen[x]; x = p[x]) {
      seen[x] = 1;
      ++len;
    }
    lens.push_back(len);
  }
  std::sort(lens.begin(), lens.end());
  return lens;
}

std::vector<std::vector<int>> cycles(const Perm& p) {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(p.degree(), 0);
  for (int i = 0; i < p.degree(); ++i) {
    if (seen[i] || p[i] == i) {
      seen[i] = 1;
      continue;
    }
    std::vector<int> c;
    for (int x = i; !seen[x]; x = p[x]) {
      seen[x] = 1;
      c.push_back(x);
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::uint64_t order_of(const Perm& p) {
  std::uint64_t ord = 1;
  for (int len : cycle_type(p)) ord = std::lcm(ord, static_cast<std::uint64_t>(len));
  return ord;
}

bool is_semiregular(const Perm& p) {
  auto t = cycle_type(p);
  return t.empty() || t.front() == t.back();
}

bool semiregular_with_two_equal_orbits(const Perm& p, OrbitPair* out) {
  auto t = cycle_type(p);
  if (t.size() != 2 || t[0] != t[1]) return false;
  if (out) {
    auto cs = cycles(p);
    out->first = cs[0];
    out->second = cs[1];
  }
  return true;
}

std::string to_cycle_string(const Perm& p) {
  auto cs = cycles(p);
  if (cs.empty()) return "()";
  std::ostringstream os;
  for (const auto& c : cs) {
    os << '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) os << ',';
      os << c[i] + 1;
    }
    os << ')';
  }
  return os.str();
}

Perm parse_perm(const std::string& text, int degree) {
  std::vector<std::vector<int>> cycs;
  std::size_t i = 0;
  int max_point = -1;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (i == text.size()) throw ParseError("empty permutation", i);
  while (i < text.size()) {
    skip_ws();
    if (i == text.size()) break;
    if (text[i] != '(') throw ParseError("expected '('", i);
    ++i;
    std::vector<int> cyc;
    while (true) {
      skip_ws();
      if (i == text.size()) throw ParseError("unterminated cycle", i);
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw ParseError("expected point or ')'", i);
      int v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        v = v * 10 + (text[i++] - '0');
      if (v == 0) throw ParseError("points are 1-indexed", i - 1);
      cyc.push_back(v - 1);
      max_point = std::max(max_point, v - 1);
      skip_ws();
      if (i < text.size() && text[i] == ',') ++i;
    }
    if (!cyc.empty()) cycs.push_back(std::move(cyc));
  }
  skip_ws();
  if (i != text.size()) throw ParseError("trailing input", i);
  if (degree > 0 && max_point >= degree)
    throw ParseError("point exceeds requested degree", 0);
  int deg = std::max(degree, max_point + 1);
  try {
    return Perm::from_cycles(deg, cycs);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), 0);
  }
}

}  // namespace bicirc
