#include "bicirc/graph_io.hpp"

#include <json.hpp>

#include "bicirc/errors.hpp"

namespace bicirc {

namespace {
constexpr std::size_t kMaxGraph6Order = 258047;  // 3-byte size form
}

std::string graph6_encode(const Graph& g) {
  std::size_t n = static_cast<std::size_t>(g.vertex_count());
  if (n > kMaxGraph6Order)
    throw std::invalid_argument("graph too large for the supported graph6 size forms");
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  }
  int group = 0, bits = 0;
  for (std::size_t v = 1; v < n; ++v) {
    for (std::size_t u = 0; u < v; ++u) {
      group = (group << 1) | (g.adjacent(static_cast<int>(u), static_cast<int>(v)) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(group + 63));
        group = 0;
        bits = 0;
      }
    }
  }
  if (bits > 0) out.push_back(static_cast<char>((group << (6 - bits)) + 63));
  return out;
}

Graph graph6_decode(const std::string& text) {
  std::size_t pos = 0;
  static const std::string kHeader = ">>graph6<<";
  if (text.compare(0, kHeader.size(), kHeader) == 0) pos = kHeader.size();
  auto need = [&](std::size_t k) {
    if (pos + k > text.size()) throw ParseError("truncated graph6 input", text.size());
  };
  auto value = [&](std::size_t at) {
    unsigned char c = static_cast<unsigned char>(text[at]);
    if (c < 63 || c > 126) throw ParseError("byte outside graph6 range 63..126", at);
    return static_cast<std::size_t>(c - 63);
  };
  need(1);
  std::size_t n;
  if (text[pos] == '~') {
    need(2);
    if (text[pos + 1] == '~')
      throw ParseError("8-byte graph6 size form not supported", pos);
    need(4);
    n = (value(pos + 1) << 12) | (value(pos + 2) << 6) | value(pos + 3);
    if (n <= 62) throw ParseError("non-canonical long size form", pos);
    pos += 4;
  } else {
    n = value(pos);
    pos += 1;
  }
  if (n == 0) throw ParseError("graph6 order 0 not supported", pos - 1);
  std::size_t nbits = n * (n - 1) / 2;
  std::size_t nbytes = (nbits + 5) / 6;
  if (text.size() - pos < nbytes) throw ParseError("truncated adjacency bits", text.size());
  if (text.size() - pos > nbytes) throw ParseError("trailing bytes after adjacency bits", pos + nbytes);
  std::vector<std::pair<int, int>> edges;
  std::size_t bit = 0;
  for (std::size_t v = 1; v < n; ++v) {
    for (std::size_t u = 0; u < v; ++u, ++bit) {
      std::size_t at = pos + bit / 6;
      std::size_t shift = 5 - bit % 6;
      if ((value(at) >> shift) & 1)
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
  }
  // Padding bits of the final byte must be zero.
  if (nbits % 6 != 0) {
    std::size_t last = pos + nbytes - 1;
    std::size_t pad = 6 - nbits % 6;
    if (value(last) & ((1u << pad) - 1))
      throw ParseError("nonzero padding bits", last);
  }
  return Graph(static_cast<int>(n), edges);
}

std::string to_edge_list_json(const Graph& g) {
  nlohmann::json j;
  j["n"] = g.vertex_count();
  auto arr = nlohmann::json::array();
  for (auto [u, v] : g.edges()) arr.push_back({u, v});
  j["edges"] = std::move(arr);
  return j.dump();
}

Graph from_edge_list_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("JSON syntax error: ") + e.what(), e.byte);
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
    throw ParseError("expected {\"n\": m, \"edges\": [[a,b],...]}", 0);
  if (!j["n"].is_number_integer() || j["n"].get<long long>() <= 0)
    throw ParseError("\"n\" must be a positive integer", 0);
  int n = j["n"].get<int>();
  std::vector<std::pair<int, int>> edges;
  if (!j["edges"].is_array()) throw ParseError("\"edges\" must be an array", 0);
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
        !e[1].is_number_integer())
      throw ParseError("edge entries must be [a, b] integer pairs", 0);
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  try {
    return Graph(n, edges);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), 0);
  }
}

}  // namespace bicirc
