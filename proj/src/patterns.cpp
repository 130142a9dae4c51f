#include "robustsub/patterns.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <cmath>
#include <numeric>
#include <sstream>

#include "robustsub/error.hpp"

namespace robustsub {

namespace {

constexpr int pair_bit(int u, int v) {
  if (u > v) std::swap(u, v);
  return v * (v - 1) / 2 + u;
}

std::uint32_t relabelled_code(const Pattern& p, std::span<const int> perm) {
  std::uint32_t code = 0;
  for (const auto& [u, v] : p.edges()) code |= 1u << pair_bit(perm[u], perm[v]);
  return code;
}

struct NamedShape {
  const char* name;
  int k;
  std::vector<PatternEdge> edges;
};

const std::vector<NamedShape>& named_shapes() {
  static const std::vector<NamedShape> shapes = {
      {"edge", 2, {{0, 1}}},
      {"p3", 3, {{0, 1}, {1, 2}}},
      {"triangle", 3, {{0, 1}, {1, 2}, {0, 2}}},
      {"p4", 4, {{0, 1}, {1, 2}, {2, 3}}},
      {"claw", 4, {{0, 1}, {0, 2}, {0, 3}}},
      {"c4", 4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}},
      {"paw", 4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}}},
      {"diamond", 4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 2}}},
      {"k4", 4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}},
      {"p5", 5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}}},
      {"star5", 5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}}},
      {"fork", 5, {{0, 1}, {1, 2}, {2, 3}, {2, 4}}},
      {"c5", 5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}}},
      {"bull", 5, {{0, 1}, {1, 2}, {0, 2}, {1, 3}, {2, 4}}},
      {"house", 5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {2, 4}, {3, 4}}},
      {"w4", 5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 0}, {4, 1}, {4, 2}, {4, 3}}},
      {"k5-e", 5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}}},
      {"k5", 5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}},
  };
  return shapes;
}

int parse_int(std::string_view s) {
  int value = 0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw Error(ErrorCode::InvalidArgument, "expected an integer, got '" + std::string(s) + "'");
  }
  return value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Pattern Pattern::from_edges(int k, std::span<const PatternEdge> edges, std::string name) {
  if (k < 2 || k > kMaxVertices) {
    throw Error(ErrorCode::VertexOutOfRange, "pattern size must be in [2, 8], got " + std::to_string(k));
  }
  Pattern p;
  p.k_ = k;
  p.name_ = std::move(name);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= k || v >= k) {
      throw Error(ErrorCode::VertexOutOfRange, "edge " + std::to_string(u) + "-" + std::to_string(v) +
                                                    " outside {0.." + std::to_string(k - 1) + "}");
    }
    if (u == v) throw Error(ErrorCode::NotSimple, "self-loop at vertex " + std::to_string(u));
    if (p.adj_[u] >> v & 1u) {
      throw Error(ErrorCode::NotSimple, "duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
    }
    p.adj_[u] |= static_cast<std::uint8_t>(1u << v);
    p.adj_[v] |= static_cast<std::uint8_t>(1u << u);
    p.edges_.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(p.edges_.begin(), p.edges_.end());

  std::uint32_t seen = 1u, frontier = 1u;
  while (frontier) {
    std::uint32_t next = 0;
    for (int u = 0; u < k; ++u) {
      if (frontier >> u & 1u) next |= p.adj_[u];
    }
    frontier = next & ~seen;
    seen |= next;
  }
  if (seen != (1u << k) - 1u) {
    throw Error(ErrorCode::NotConnected, "pattern " + p.literal() + " is not connected");
  }
  return p;
}

int Pattern::degree(int u) const noexcept { return std::popcount(static_cast<unsigned>(adj_[u])); }

std::string Pattern::literal() const {
  std::ostringstream os;
  os << "k=" << k_ << ";edges=";
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (i) os << ',';
    os << edges_[i].first << '-' << edges_[i].second;
  }
  return os.str();
}

std::uint32_t Pattern::edge_code() const noexcept {
  std::uint32_t code = 0;
  for (const auto& [u, v] : edges_) code |= 1u << pair_bit(u, v);
  return code;
}

bool operator==(const Pattern& a, const Pattern& b) {
  return a.k() == b.k() && a.edges() == b.edges();
}

std::uint64_t automorphism_count(const Pattern& p) {
  std::vector<int> perm(static_cast<std::size_t>(p.k()));
  std::iota(perm.begin(), perm.end(), 0);
  const std::uint32_t code = p.edge_code();
  std::uint64_t count = 0;
  do {
    if (relabelled_code(p, perm) == code) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

DegreeStats degree_stats(const Pattern& p) {
  DegreeStats s;
  s.e_h = static_cast<int>(p.edge_count());
  for (int u = 0; u < p.k(); ++u) s.degrees.push_back(p.degree(u));
  for (int u = 0; u < p.k(); ++u) {
    const int d = s.degrees[u];
    if (d == 1) {
      ++s.n1;
    } else if (d == 2) {
      ++s.n2;
      for (int v = 0; v < p.k(); ++v) {
        if (p.adjacent(u, v) && s.degrees[v] == 1) {
          ++s.n2_1;
          break;
        }
      }
    } else {
      ++s.n_ge3;
    }
  }
  for (const auto& [u, v] : p.edges()) {
    if (s.degrees[u] >= 3 && s.degrees[v] >= 3) ++s.e_ge3_ge3;
  }
  return s;
}

std::uint32_t canonical_code(const Pattern& p) {
  std::vector<int> perm(static_cast<std::size_t>(p.k()));
  std::iota(perm.begin(), perm.end(), 0);
  std::uint32_t best = p.edge_code();
  do {
    best = std::min(best, relabelled_code(p, perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

bool isomorphic(const Pattern& a, const Pattern& b) {
  return a.k() == b.k() && a.edge_count() == b.edge_count() && canonical_code(a) == canonical_code(b);
}

std::vector<Pattern> catalog(int k) {
  if (k < 3 || k > 5) throw Error(ErrorCode::InvalidArgument, "catalog size must be 3, 4 or 5");

  std::vector<PatternEdge> pairs;
  for (int v = 1; v < k; ++v) {
    for (int u = 0; u < v; ++u) pairs.emplace_back(u, v);
  }
  std::vector<std::pair<std::uint32_t, Pattern>> found;
  std::vector<PatternEdge> chosen;
  const std::uint32_t subsets = 1u << pairs.size();
  for (std::uint32_t mask = 1; mask < subsets; ++mask) {
    chosen.clear();
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if (mask >> i & 1u) chosen.push_back(pairs[i]);
    }
    if (chosen.size() + 1 < static_cast<std::size_t>(k)) continue;
    try {
      Pattern p = Pattern::from_edges(k, chosen);
      const std::uint32_t canon = canonical_code(p);
      // pair_bit matches the pair ordering above, so mask == edge code.
      if (canon == mask) found.emplace_back(canon, std::move(p));
    } catch (const Error&) {
      // disconnected subset
    }
  }
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
    if (a.second.edge_count() != b.second.edge_count()) {
      return a.second.edge_count() < b.second.edge_count();
    }
    return a.first < b.first;
  });

  std::vector<Pattern> out;
  for (auto& [code, p] : found) {
    for (const auto& shape : named_shapes()) {
      if (shape.k != k) continue;
      if (canonical_code(Pattern::from_edges(shape.k, shape.edges)) == code) {
        p.set_name(shape.name);
        break;
      }
    }
    if (p.name().empty()) p.set_name("g" + std::to_string(k) + "-" + std::to_string(out.size()));
    out.push_back(std::move(p));
  }
  return out;
}

double leading_constant(const Pattern& p, double c) {
  const DegreeStats s = degree_stats(p);
  return std::pow(c, s.n1) / static_cast<double>(automorphism_count(p));
}

Pattern complete_pattern(int k) {
  std::vector<PatternEdge> edges;
  for (int u = 0; u < k; ++u) {
    for (int v = u + 1; v < k; ++v) edges.emplace_back(u, v);
  }
  return Pattern::from_edges(k, edges, k == 3 ? "triangle" : "k" + std::to_string(k));
}

Pattern parse_pattern(std::string_view text) {
  text = trim(text);
  for (const auto& shape : named_shapes()) {
    if (text == shape.name) return Pattern::from_edges(shape.k, shape.edges, shape.name);
  }
  if (text == "k3") return parse_pattern("triangle");
  if (text == "k2") return parse_pattern("edge");
  if (text.size() >= 2 && text[0] == 'k' && std::all_of(text.begin() + 1, text.end(), ::isdigit)) {
    return complete_pattern(parse_int(text.substr(1)));
  }

  if (const auto colon = text.find(':'); colon != std::string_view::npos &&
                                         text.find('=') == std::string_view::npos) {
    const int k = parse_int(text.substr(0, colon));
    const int idx = parse_int(text.substr(colon + 1));
    auto all = catalog(k);
    if (idx < 0 || idx >= static_cast<int>(all.size())) {
      throw Error(ErrorCode::InvalidArgument, "catalog index out of range: " + std::string(text));
    }
    return all[static_cast<std::size_t>(idx)];
  }

  if (text.starts_with("k=")) {
    const auto semi = text.find(';');
    if (semi == std::string_view::npos) {
      throw Error(ErrorCode::InvalidArgument, "pattern literal needs ';edges=': " + std::string(text));
    }
    const int k = parse_int(trim(text.substr(2, semi - 2)));
    std::string_view rest = trim(text.substr(semi + 1));
    if (!rest.starts_with("edges=")) {
      throw Error(ErrorCode::InvalidArgument, "pattern literal needs ';edges=': " + std::string(text));
    }
    rest.remove_prefix(6);
    std::vector<PatternEdge> edges;
    while (!rest.empty()) {
      const auto comma = rest.find(',');
      std::string_view item = trim(rest.substr(0, comma));
      rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
      const auto dash = item.find('-');
      if (dash == std::string_view::npos) {
        throw Error(ErrorCode::InvalidArgument, "bad edge '" + std::string(item) + "'");
      }
      edges.emplace_back(parse_int(trim(item.substr(0, dash))), parse_int(trim(item.substr(dash + 1))));
    }
    Pattern p = Pattern::from_edges(k, edges);
    for (const auto& shape : named_shapes()) {
      if (shape.k == k && isomorphic(p, Pattern::from_edges(shape.k, shape.edges))) {
        p.set_name(shape.name);
        break;
      }
    }
    return p;
  }
  throw Error(ErrorCode::InvalidArgument, "unknown pattern '" + std::string(text) + "'");
}

}  // namespace robustsub
