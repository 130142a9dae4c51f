#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace robustsub {

using PatternEdge = std::pair<int, int>;

// A small connected simple undirected graph on vertices {0..k-1}, 2 <= k <= 8.
class Pattern {
 public:
  static constexpr int kMaxVertices = 8;

  // Throws NotSimple, NotConnected or VertexOutOfRange.
  static Pattern from_edges(int k, std::span<const PatternEdge> edges, std::string name = {});

  int k() const noexcept { return k_; }
  // Sorted, each pair (u, v) with u < v.
  const std::vector<PatternEdge>& edges() const noexcept { return edges_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::string& name() const noexcept { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  bool adjacent(int u, int v) const noexcept { return (adj_[u] >> v) & 1u; }
  std::uint8_t neighbor_mask(int u) const noexcept { return adj_[u]; }
  int degree(int u) const noexcept;

  // Literal syntax: "k=4;edges=0-1,1-2,2-3".
  std::string literal() const;
  // Bitmask over the k(k-1)/2 vertex pairs, pair (u,v) u<v at a fixed index.
  std::uint32_t edge_code() const noexcept;

 private:
  Pattern() = default;

  int k_ = 0;
  std::vector<PatternEdge> edges_;
  std::array<std::uint8_t, kMaxVertices> adj_{};
  std::string name_;
};

bool operator==(const Pattern& a, const Pattern& b);

struct DegreeStats {
  std::vector<int> degrees;
  int e_h = 0;        // |E_H|
  int n1 = 0;         // degree-1 vertices
  int n2 = 0;         // degree-2 vertices
  int n2_1 = 0;       // degree-2 vertices adjacent to a degree-1 vertex
  int n_ge3 = 0;      // vertices of degree >= 3
  int e_ge3_ge3 = 0;  // edges with both endpoints of degree >= 3
};

std::uint64_t automorphism_count(const Pattern& p);
DegreeStats degree_stats(const Pattern& p);

// Edge code of the lexicographically smallest relabelling; equal for
// isomorphic patterns.
std::uint32_t canonical_code(const Pattern& p);
bool isomorphic(const Pattern& a, const Pattern& b);

// All connected simple graphs on k vertices up to isomorphism, k in {3,4,5}.
// Ordered by edge count, then canonical code. Well-known shapes are named
// ("p3", "triangle", "p4", "claw", "c4", "paw", "diamond", "k4", ...);
// the rest are named "g5-<index>".
std::vector<Pattern> catalog(int k);

// c^{n1} / Aut(H).
double leading_constant(const Pattern& p, double c);

Pattern complete_pattern(int k);

// Built-in name, catalog address "<k>:<index>", or a literal
// "k=..;edges=..". Throws InvalidArgument for unknown names.
Pattern parse_pattern(std::string_view text);

}  // namespace robustsub
