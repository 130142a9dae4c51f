#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace robustsub {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

// Simple undirected graph in compressed sparse row form; neighbour lists are
// sorted and symmetric.
class Graph {
 public:
  struct BuildReport {
    std::size_t self_loops = 0;
    std::size_t duplicates = 0;
  };

  Graph() = default;

  // Self-loops and repeated edges are dropped and counted in report.
  static Graph from_edges(std::size_t n, std::vector<Edge> edges, BuildReport* report = nullptr);

  std::size_t n() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t edge_count() const noexcept { return neighbors_.size() / 2; }
  std::size_t degree(Vertex v) const noexcept { return offsets_[v + 1] - offsets_[v]; }
  std::span<const Vertex> neighbors(Vertex v) const noexcept {
    return {neighbors_.data() + offsets_[v], degree(v)};
  }
  bool has_edge(Vertex u, Vertex v) const;
  std::size_t max_degree() const;

  // Each edge once, as (u, v) with u < v, in increasing order.
  std::vector<Edge> edges() const;

 private:
  std::vector<std::size_t> offsets_;
  std::vector<Vertex> neighbors_;
};

struct EdgeListData {
  Graph graph;
  std::vector<std::uint64_t> original_ids;  // dense id -> id in the file
  std::size_t self_loops = 0;
  std::size_t duplicates = 0;
  std::size_t lines = 0;
};

// One edge per line as two whitespace-separated non-negative integers; extra
// columns are ignored and lines starting with '#' or '%' are comments. IDs are
// remapped densely in increasing order of the original id.
EdgeListData read_edge_list(std::istream& in);
EdgeListData read_edge_list_file(const std::string& path);

void write_edge_list(std::ostream& out, const Graph& g);

}  // namespace robustsub
