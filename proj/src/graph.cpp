#include "robustsub/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>

#include "robustsub/error.hpp"

namespace robustsub {

Graph Graph::from_edges(std::size_t n, std::vector<Edge> edges, BuildReport* report) {
  BuildReport local;
  std::vector<Edge> clean;
  clean.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) {
      throw Error(ErrorCode::VertexOutOfRange, "edge endpoint outside [0, " + std::to_string(n) + ")");
    }
    if (u == v) {
      ++local.self_loops;
      continue;
    }
    clean.emplace_back(std::min(u, v), std::max(u, v));
  }
  edges.clear();
  edges.shrink_to_fit();
  std::sort(clean.begin(), clean.end());
  const auto last = std::unique(clean.begin(), clean.end());
  local.duplicates = static_cast<std::size_t>(clean.end() - last);
  clean.erase(last, clean.end());

  Graph g;
  g.offsets_.assign(n + 1, 0);
  for (const auto& [u, v] : clean) {
    ++g.offsets_[u + 1];
    ++g.offsets_[v + 1];
  }
  for (std::size_t i = 0; i < n; ++i) g.offsets_[i + 1] += g.offsets_[i];
  g.neighbors_.resize(2 * clean.size());
  std::vector<std::size_t> pos(g.offsets_.begin(), g.offsets_.end() - 1);
  // clean is sorted by (u, v): appending v to u and u to v keeps both lists sorted.
  for (const auto& [u, v] : clean) g.neighbors_[pos[v]++] = u;
  for (const auto& [u, v] : clean) g.neighbors_[pos[u]++] = v;
  for (std::size_t v = 0; v < n; ++v) {
    auto first = g.neighbors_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]);
    auto end = g.neighbors_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]);
    if (!std::is_sorted(first, end)) std::sort(first, end);
  }
  if (report) *report = local;
  return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (degree(u) > degree(v)) std::swap(u, v);
  const auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::size_t Graph::max_degree() const {
  std::size_t best = 0;
  for (Vertex v = 0; v < n(); ++v) best = std::max(best, degree(v));
  return best;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (Vertex u = 0; u < n(); ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

namespace {

bool parse_u64(std::string_view& s, std::uint64_t& out) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == ',')) s.remove_prefix(1);
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  if (ec != std::errc()) return false;
  s.remove_prefix(static_cast<std::size_t>(ptr - s.data()));
  return s.empty() || s.front() == ' ' || s.front() == '\t' || s.front() == ',' || s.front() == '\r';
}

}  // namespace

EdgeListData read_edge_list(std::istream& in) {
  EdgeListData data;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> raw;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view s(line);
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    if (s.empty() || s.front() == '#' || s.front() == '%' || s.front() == '\r') continue;
    std::uint64_t u = 0, v = 0;
    if (!parse_u64(s, u) || !parse_u64(s, v)) {
      throw Error(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": expected two non-negative integer ids");
    }
    raw.emplace_back(u, v);
  }
  data.lines = lineno;

  std::vector<std::uint64_t> ids;
  ids.reserve(raw.size() * 2);
  for (const auto& [u, v] : raw) {
    ids.push_back(u);
    ids.push_back(v);
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  auto dense = [&](std::uint64_t id) {
    return static_cast<Vertex>(std::lower_bound(ids.begin(), ids.end(), id) - ids.begin());
  };
  std::vector<Edge> edges;
  edges.reserve(raw.size());
  for (const auto& [u, v] : raw) edges.emplace_back(dense(u), dense(v));

  Graph::BuildReport report;
  data.graph = Graph::from_edges(ids.size(), std::move(edges), &report);
  data.self_loops = report.self_loops;
  data.duplicates = report.duplicates;
  data.original_ids = std::move(ids);
  return data;
}

EdgeListData read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

}  // namespace robustsub
