#pragma once

// Reference implementations used only by the tests. Deliberately naive and
// written without the library so they can disagree with it.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using EdgeList = std::vector<std::pair<int, int>>;

inline bool has(const EdgeList& edges, int u, int v) {
  for (auto [x, y] : edges) {
    if ((x == u && y == v) || (x == v && y == u)) return true;
  }
  return false;
}

inline long automorphisms(int k, const EdgeList& edges) {
  std::vector<int> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  long count = 0;
  do {
    bool ok = true;
    for (auto [u, v] : edges) ok = ok && has(edges, perm[u], perm[v]);
    count += ok;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

// (n^k / Aut) sum over {a, mu, h_c}^k of prod p * prod f(x_s x_t / h_s^2),
// arguments above 1 evaluated at 1.
inline double tight_bound(int k, const EdgeList& edges, double a, double mu, double d, double hc, double hs,
                          double n, const std::function<double(double)>& f) {
  const double pa = d / (2 * (mu - a));
  const double ph = d / (2 * (hc - mu));
  const double x[3] = {a, mu, hc};
  const double p[3] = {pa, 1 - pa - ph, ph};
  std::vector<int> idx(k, 0);
  long double sum = 0;
  for (long t = 0; t < std::lround(std::pow(3, k)); ++t) {
    long r = t;
    for (int j = 0; j < k; ++j) idx[j] = r % 3, r /= 3;
    long double term = 1;
    for (int j = 0; j < k; ++j) term *= p[idx[j]];
    for (auto [u, v] : edges) term *= f(std::min(1.0, x[idx[u]] * x[idx[v]] / (hs * hs)));
    sum += term;
  }
  return static_cast<double>(std::pow(static_cast<long double>(n), k) * sum / automorphisms(k, edges));
}

struct SmallGraph {
  int n = 0;
  std::vector<std::vector<char>> adj;
  EdgeList edges;
};

inline SmallGraph gnp(int n, double p, std::mt19937_64& rng) {
  SmallGraph g;
  g.n = n;
  g.adj.assign(n, std::vector<char>(n, 0));
  std::bernoulli_distribution coin(p);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (coin(rng)) {
        g.adj[i][j] = g.adj[j][i] = 1;
        g.edges.emplace_back(i, j);
      }
    }
  }
  return g;
}

// Injective maps of the pattern into g preserving pattern edges, by trying
// every ordered k-tuple of distinct vertices.
inline std::uint64_t embeddings(const SmallGraph& g, int k, const EdgeList& pattern) {
  std::vector<int> pick(k);
  std::uint64_t total = 0;
  std::function<void(int)> go = [&](int depth) {
    if (depth == k) {
      for (auto [u, v] : pattern) {
        if (!g.adj[pick[u]][pick[v]]) return;
      }
      ++total;
      return;
    }
    for (int x = 0; x < g.n; ++x) {
      if (std::find(pick.begin(), pick.begin() + depth, x) != pick.begin() + depth) continue;
      pick[depth] = x;
      go(depth + 1);
    }
  };
  go(0);
  return total;
}

inline std::uint64_t copies(const SmallGraph& g, int k, const EdgeList& pattern) {
  return embeddings(g, k, pattern) / automorphisms(k, pattern);
}

inline std::uint64_t triangles(const SmallGraph& g) {
  std::uint64_t c = 0;
  for (int i = 0; i < g.n; ++i)
    for (int j = i + 1; j < g.n; ++j)
      for (int l = j + 1; l < g.n; ++l) c += g.adj[i][j] && g.adj[j][l] && g.adj[i][l];
  return c;
}

// Connected graphs on k labelled vertices up to isomorphism, as edge lists.
inline std::vector<EdgeList> connected_graphs(int k) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) pairs.emplace_back(i, j);
  std::set<std::vector<std::pair<int, int>>> seen;
  std::vector<EdgeList> out;
  for (unsigned mask = 1; mask < (1u << pairs.size()); ++mask) {
    EdgeList e;
    for (std::size_t b = 0; b < pairs.size(); ++b) {
      if (mask >> b & 1u) e.push_back(pairs[b]);
    }
    std::vector<int> comp(k);
    std::iota(comp.begin(), comp.end(), 0);
    for (bool changed = true; changed;) {
      changed = false;
      for (auto [u, v] : e) {
        const int m = std::min(comp[u], comp[v]);
        if (comp[u] != m || comp[v] != m) comp[u] = comp[v] = m, changed = true;
      }
    }
    if (std::any_of(comp.begin(), comp.end(), [](int c) { return c != 0; })) continue;
    std::vector<int> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::pair<int, int>> best;
    bool first = true;
    do {
      std::vector<std::pair<int, int>> r;
      for (auto [u, v] : e) r.emplace_back(std::min(perm[u], perm[v]), std::max(perm[u], perm[v]));
      std::sort(r.begin(), r.end());
      if (first || r < best) best = r, first = false;
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (seen.insert(best).second) out.push_back(e);
  }
  return out;
}

// Composite Simpson on [lo, hi] in log-space (h = e^s), suited to power laws.
inline double log_simpson(const std::function<double(double)>& g, double lo, double hi, int panels = 200000) {
  const double s0 = std::log(lo), s1 = std::log(hi);
  const double step = (s1 - s0) / panels;
  long double sum = 0;
  for (int i = 0; i <= panels; ++i) {
    const double s = s0 + i * step;
    const double w = (i == 0 || i == panels) ? 1 : (i % 2 ? 4 : 2);
    sum += w * g(std::exp(s)) * std::exp(s);
  }
  return static_cast<double>(sum * step / 3);
}

inline double loglog_slope(const std::vector<double>& xs, const std::vector<double>& ys) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double m = static_cast<double>(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double x = std::log(xs[i]), y = std::log(ys[i]);
    sx += x, sy += y, sxx += x * x, sxy += x * y;
  }
  return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

inline std::vector<double> log_grid(double lo, double hi, int points) {
  std::vector<double> out;
  for (int i = 0; i < points; ++i) {
    out.push_back(std::pow(10.0, std::log10(lo) + (std::log10(hi) - std::log10(lo)) * i / (points - 1)));
  }
  return out;
}

}  // namespace oracle
