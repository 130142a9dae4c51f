#include "robustsub/motifs.hpp"

#include <algorithm>
#include <array>
#include <iterator>
#include <atomic>
#include <cmath>
#include <limits>
#include <thread>

#include "robustsub/bounds.hpp"
#include "robustsub/error.hpp"

namespace robustsub {

namespace {

constexpr std::size_t kParallelMinVertices = 2048;

unsigned worker_count(unsigned requested, std::size_t n) {
  if (n < kParallelMinVertices) return 1;
  unsigned t = requested ? requested : std::thread::hardware_concurrency();
  return std::max(1u, t);
}

// Runs body(v) for every vertex v and sums the results. Vertices are handed
// out in small chunks; integer addition keeps the total independent of the
// schedule.
template <class Body>
std::uint64_t sum_over_vertices(std::size_t n, unsigned threads, Body body) {
  if (threads <= 1) {
    std::uint64_t total = 0;
    for (std::size_t v = 0; v < n; ++v) total += body(static_cast<Vertex>(v));
    return total;
  }
  constexpr std::size_t kChunk = 64;
  std::atomic<std::size_t> next{0};
  std::vector<std::uint64_t> partial(threads, 0);
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      std::uint64_t local = 0;
      for (std::size_t begin; (begin = next.fetch_add(kChunk)) < n;) {
        const std::size_t end = std::min(n, begin + kChunk);
        for (std::size_t v = begin; v < end; ++v) local += body(static_cast<Vertex>(v));
      }
      partial[t] = local;
    });
  }
  for (auto& th : pool) th.join();
  std::uint64_t total = 0;
  for (auto x : partial) total += x;
  return total;
}

// Each edge kept once, pointing from lower to higher (degree, id) rank.
struct Oriented {
  std::vector<std::size_t> offsets;
  std::vector<Vertex> out;

  std::span<const Vertex> of(Vertex v) const { return {out.data() + offsets[v], offsets[v + 1] - offsets[v]}; }
};

Oriented orient(const Graph& g) {
  const std::size_t n = g.n();
  auto before = [&](Vertex a, Vertex b) {
    const auto da = g.degree(a), db = g.degree(b);
    return da < db || (da == db && a < b);
  };
  Oriented o;
  o.offsets.assign(n + 1, 0);
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex w : g.neighbors(v)) o.offsets[v + 1] += before(v, w);
  }
  for (std::size_t v = 0; v < n; ++v) o.offsets[v + 1] += o.offsets[v];
  o.out.resize(o.offsets[n]);
  for (Vertex v = 0; v < n; ++v) {
    std::size_t pos = o.offsets[v];
    for (Vertex w : g.neighbors(v)) {
      if (before(v, w)) o.out[pos++] = w;
    }
  }
  return o;
}

std::size_t intersection_size(std::span<const Vertex> a, std::span<const Vertex> b) {
  std::size_t count = 0;
  auto i = a.begin(), j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++count, ++i, ++j;
    }
  }
  return count;
}

// Search plan for the generic backtracking: pattern vertices in an order where
// each one after the first touches an earlier one.
struct Plan {
  int k = 0;
  std::vector<int> order;
  std::vector<int> degree;                // pattern degree at each position
  std::vector<int> anchor;                // earlier position whose neighbours are candidates
  std::vector<std::vector<int>> checks;   // other earlier positions that must be adjacent
};

Plan make_plan(const Pattern& p) {
  const int k = p.k();
  Plan plan;
  plan.k = k;
  std::vector<bool> placed(static_cast<std::size_t>(k), false);
  int first = 0;
  for (int v = 1; v < k; ++v) {
    if (p.degree(v) > p.degree(first)) first = v;
  }
  plan.order.push_back(first);
  placed[first] = true;
  while (static_cast<int>(plan.order.size()) < k) {
    int best = -1, best_links = -1;
    for (int v = 0; v < k; ++v) {
      if (placed[v]) continue;
      int links = 0;
      for (int u : plan.order) links += p.adjacent(u, v);
      if (links > best_links || (links == best_links && p.degree(v) > p.degree(best))) {
        best = v;
        best_links = links;
      }
    }
    plan.order.push_back(best);
    placed[best] = true;
  }
  plan.degree.resize(k);
  plan.anchor.assign(k, -1);
  plan.checks.assign(k, {});
  for (int i = 0; i < k; ++i) {
    plan.degree[i] = p.degree(plan.order[i]);
    for (int j = 0; j < i; ++j) {
      if (!p.adjacent(plan.order[i], plan.order[j])) continue;
      if (plan.anchor[i] < 0) {
        plan.anchor[i] = j;
      } else {
        plan.checks[i].push_back(j);
      }
    }
  }
  return plan;
}

// Embeddings with the first pattern vertex mapped to root.
std::uint64_t embeddings_from(const Graph& g, const Plan& plan, Vertex root) {
  if (static_cast<int>(g.degree(root)) < plan.degree[0]) return 0;
  std::array<Vertex, 8> image{};
  image[0] = root;
  auto fits = [&](int depth, Vertex c) {
    if (static_cast<int>(g.degree(c)) < plan.degree[depth]) return false;
    for (int j = 0; j < depth; ++j) {
      if (image[j] == c) return false;
    }
    for (int j : plan.checks[depth]) {
      if (!g.has_edge(image[j], c)) return false;
    }
    return true;
  };
  auto recurse = [&](auto&& self, int depth) -> std::uint64_t {
    std::uint64_t total = 0;
    const bool last = depth == plan.k - 1;
    for (Vertex c : g.neighbors(image[plan.anchor[depth]])) {
      if (!fits(depth, c)) continue;
      if (last) {
        ++total;
      } else {
        image[depth] = c;
        total += self(self, depth + 1);
      }
    }
    return total;
  };
  return plan.k == 1 ? 1 : recurse(recurse, 1);
}

bool is_complete(const Pattern& p) {
  return static_cast<int>(p.edge_count()) == p.k() * (p.k() - 1) / 2;
}

}  // namespace

std::uint64_t count_triangles(const Graph& g) {
  const Oriented o = orient(g);
  return sum_over_vertices(g.n(), worker_count(0, g.n()), [&](Vertex u) {
    std::uint64_t c = 0;
    for (Vertex v : o.of(u)) c += intersection_size(o.of(u), o.of(v));
    return c;
  });
}

std::uint64_t count_k4(const Graph& g) {
  const Oriented o = orient(g);
  return sum_over_vertices(g.n(), worker_count(0, g.n()), [&](Vertex u) {
    std::uint64_t c = 0;
    std::vector<Vertex> common;
    for (Vertex v : o.of(u)) {
      common.clear();
      std::set_intersection(o.of(u).begin(), o.of(u).end(), o.of(v).begin(), o.of(v).end(),
                            std::back_inserter(common));
      for (Vertex w : common) c += intersection_size(o.of(w), common);
    }
    return c;
  });
}

std::uint64_t count_copies(const Graph& g, const Pattern& pattern, unsigned threads) {
  if (pattern.k() > 5) throw Error(ErrorCode::PatternTooLarge, "counting supports patterns with k <= 5");
  if (pattern.k() == 3 && is_complete(pattern)) return count_triangles(g);
  if (pattern.k() == 4 && is_complete(pattern)) return count_k4(g);
  const Plan plan = make_plan(pattern);
  const std::uint64_t maps = sum_over_vertices(g.n(), worker_count(threads, g.n()),
                                               [&](Vertex v) { return embeddings_from(g, plan, v); });
  return maps / automorphism_count(pattern);
}

SummaryStats summary_stats(const Graph& g) {
  const std::size_t n = g.n();
  if (n == 0) throw Error(ErrorCode::EmptyGraph, "graph has no vertices");
  SummaryStats s;
  s.n = n;
  s.mu = 2.0 * static_cast<double>(g.edge_count()) / static_cast<double>(n);
  s.h_min = std::numeric_limits<double>::infinity();
  double abs_sum = 0.0, sq_sum = 0.0;
  for (Vertex v = 0; v < n; ++v) {
    const double deg = static_cast<double>(g.degree(v));
    abs_sum += std::abs(deg - s.mu);
    sq_sum += (deg - s.mu) * (deg - s.mu);
    s.h_max = std::max(s.h_max, deg);
    s.h_min = std::min(s.h_min, deg);
  }
  s.mad = abs_sum / static_cast<double>(n);
  s.sigma2 = sq_sum / static_cast<double>(n);
  if (s.mad > std::sqrt(s.sigma2) * (1.0 + 1e-12) + 1e-12) {
    throw Error(ErrorCode::PreconditionViolated, "degree MAD exceeds the standard deviation");
  }
  return s;
}

std::string_view to_string(CutoffChoice c) { return c == CutoffChoice::SqrtMuN ? "sqrt-mu-n" : "h-max"; }
std::string_view to_string(BoundVariant v) { return v == BoundVariant::MAD ? "mad" : "variance"; }

CutoffChoice parse_cutoff(std::string_view s) {
  if (s == "sqrt-mu-n") return CutoffChoice::SqrtMuN;
  if (s == "h-max") return CutoffChoice::HMax;
  throw Error(ErrorCode::InvalidArgument, "cutoff must be sqrt-mu-n or h-max, got '" + std::string(s) + "'");
}

BoundVariant parse_variant(std::string_view s) {
  if (s == "mad") return BoundVariant::MAD;
  if (s == "variance") return BoundVariant::VarianceMAD;
  throw Error(ErrorCode::InvalidArgument, "variant must be mad or variance, got '" + std::string(s) + "'");
}

RatioReport bound_ratio(const Graph& g, std::span<const Pattern> patterns, const RatioOptions& options) {
  RatioReport rep;
  rep.cutoff = options.cutoff;
  rep.variant = options.variant;
  rep.stats = summary_stats(g);
  const double mu = options.mu.value_or(rep.stats.mu);
  const double sigma2 = options.sigma2.value_or(rep.stats.sigma2);
  const double n = options.n.value_or(static_cast<double>(rep.stats.n));
  const double canonical = std::sqrt(mu * n);
  rep.h_c = options.cutoff == CutoffChoice::SqrtMuN ? canonical : rep.stats.h_max;
  if (options.variant == BoundVariant::MAD) {
    rep.d = options.d.value_or(rep.stats.mad);
  } else {
    rep.d = options.d.value_or(rep.h_c > 1.0 ? 2.0 * sigma2 / (rep.h_c - 1.0) : 0.0);
  }

  for (const Pattern& p : patterns) {
    RatioEntry e;
    e.pattern = p.name().empty() ? p.literal() : p.name();
    e.observed = count_copies(g, p, options.threads);
    if (options.variant == BoundVariant::MAD) {
      // The h_c = sqrt(mu n) closed form rescaled to another cutoff: the
      // expected count grows as (n / h_c)^k at fixed constants.
      e.bound = scaling_mad_chunglu(p, mu, rep.d, n).value * std::pow(canonical / rep.h_c, p.k());
    } else if (options.cutoff == CutoffChoice::SqrtMuN) {
      e.bound = subgraph_bound_variance_chunglu(p, mu, sigma2, n).value;
    } else {
      e.bound = scaling_variance(p, mu, sigma2, rep.h_c, n, Kernel::chung_lu()).value;
    }
    e.ratio = e.bound > 0.0 ? static_cast<double>(e.observed) / e.bound : std::numeric_limits<double>::infinity();
    rep.entries.push_back(std::move(e));
  }
  return rep;
}

}  // namespace robustsub
