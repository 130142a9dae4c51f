#include "robustsub/graphgen.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <unordered_set>

#include "robustsub/error.hpp"
#include "robustsub/random.hpp"

namespace robustsub {

namespace {

constexpr std::size_t kMaxBlockClasses = 64;
constexpr std::size_t kMaxCollapsedClasses = 16;

struct WeightClasses {
  std::vector<double> values;
  std::vector<std::vector<Vertex>> members;
};

// Groups vertices by exact weight value; returns nullopt-like empty result
// when more than max_classes values occur.
bool group_by_weight(const std::vector<double>& w, std::size_t max_classes, WeightClasses& out) {
  std::map<double, std::size_t> index;
  for (double x : w) {
    if (index.emplace(x, 0).second && index.size() > max_classes) return false;
  }
  out.values.clear();
  for (auto& [value, i] : index) {
    i = out.values.size();
    out.values.push_back(value);
  }
  out.members.assign(out.values.size(), {});
  for (std::size_t v = 0; v < w.size(); ++v) out.members[index[w[v]]].push_back(static_cast<Vertex>(v));
  return true;
}

double edge_probability(const Kernel& kernel, double x, double y, double hs2, bool& clamped) {
  double u = x * y / hs2;
  if (u > 1.0) {
    if (u > 1.0 + 1e-12) clamped = true;
    u = 1.0;
  }
  return kernel.f(u);
}

// k-th pair (i < j) of a set of size s in colex order: j(j-1)/2 + i.
std::pair<std::uint64_t, std::uint64_t> decode_triangular(std::uint64_t t) {
  auto j = static_cast<std::uint64_t>((1.0 + std::sqrt(1.0 + 8.0 * static_cast<double>(t))) / 2.0);
  while (j * (j - 1) / 2 > t) --j;
  while ((j + 1) * j / 2 <= t) ++j;
  return {t - j * (j - 1) / 2, j};
}

// `count` distinct values from [0, space), sorted.
std::vector<std::uint64_t> sample_distinct(std::uint64_t space, std::uint64_t count, CounterRng& rng) {
  std::vector<std::uint64_t> out;
  if (count == 0) return out;
  if (count == space) {
    out.resize(space);
    for (std::uint64_t i = 0; i < space; ++i) out[i] = i;
    return out;
  }
  const bool complement = count > space / 2;
  const std::uint64_t draws = complement ? space - count : count;
  std::unordered_set<std::uint64_t> picked;
  picked.reserve(draws * 2);
  while (picked.size() < draws) picked.insert(rng.below(space));
  if (!complement) {
    out.assign(picked.begin(), picked.end());
    std::sort(out.begin(), out.end());
    return out;
  }
  out.reserve(count);
  for (std::uint64_t i = 0; i < space; ++i) {
    if (!picked.contains(i)) out.push_back(i);
  }
  return out;
}

bool kernel_nondecreasing(const Kernel& kernel) {
  return kernel.kind() != KernelKind::Custom || check_assumption1(kernel, 4001).nondecreasing;
}

}  // namespace

WeightVector sample_weights_three_point(const ThreePointDistribution& dist, std::size_t n, std::uint64_t seed) {
  WeightVector w;
  w.source = WeightSource::ThreePoint;
  w.weights.resize(n);
  CounterRng rng(seed, 0);
  const double t0 = dist.probs[0];
  const double t1 = dist.probs[0] + dist.probs[1];
  for (auto& x : w.weights) {
    const double u = rng.uniform();
    x = u < t0 ? dist.support[0] : (u < t1 ? dist.support[1] : dist.support[2]);
  }
  // Guard against p_hc == 0 with u landing at or above t1 through rounding.
  if (dist.probs[2] == 0.0) {
    for (auto& x : w.weights) {
      if (x == dist.support[2]) x = dist.probs[1] > 0.0 ? dist.support[1] : dist.support[0];
    }
  }
  return w;
}

WeightVector sample_weights_powerlaw(const PowerLawParams& pl, std::size_t n, std::uint64_t seed) {
  WeightVector w;
  w.source = WeightSource::PowerLaw;
  w.weights.resize(n);
  if (pl.h_c == pl.h_min) {
    std::fill(w.weights.begin(), w.weights.end(), pl.h_min);
    return w;
  }
  CounterRng rng(seed, 0);
  const double e = 1.0 - pl.tau;
  const double lo = std::pow(pl.h_min, e);
  const double hi = std::pow(pl.h_c, e);
  for (auto& x : w.weights) {
    const double u = rng.uniform();
    x = std::clamp(std::pow(lo + u * (hi - lo), 1.0 / e), pl.h_min, pl.h_c);
  }
  return w;
}

Realization realize_graph(const WeightVector& w, const Kernel& kernel, double h_s, std::uint64_t seed) {
  if (!(h_s > 0.0)) throw Error(ErrorCode::InvalidArgument, "h_s must be > 0");
  for (double x : w.weights) {
    if (!(x >= 0.0) || !std::isfinite(x)) throw Error(ErrorCode::InvalidArgument, "weights must be finite and >= 0");
  }
  const std::size_t n = w.weights.size();
  const double hs2 = h_s * h_s;
  Realization out;
  std::vector<Edge> edges;

  WeightClasses classes;
  if (group_by_weight(w.weights, kMaxBlockClasses, classes)) {
    out.weight_classes = classes.values.size();
    const std::size_t q = classes.values.size();
    std::uint64_t block = 0;
    for (std::size_t b1 = 0; b1 < q; ++b1) {
      for (std::size_t b2 = b1; b2 < q; ++b2, ++block) {
        const auto& m1 = classes.members[b1];
        const auto& m2 = classes.members[b2];
        const double p = edge_probability(kernel, classes.values[b1], classes.values[b2], hs2, out.clamped);
        const std::uint64_t s1 = m1.size(), s2 = m2.size();
        const std::uint64_t pairs = b1 == b2 ? s1 * (s1 - (s1 > 0)) / 2 : s1 * s2;
        if (pairs == 0 || p <= 0.0) continue;
        CounterRng rng(seed, block);
        std::uint64_t count = pairs;
        if (p < 1.0) count = std::binomial_distribution<std::uint64_t>(pairs, p)(rng);
        for (std::uint64_t t : sample_distinct(pairs, count, rng)) {
          if (b1 == b2) {
            const auto [i, j] = decode_triangular(t);
            edges.emplace_back(m1[i], m1[j]);
          } else {
            edges.emplace_back(m1[t / s2], m2[t % s2]);
          }
        }
      }
    }
  } else if (kernel_nondecreasing(kernel)) {
    // Vertices by decreasing weight: along a row the edge probability can only
    // fall, so geometric skips with the current probability followed by
    // thinning sample every pair exactly once.
    std::vector<Vertex> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = static_cast<Vertex>(i);
    std::stable_sort(order.begin(), order.end(),
                     [&](Vertex a, Vertex b) { return w.weights[a] > w.weights[b]; });
    for (std::size_t i = 0; i + 1 < n; ++i) {
      CounterRng rng(seed, i);
      const double wi = w.weights[order[i]];
      std::size_t j = i + 1;
      double p = edge_probability(kernel, wi, w.weights[order[j]], hs2, out.clamped);
      while (j < n && p > 0.0) {
        if (p < 1.0) {
          const double r = rng.uniform();
          const double skip = std::floor(std::log1p(-r) / std::log1p(-p));
          if (skip >= static_cast<double>(n - j)) break;
          j += static_cast<std::size_t>(skip);
        }
        const double q = edge_probability(kernel, wi, w.weights[order[j]], hs2, out.clamped);
        if (rng.uniform() * p < q) edges.emplace_back(order[i], order[j]);
        p = q;
        ++j;
      }
    }
  } else {
    for (std::size_t i = 0; i + 1 < n; ++i) {
      CounterRng rng(seed, i);
      for (std::size_t j = i + 1; j < n; ++j) {
        if (rng.uniform() < edge_probability(kernel, w.weights[i], w.weights[j], hs2, out.clamped)) {
          edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
        }
      }
    }
  }
  out.graph = Graph::from_edges(n, std::move(edges));
  return out;
}

double conditional_expected_count(const Pattern& pattern, const WeightVector& w, const Kernel& kernel, double h_s) {
  if (!(h_s > 0.0)) throw Error(ErrorCode::InvalidArgument, "h_s must be > 0");
  const int k = pattern.k();
  const double hs2 = h_s * h_s;
  const double aut = static_cast<double>(automorphism_count(pattern));
  bool clamped = false;

  WeightClasses classes;
  if (group_by_weight(w.weights, kMaxCollapsedClasses, classes)) {
    const std::size_t q = classes.values.size();
    if (std::pow(static_cast<double>(q), k) > 1e8) {
      throw Error(ErrorCode::TooLarge, "q^k class assignments exceed 1e8");
    }
    std::vector<double> f(q * q);
    for (std::size_t i = 0; i < q; ++i) {
      for (std::size_t j = 0; j < q; ++j) {
        f[i * q + j] = edge_probability(kernel, classes.values[i], classes.values[j], hs2, clamped);
      }
    }
    std::vector<std::size_t> digit(static_cast<std::size_t>(k), 0);
    std::vector<int> used(q, 0);
    double sum = 0.0;
    while (true) {
      std::fill(used.begin(), used.end(), 0);
      double mult = 1.0;
      for (std::size_t c : digit) {
        const double avail = static_cast<double>(classes.members[c].size()) - used[c];
        mult *= std::max(0.0, avail);
        ++used[c];
      }
      if (mult > 0.0) {
        double prob = 1.0;
        for (const auto& [u, v] : pattern.edges()) prob *= f[digit[u] * q + digit[v]];
        sum += mult * prob;
      }
      int pos = k - 1;
      for (; pos >= 0; --pos) {
        if (++digit[pos] < q) break;
        digit[pos] = 0;
      }
      if (pos < 0) break;
    }
    return sum / aut;
  }

  const std::size_t n = w.weights.size();
  if (n > 200 || k > 4) {
    throw Error(ErrorCode::TooLarge, "continuous weights need n <= 200 and k <= 4");
  }
  std::vector<double> f(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) f[i * n + j] = edge_probability(kernel, w.weights[i], w.weights[j], hs2, clamped);
  }
  // Edges of the pattern grouped by their later endpoint in vertex order.
  std::vector<std::vector<int>> back(static_cast<std::size_t>(k));
  for (const auto& [u, v] : pattern.edges()) back[static_cast<std::size_t>(v)].push_back(u);
  std::vector<std::size_t> chosen(static_cast<std::size_t>(k));
  double sum = 0.0;
  auto recurse = [&](auto&& self, int depth, double prob) -> void {
    if (depth == k) {
      sum += prob;
      return;
    }
    for (std::size_t x = 0; x < n; ++x) {
      bool fresh = true;
      for (int i = 0; i < depth; ++i) fresh = fresh && chosen[i] != x;
      if (!fresh) continue;
      double p = prob;
      for (int u : back[depth]) p *= f[chosen[u] * n + x];
      if (p == 0.0) continue;
      chosen[depth] = x;
      self(self, depth + 1, p);
    }
  };
  recurse(recurse, 0, 1.0);
  return sum / aut;
}

}  // namespace robustsub
