#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "robustsub/bounds.hpp"
#include "robustsub/error.hpp"
#include "robustsub/graphgen.hpp"
#include "robustsub/motifs.hpp"

using namespace robustsub;

namespace {

Graph to_graph(const oracle::SmallGraph& g) {
  std::vector<Edge> e;
  for (auto [u, v] : g.edges) e.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  return Graph::from_edges(static_cast<std::size_t>(g.n), e);
}

Graph cycle(Vertex n) {
  std::vector<Edge> e;
  for (Vertex i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph::from_edges(n, e);
}

Graph complete(Vertex n) {
  std::vector<Edge> e;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph::from_edges(n, e);
}

std::uint64_t choose(std::uint64_t n, int k) {
  std::uint64_t r = 1;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

oracle::EdgeList as_list(const Pattern& p) { return {p.edges().begin(), p.edges().end()}; }

}  // namespace

TEST_SUITE("motifs") {
  TEST_CASE("small examples") {
    CHECK(count_copies(complete(4), parse_pattern("triangle")) == 4);
    CHECK(count_copies(complete(3), parse_pattern("p3")) == 3);
    CHECK(count_copies(cycle(5), parse_pattern("p4")) == 5);
    CHECK(count_copies(cycle(5), parse_pattern("c5")) == 1);
    CHECK(count_copies(complete(6), parse_pattern("k4")) == 15);
    CHECK(count_copies(complete(6), parse_pattern("k5")) == 6);
    // Non-induced: K4 holds 3 four-cycles and 12 paths on four vertices.
    CHECK(count_copies(complete(4), parse_pattern("c4")) == 3);
    CHECK(count_copies(complete(4), parse_pattern("p4")) == 12);
    CHECK(count_copies(Graph::from_edges(3, {}), parse_pattern("edge")) == 0);
    CHECK_THROWS_AS(count_copies(complete(6), complete_pattern(6)), Error);
  }

  TEST_CASE("every pattern up to size 5 against brute force") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 25; ++trial) {
      const int n = 5 + trial % 8;
      const auto small = oracle::gnp(n, 0.25 + 0.5 * (trial % 5) / 4.0, rng);
      const Graph g = to_graph(small);
      for (int k = 3; k <= 5; ++k) {
        if (k == 5 && trial % 3) continue;
        for (const auto& pat : catalog(k)) {
          CAPTURE(pat.name());
          CHECK(count_copies(g, pat) == oracle::copies(small, k, as_list(pat)));
        }
      }
      CHECK(count_triangles(g) == oracle::triangles(small));
    }
  }

  TEST_CASE("closed-form star identities") {
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 10; ++trial) {
      const auto small = oracle::gnp(60, 0.05 + 0.05 * trial, rng);
      const Graph g = to_graph(small);
      std::uint64_t p3 = 0, claw = 0;
      for (Vertex v = 0; v < g.n(); ++v) {
        p3 += choose(g.degree(v), 2);
        claw += choose(g.degree(v), 3);
      }
      CHECK(count_copies(g, parse_pattern("p3")) == p3);
      CHECK(count_copies(g, parse_pattern("claw")) == claw);
      CHECK(count_triangles(g) == oracle::triangles(small));
    }
  }

  TEST_CASE("threaded and serial counts agree") {
    AmbiguityParams p;
    p.a = 0;
    p.mu = 3;
    p.d = 2;
    p.h_c = p.h_s = std::sqrt(3.0 * 5000);
    p.n = 5000;
    const Graph g = realize_graph(sample_weights_three_point(three_point(p), 5000, 1), Kernel::chung_lu(), p.h_s, 2)
                        .graph;
    for (const auto& pat : catalog(4)) CHECK(count_copies(g, pat, 1) == count_copies(g, pat, 4));
    CHECK(count_copies(g, parse_pattern("k4"), 1) == count_copies(g, parse_pattern("k=4;edges=0-1,0-2,0-3,1-2,1-3,2-3"), 3));
  }

  TEST_CASE("summary statistics") {
    const SummaryStats tri = summary_stats(complete(3));
    CHECK(tri.n == 3);
    CHECK(tri.mu == 2.0);
    CHECK(tri.mad == 0.0);
    CHECK(tri.h_max == 2.0);
    CHECK(tri.sigma2 == 0.0);

    const SummaryStats star = summary_stats(Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}}));
    CHECK(star.mu == 1.5);
    CHECK(star.mad == 0.75);
    CHECK(star.h_max == 3.0);
    CHECK(star.sigma2 == 0.75);
    CHECK(star.h_min == 1.0);

    CHECK_THROWS_AS(summary_stats(Graph::from_edges(0, {})), Error);

    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 30; ++trial) {
      const Graph g = to_graph(oracle::gnp(40, 0.02 + 0.03 * trial, rng));
      const SummaryStats s = summary_stats(g);
      CHECK(s.mad <= std::sqrt(s.sigma2) + 1e-12);
      CHECK(std::sqrt(s.sigma2) <= s.h_max + 1e-12);
      CHECK(s.mu <= s.h_max);
      if (s.h_max > s.h_min) CHECK(2 * s.sigma2 / (s.h_max - s.h_min) <= s.mad + 1e-12);
    }
  }

  TEST_CASE("bound ratios") {
    const Graph g = complete(5);
    const auto patterns = catalog(4);
    const RatioReport mad = bound_ratio(g, patterns);
    REQUIRE(mad.entries.size() == 6);
    // K5 is regular: d = 0 makes every size-4 bound vanish.
    for (const auto& e : mad.entries) {
      CHECK(e.bound == 0.0);
      CHECK(std::isinf(e.ratio));
    }
    RatioOptions o;
    o.variant = BoundVariant::VarianceMAD;
    o.cutoff = CutoffChoice::HMax;
    const RatioReport var = bound_ratio(g, patterns, o);
    CHECK(var.h_c == 4.0);

    const Graph star = Graph::from_edges(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}});
    const RatioReport s = bound_ratio(star, std::vector<Pattern>{parse_pattern("claw")});
    const SummaryStats st = summary_stats(star);
    CHECK(s.h_c == doctest::Approx(std::sqrt(st.mu * 6)));
    CHECK(s.entries[0].observed == 10);
    CHECK(s.entries[0].bound == doctest::Approx(scaling_mad_chunglu(parse_pattern("claw"), st.mu, st.mad, 6).value));

    o.cutoff = CutoffChoice::HMax;
    o.variant = BoundVariant::MAD;
    const RatioReport hm = bound_ratio(star, std::vector<Pattern>{parse_pattern("claw")}, o);
    CHECK(hm.h_c == 5.0);
    CHECK(hm.entries[0].bound ==
          doctest::Approx(s.entries[0].bound * std::pow(std::sqrt(st.mu * 6) / 5.0, 4)).epsilon(1e-12));

    o.variant = BoundVariant::VarianceMAD;
    const RatioReport hv = bound_ratio(star, std::vector<Pattern>{parse_pattern("claw")}, o);
    CHECK(hv.d == doctest::Approx(2 * st.sigma2 / 4.0));
    CHECK(hv.entries[0].bound ==
          doctest::Approx(scaling_variance(parse_pattern("claw"), st.mu, st.sigma2, 5.0, 6, Kernel::chung_lu()).value));

    CHECK(parse_cutoff("h-max") == CutoffChoice::HMax);
    CHECK(parse_variant("variance") == BoundVariant::VarianceMAD);
    CHECK_THROWS_AS(parse_cutoff("max"), Error);
  }
}
