#include <doctest.h>

#include <cmath>
#include <map>
#include <random>

#include "robustsub/bounds.hpp"
#include "robustsub/error.hpp"
#include "robustsub/graphgen.hpp"
#include "robustsub/motifs.hpp"

using namespace robustsub;

namespace {

ThreePointDistribution law(double a, double mu, double d, double hc) {
  AmbiguityParams p;
  p.a = a;
  p.mu = mu;
  p.d = d;
  p.h_c = hc;
  p.h_s = hc;
  p.n = 1;
  return three_point(p);
}

// Upper critical value of chi-square at significance 0.01 (Wilson-Hilferty).
double chi2_critical(int dof) {
  const double z = 2.3263478740408408;
  const double t = 2.0 / (9.0 * dof);
  return dof * std::pow(1 - t + z * std::sqrt(t), 3);
}

}  // namespace

TEST_SUITE("graphgen") {
  TEST_CASE("three-point weights") {
    const auto dist = law(0, 2, 1, 10);
    const std::size_t n = 1000000;
    const WeightVector w = sample_weights_three_point(dist, n, 42);
    CHECK(w.source == WeightSource::ThreePoint);
    double top = 0, sum = 0, sq = 0;
    for (double x : w.weights) {
      top += x == 10.0;
      sum += x;
      sq += x * x;
    }
    const double frac = top / n;
    CHECK(std::abs(frac - 0.0625) <= 3 * std::sqrt(0.0625 * 0.9375 / n));
    const double mean = sum / n;
    const double sd = std::sqrt(sq / n - mean * mean);
    CHECK(std::abs(mean - 2.0) <= 3 * sd / std::sqrt(static_cast<double>(n)));

    const WeightVector point = sample_weights_three_point(law(0, 2, 0, 10), 5, 1);
    for (double x : point.weights) CHECK(x == 2.0);

    CHECK(sample_weights_three_point(dist, 100, 9).weights == sample_weights_three_point(dist, 100, 9).weights);
    CHECK(sample_weights_three_point(dist, 100, 9).weights != sample_weights_three_point(dist, 100, 10).weights);
  }

  TEST_CASE("power-law weights follow the truncated CDF") {
    const PowerLawParams pl = powerlaw_params(2.5, 100);
    const std::size_t n = 1000000;
    WeightVector w = sample_weights_powerlaw(pl, n, 3);
    std::sort(w.weights.begin(), w.weights.end());
    double ks = 0;
    for (std::size_t i = 0; i < n; i += 97) {
      const double f = pl.cdf(w.weights[i]);
      ks = std::max({ks, std::abs(f - static_cast<double>(i) / n), std::abs(f - static_cast<double>(i + 1) / n)});
    }
    CHECK(ks < 0.005);
    const double at10 =
        static_cast<double>(std::upper_bound(w.weights.begin(), w.weights.end(), 10.0) - w.weights.begin()) / n;
    CHECK(std::abs(at10 - pl.cdf(10.0)) < 0.005);

    double sum = 0, sq = 0;
    for (double x : w.weights) sum += x, sq += x * x;
    const double mean = sum / n;
    CHECK(std::abs(mean - pl.mu) <= 3 * std::sqrt(pl.sigma2 / n));
    CHECK(w.weights.front() >= 1.0);
    CHECK(w.weights.back() <= 100.0);

    const WeightVector flat = sample_weights_powerlaw(powerlaw_params(2.5, 1.0), 10, 1);
    for (double x : flat.weights) CHECK(x == 1.0);
  }

  TEST_CASE("deterministic kernel limits") {
    WeightVector w;
    w.weights.assign(30, 10.0);
    const Realization full = realize_graph(w, Kernel::chung_lu(), 10.0, 1);
    CHECK(full.graph.edge_count() == 435);
    CHECK_FALSE(full.clamped);

    const WeightVector iso = sample_weights_three_point(law(0, 2, 1, 10), 2000, 5);
    const Realization r = realize_graph(iso, Kernel::chung_lu(), 10.0, 6);
    for (std::size_t v = 0; v < iso.weights.size(); ++v) {
      if (iso.weights[v] == 0.0) CHECK(r.graph.degree(static_cast<Vertex>(v)) == 0);
    }

    w.weights.assign(4, 20.0);
    CHECK(realize_graph(w, Kernel::chung_lu(), 10.0, 1).clamped);
    w.weights[0] = -1.0;
    CHECK_THROWS_AS(realize_graph(w, Kernel::chung_lu(), 10.0, 1), Error);
  }

  TEST_CASE("G(n, p) edge counts with f(1) = p") {
    WeightVector w;
    w.weights.assign(400, 10.0);
    const double p = 1 - std::exp(-1.0);
    const double pairs = 400.0 * 399 / 2;
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      const double m = static_cast<double>(realize_graph(w, Kernel::poisson(), 10.0, seed).graph.edge_count());
      CHECK(std::abs(m - p * pairs) <= 3 * std::sqrt(pairs * p * (1 - p)));
    }
  }

  TEST_CASE("block-wise edge counts are binomial") {
    // Two classes of 15 vertices; three block pairs, each checked by a
    // chi-square goodness-of-fit test on its edge-count histogram.
    WeightVector w;
    for (int i = 0; i < 30; ++i) w.weights.push_back(i < 15 ? 3.0 : 6.0);
    const double hs = 10.0;
    struct Block {
      int m;
      double p;
      std::map<int, int> hist;
    };
    Block blocks[3] = {{105, 0.09, {}}, {225, 0.18, {}}, {105, 0.36, {}}};
    const int samples = 10000;
    for (int s = 0; s < samples; ++s) {
      const Graph g = realize_graph(w, Kernel::chung_lu(), hs, 1000 + s).graph;
      int c[3] = {0, 0, 0};
      for (const auto& [u, v] : g.edges()) c[(u >= 15) + (v >= 15)]++;
      for (int b = 0; b < 3; ++b) blocks[b].hist[c[b]]++;
    }
    for (const auto& b : blocks) {
      // Pool the binomial pmf into cells with expected count >= 5.
      std::vector<double> pmf(b.m + 1);
      for (int x = 0; x <= b.m; ++x) {
        pmf[x] = std::exp(std::lgamma(b.m + 1.0) - std::lgamma(x + 1.0) - std::lgamma(b.m - x + 1.0) +
                          x * std::log(b.p) + (b.m - x) * std::log1p(-b.p));
      }
      double stat = 0, exp_acc = 0, obs_acc = 0;
      int cells = 0;
      for (int x = 0; x <= b.m; ++x) {
        exp_acc += pmf[x] * samples;
        obs_acc += b.hist.count(x) ? b.hist.at(x) : 0;
        if (exp_acc >= 5 && (x == b.m || [&] {
              double rest = 0;
              for (int y = x + 1; y <= b.m; ++y) rest += pmf[y] * samples;
              return rest >= 5;
            }())) {
          stat += (obs_acc - exp_acc) * (obs_acc - exp_acc) / exp_acc;
          exp_acc = obs_acc = 0;
          ++cells;
        }
      }
      if (exp_acc > 0) {
        stat += (obs_acc - exp_acc) * (obs_acc - exp_acc) / exp_acc;
        ++cells;
      }
      CAPTURE(b.m);
      CAPTURE(stat);
      CHECK(stat < chi2_critical(cells - 1));
    }
  }

  TEST_CASE("identical seeds give identical graphs") {
    const WeightVector tp = sample_weights_three_point(law(0, 2, 1, 30), 3000, 8);
    CHECK(realize_graph(tp, Kernel::chung_lu(), 30, 4).graph.edges() ==
          realize_graph(tp, Kernel::chung_lu(), 30, 4).graph.edges());
    const WeightVector pl = sample_weights_powerlaw(powerlaw_params(2.5, 50), 3000, 8);
    const auto a = realize_graph(pl, Kernel::generalized(), 50, 4);
    CHECK(a.weight_classes == 0);
    CHECK(a.graph.edges() == realize_graph(pl, Kernel::generalized(), 50, 4).graph.edges());
    CHECK(a.graph.edges() != realize_graph(pl, Kernel::generalized(), 50, 5).graph.edges());
  }

  TEST_CASE("pairwise path matches its expected edge count") {
    const PowerLawParams pl = powerlaw_params(2.5, 40);
    const WeightVector w = sample_weights_powerlaw(pl, 400, 21);
    double expected = 0, var = 0;
    for (std::size_t i = 0; i < w.weights.size(); ++i) {
      for (std::size_t j = i + 1; j < w.weights.size(); ++j) {
        const double p = Kernel::poisson().f(std::min(1.0, w.weights[i] * w.weights[j] / 1600.0));
        expected += p;
        var += p * (1 - p);
      }
    }
    double mean = 0;
    const int reps = 200;
    for (int s = 0; s < reps; ++s) mean += realize_graph(w, Kernel::poisson(), 40, s).graph.edge_count();
    mean /= reps;
    CHECK(std::abs(mean - expected) <= 3 * std::sqrt(var / reps));
  }

  TEST_CASE("conditional expectation examples") {
    WeightVector w;
    w.weights.assign(10, 5.0);
    CHECK(conditional_expected_count(complete_pattern(3), w, Kernel::chung_lu(), 5.0) ==
          doctest::Approx(120.0).epsilon(1e-12));
    w.weights.assign(3, 5.0);
    const double p = 1 - std::exp(-1.0);
    CHECK(conditional_expected_count(complete_pattern(3), w, Kernel::poisson(), 5.0) ==
          doctest::Approx(p * p * p).epsilon(1e-12));
  }

  TEST_CASE("class-collapsed and pairwise evaluation agree") {
    std::mt19937_64 rng(2);
    WeightVector w;
    for (int i = 0; i < 40; ++i) w.weights.push_back(std::vector<double>{1.0, 2.5, 7.0}[rng() % 3]);
    WeightVector jittered = w;
    // Distinct values force the tuple loop; shifts below rounding keep products identical.
    for (std::size_t i = 0; i < jittered.weights.size(); ++i) jittered.weights[i] *= 1 + 1e-15 * (i + 1);
    for (const auto& pat : catalog(4)) {
      const double a = conditional_expected_count(pat, w, Kernel::generalized(), 8.0);
      const double b = conditional_expected_count(pat, jittered, Kernel::generalized(), 8.0);
      CHECK(a == doctest::Approx(b).epsilon(1e-9));
    }
    WeightVector big;
    for (int i = 0; i < 300; ++i) big.weights.push_back(1.0 + i * 0.01);
    CHECK_THROWS_AS(conditional_expected_count(complete_pattern(3), big, Kernel::chung_lu(), 10.0), Error);
  }

  TEST_CASE("realised triangle counts match the conditional expectation") {
    const WeightVector w = sample_weights_three_point(law(0, 2, 1, 10), 50, 77);
    const double expected = conditional_expected_count(complete_pattern(3), w, Kernel::chung_lu(), 10.0);
    const int reps = 10000;
    double sum = 0, sq = 0;
    for (int s = 0; s < reps; ++s) {
      const double c = static_cast<double>(count_triangles(realize_graph(w, Kernel::chung_lu(), 10.0, s).graph));
      sum += c;
      sq += c * c;
    }
    const double mean = sum / reps;
    const double se = std::sqrt((sq / reps - mean * mean) / reps);
    CAPTURE(expected);
    CHECK(std::abs(mean - expected) <= 3 * se);
  }

  TEST_CASE("averaged conditional expectation converges to the tight bound") {
    AmbiguityParams p;
    p.a = 0;
    p.mu = 2;
    p.d = 1;
    p.h_c = p.h_s = 10;
    p.n = 100;
    const auto dist = three_point(p);
    const int reps = 1000;
    double sum = 0, sq = 0;
    for (int s = 0; s < reps; ++s) {
      const double c = conditional_expected_count(complete_pattern(3), sample_weights_three_point(dist, 100, s),
                                                   Kernel::chung_lu(), 10.0);
      sum += c;
      sq += c * c;
    }
    const double mean = sum / reps;
    const double se = std::sqrt((sq / reps - mean * mean) / reps);
    // With n distinct vertices the exact mean uses n(n-1)(n-2) rather than n^3.
    const double exact = tight_bound(complete_pattern(3), p, Kernel::chung_lu()).value * 98 * 99 / 1e4;
    CHECK(std::abs(mean - exact) <= 3 * se);
  }
}
