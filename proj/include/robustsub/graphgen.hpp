#pragma once

#include <cstdint>
#include <vector>

#include "robustsub/ambiguity.hpp"
#include "robustsub/graph.hpp"
#include "robustsub/kernels.hpp"
#include "robustsub/patterns.hpp"

namespace robustsub {

enum class WeightSource { ThreePoint, PowerLaw, External };

struct WeightVector {
  std::vector<double> weights;
  WeightSource source = WeightSource::External;
};

WeightVector sample_weights_three_point(const ThreePointDistribution& dist, std::size_t n, std::uint64_t seed);

// Inverse-transform sampling from the truncated continuous density.
WeightVector sample_weights_powerlaw(const PowerLawParams& pl, std::size_t n, std::uint64_t seed);

struct Realization {
  Graph graph;
  // Some weight product exceeded h_s^2 and the kernel was evaluated at 1.
  bool clamped = false;
  // Number of weight classes when generated block-wise, 0 for pairwise.
  std::size_t weight_classes = 0;
};

// Each pair {i, j} is an edge independently with probability
// f(min(1, h_i h_j / h_s^2)). Weights with at most 64 distinct values are
// generated block-wise: Binomial edge count per block pair, then that many
// distinct pairs uniformly. Otherwise pairs are visited in order of decreasing
// weight with geometric skipping (kernels with non-decreasing f) or one by one.
Realization realize_graph(const WeightVector& w, const Kernel& kernel, double h_s, std::uint64_t seed);

// E[N_H | weights] = (1/Aut(H)) sum over ordered k-tuples of distinct vertices
// of prod_{uv in E_H} f(h_u h_v / h_s^2). Collapses over weight classes when
// there are at most 16 distinct weights; otherwise needs n <= 200 and k <= 4.
// Throws TooLarge beyond that.
double conditional_expected_count(const Pattern& pattern, const WeightVector& w, const Kernel& kernel, double h_s);

}  // namespace robustsub
