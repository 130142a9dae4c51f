#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "robustsub/kernels.hpp"
#include "robustsub/patterns.hpp"

namespace robustsub {

// Weight distributions on [a, h_c] with mean mu and mean absolute deviation d,
// plus the graph scale (h_s, n).
struct AmbiguityParams {
  double a = 0.0;
  double mu = 0.0;
  double d = 0.0;
  double h_c = 0.0;
  double h_s = 0.0;
  std::uint64_t n = 0;

  // Largest d for which the set is non-empty: 2(mu-a)(h_c-mu)/(h_c-a).
  double max_feasible_mad() const;
  // Throws InvalidArgument on a broken ordering and Infeasible when d is too
  // large for the range.
  void validate() const;
};

struct ThreePointDistribution {
  std::array<double, 3> support{};  // {a, mu, h_c}
  std::array<double, 3> probs{};    // {p_a, p_mu, p_hc}

  double mean() const;
  double mad() const;
  double moment(double power) const;
};

// The extremal law on {a, mu, h_c}. p_mu in [-1e-12, 0) is clamped to 0.
ThreePointDistribution three_point(const AmbiguityParams& params);

// Sum p_i (x_i - mu)^2 = d (h_c - a) / 2.
double variance_of_three_point(const ThreePointDistribution& dist);

struct MadRange {
  double d_min = 0.0;
  double d_max = 0.0;
};

// 2 sigma^2 / (h_c - a) <= d <= sigma.
MadRange mad_bounds_from_variance(double sigma2, double a, double h_c);

// Continuous density C h^{-tau} on [h_min, h_c]. h_c may be +infinity when the
// requested moments exist.
struct PowerLawParams {
  double tau = 0.0;
  double h_min = 1.0;
  double h_c = 0.0;
  double C = 0.0;
  double mu = 0.0;
  double d = 0.0;
  double sigma2 = 0.0;

  double cdf(double h) const;
};

PowerLawParams powerlaw_params(double tau, double h_c, double h_min = 1.0);

// Cutoff h solving mu(h) * n = h^2 for the truncated power law, i.e.
// h_s = h_c = sqrt(mu n) with mu depending on the cutoff. Bisection to 1e-9
// relative.
double self_consistent_cutoff(double tau, double n, double h_min = 1.0);

struct GridSearchResult {
  double value = 0.0;
  std::vector<double> probabilities;  // aligned with the sorted support grid
  std::vector<double> support;
  std::size_t feasible_points = 0;
};

// Finite-grid check of the extremal-distribution claim: maximises the exact
// expected count n^k/Aut(H) E[prod f(h_s h_t / h_s^2)] over all laws on
// support_grid with mean mu and MAD d. Basic feasible solutions are enumerated
// exactly; the interior of the polytope is scanned on a lattice of step
// prob_resolution. Throws GridInfeasible when no law on the grid matches.
GridSearchResult grid_search_optimality_oracle(const AmbiguityParams& params, const Pattern& pattern,
                                               const Kernel& kernel, std::span<const double> support_grid,
                                               double prob_resolution);

}  // namespace robustsub
