#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "robustsub/ambiguity.hpp"
#include "robustsub/kernels.hpp"
#include "robustsub/patterns.hpp"

namespace robustsub {

enum class BoundRegime { ExactTight, AsymptoticMAD, AsymptoticVariance, PowerLaw };

std::string_view to_string(BoundRegime regime);

// value is the expected count at the given n; constant = value / normalization
// is the n-free limit the asymptotic formulas converge to.
struct BoundResult {
  double value = 0.0;
  BoundRegime regime = BoundRegime::ExactTight;
  double normalization = 1.0;
  double constant = 0.0;
  // Growth exponent of n, when the formula has one.
  double n_exponent = 0.0;
  // Some kernel argument exceeded 1 (h_c > h_s) and was clamped.
  bool correlated_regime = false;
  std::vector<std::string> warnings;
};

// Max over the ambiguity set of E[N_H]: the 3^k enumeration over {a, mu, h_c}.
BoundResult tight_bound(const Pattern& pattern, const AmbiguityParams& params, const Kernel& kernel);

// Chung-Lu cliques with every kernel argument <= 1, where f is the identity:
// (n^k/k!) (E[h^{k-1}])^k / h_s^{k(k-1)}. Throws PreconditionViolated when
// h_c > h_s.
double moment_identity_bound_cliques(int k, const AmbiguityParams& params);

// Large-n limit with h_s = h_c; normalization n^k h_c^{-k}.
BoundResult scaling_mad(const Pattern& pattern, const AmbiguityParams& params, const Kernel& kernel);

// Chung-Lu with h_s = h_c = sqrt(mu n); normalization n^{k/2}.
BoundResult scaling_mad_chunglu(const Pattern& pattern, double mu, double d, double n);

// K_k with h_s = h_c = sqrt(mu n); normalization n^{k/2}.
BoundResult clique_bound_mad(int k, const AmbiguityParams& params, const Kernel& kernel);

// Diminishing-MAD limit (d = 2 sigma^2 / (h_c - a)); normalization
// n^k h_c^{-2k+n1}.
BoundResult scaling_variance(const Pattern& pattern, double mu, double sigma2, double h_c, double n,
                             const Kernel& kernel);

// Chung-Lu, h_s = h_c = sqrt(mu n); normalization n^{n1/2}.
BoundResult subgraph_bound_variance_chunglu(const Pattern& pattern, double mu, double sigma2, double n);

// Power-law constants used by the asymptotic clique formulas: the h_c -> inf
// limit of the truncated law with h_min = 1.
PowerLawParams asymptotic_powerlaw(double tau);

// Expected K_k count of a power-law hidden-variable graph, 2 < tau < 3.
BoundResult powerlaw_clique_count(int k, double tau, double n);

// Dense regime 1 < tau < 2: order-only n^{k/tau} with unit constant.
BoundResult powerlaw_clique_scaling_dense(int k, double tau, double n);

// Variance-matched clique bound, 2 < tau < 3.
BoundResult variance_matched_clique_bound(int k, double tau, double n);

}  // namespace robustsub
