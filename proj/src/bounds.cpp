#include "robustsub/bounds.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <sstream>

#include "robustsub/error.hpp"

namespace robustsub {

namespace {

double factorial(int k) {
  double f = 1.0;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

bool close_rel(double x, double y, double tol) { return std::abs(x - y) <= tol * std::max(std::abs(x), std::abs(y)); }

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(9);
  os << v;
  return os.str();
}

void require_h_s_equals_h_c(const AmbiguityParams& p) {
  if (!close_rel(p.h_s, p.h_c, 1e-12)) {
    throw Error(ErrorCode::RegimeViolation,
                "asymptotic formula assumes h_s = h_c (got h_s=" + fmt(p.h_s) + ", h_c=" + fmt(p.h_c) + ")");
  }
}

// Neumaier's variant of compensated summation.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

}  // namespace

std::string_view to_string(BoundRegime regime) {
  switch (regime) {
    case BoundRegime::ExactTight: return "exact-tight";
    case BoundRegime::AsymptoticMAD: return "asymptotic-mad";
    case BoundRegime::AsymptoticVariance: return "asymptotic-variance";
    case BoundRegime::PowerLaw: return "power-law";
  }
  return "unknown";
}

BoundResult tight_bound(const Pattern& pattern, const AmbiguityParams& params, const Kernel& kernel) {
  const ThreePointDistribution dist = three_point(params);
  BoundResult res;
  res.regime = BoundRegime::ExactTight;

  std::array<std::array<double, 3>, 3> fval{};
  const double hs2 = params.h_s * params.h_s;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      double u = dist.support[i] * dist.support[j] / hs2;
      if (u > 1.0 + 1e-12) {
        u = 1.0;
        res.correlated_regime = true;
      }
      fval[i][j] = kernel.f(std::min(u, 1.0));
    }
  }
  if (res.correlated_regime) {
    res.warnings.push_back("h_c > h_s: kernel arguments above 1 clamped (correlated regime)");
  }

  const int k = pattern.k();
  std::array<int, Pattern::kMaxVertices> digit{};
  std::size_t total = 1;
  for (int i = 0; i < k; ++i) total *= 3;
  CompensatedSum sum;
  for (std::size_t t = 0; t < total; ++t) {
    double term = 1.0;
    for (int j = 0; j < k; ++j) term *= dist.probs[digit[j]];
    if (term != 0.0) {
      for (const auto& [u, v] : pattern.edges()) term *= fval[digit[u]][digit[v]];
      sum.add(term);
    }
    for (int pos = k - 1; pos >= 0; --pos) {
      if (++digit[pos] < 3) break;
      digit[pos] = 0;
    }
  }
  const double n = static_cast<double>(params.n);
  res.value = std::pow(n, k) / static_cast<double>(automorphism_count(pattern)) * sum.value();
  res.normalization = std::pow(n / params.h_c, k);
  res.constant = res.value / res.normalization;
  return res;
}

double moment_identity_bound_cliques(int k, const AmbiguityParams& params) {
  if (k < 2 || k > Pattern::kMaxVertices) {
    throw Error(ErrorCode::InvalidArgument, "clique size must be in [2, 8]");
  }
  const ThreePointDistribution dist = three_point(params);
  if (params.h_c * params.h_c > params.h_s * params.h_s * (1.0 + 1e-12)) {
    throw Error(ErrorCode::PreconditionViolated,
                "h_c^2 > h_s^2: Chung-Lu kernel is not linear on the support");
  }
  const double moment = dist.moment(k - 1);
  const double n = static_cast<double>(params.n);
  return std::pow(n, k) / factorial(k) * std::pow(moment, k) /
         std::pow(params.h_s, static_cast<double>(k * (k - 1)));
}

BoundResult scaling_mad(const Pattern& pattern, const AmbiguityParams& params, const Kernel& kernel) {
  params.validate();
  require_h_s_equals_h_c(params);
  const DegreeStats s = degree_stats(pattern);
  const int k = pattern.k();
  const double aut = static_cast<double>(automorphism_count(pattern));
  const double r1 = kernel.r1();
  const double d = params.d;

  BoundResult res;
  res.regime = BoundRegime::AsymptoticMAD;
  if (s.n1 == 0) {
    res.constant = std::pow(d, k) / (std::pow(2.0, k) * aut) * std::pow(r1, s.e_h);
  } else {
    if (k < 3) {
      throw Error(ErrorCode::RegimeViolation, "degree-1 limit requires k >= 3");
    }
    const double leaf = d / 2.0 * (r1 - 1.0) + params.mu;
    if (leaf < 0.0) {
      throw Error(ErrorCode::RegimeViolation,
                  "d/2 (r(1)-1) + mu = " + fmt(leaf) + " < 0: limit would be negative");
    }
    res.constant = std::pow(d, k - s.n1) / (aut * std::pow(2.0, k - s.n1)) * std::pow(leaf, s.n1) *
                   std::pow(r1, s.e_h - s.n1);
  }
  const double n = static_cast<double>(params.n);
  res.normalization = std::pow(n / params.h_c, k);
  res.value = res.constant * res.normalization;
  return res;
}

BoundResult scaling_mad_chunglu(const Pattern& pattern, double mu, double d, double n) {
  if (pattern.k() < 3) throw Error(ErrorCode::RegimeViolation, "requires k >= 3");
  if (!(mu > 0.0) || d < 0.0 || !(n > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "need mu > 0, d >= 0, n > 0");
  }
  const DegreeStats s = degree_stats(pattern);
  const int k = pattern.k();
  const double aut = static_cast<double>(automorphism_count(pattern));
  BoundResult res;
  res.regime = BoundRegime::AsymptoticMAD;
  res.n_exponent = k / 2.0;
  res.normalization = std::pow(n, res.n_exponent);
  res.constant = std::pow(d, k - s.n1) / (aut * std::pow(2.0, k - s.n1) * std::pow(mu, k / 2.0 - s.n1));
  res.value = res.constant * res.normalization;
  return res;
}

BoundResult clique_bound_mad(int k, const AmbiguityParams& params, const Kernel& kernel) {
  params.validate();
  if (k < 3 || k > Pattern::kMaxVertices) {
    throw Error(ErrorCode::InvalidArgument, "clique size must be in [3, 8]");
  }
  const double n = static_cast<double>(params.n);
  const double canonical = std::sqrt(params.mu * n);
  if (!close_rel(params.h_c, canonical, 1e-9) || !close_rel(params.h_s, canonical, 1e-9)) {
    throw Error(ErrorCode::RegimeViolation,
                "clique limit assumes h_s = h_c = sqrt(mu n) = " + fmt(canonical));
  }
  BoundResult res;
  res.regime = BoundRegime::AsymptoticMAD;
  res.n_exponent = k / 2.0;
  res.normalization = std::pow(n, res.n_exponent);
  res.constant = std::pow(params.d, k) * std::pow(kernel.r1(), k * (k - 1) / 2.0) /
                 (factorial(k) * std::pow(2.0, k) * std::pow(params.mu, k / 2.0));
  res.value = res.constant * res.normalization;
  return res;
}

BoundResult scaling_variance(const Pattern& pattern, double mu, double sigma2, double h_c, double n,
                             const Kernel& kernel) {
  if (!(mu > 0.0) || sigma2 < 0.0 || !(h_c > 0.0) || !(n > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "need mu > 0, sigma2 >= 0, h_c > 0, n > 0");
  }
  const DegreeStats s = degree_stats(pattern);
  const int k = pattern.k();
  const double aut = static_cast<double>(automorphism_count(pattern));
  const double r1 = kernel.r1();

  BoundResult res;
  res.regime = BoundRegime::AsymptoticVariance;
  if (sigma2 / h_c > 0.1) {
    res.warnings.push_back("RegimeWarning: sigma^2/h_c = " + fmt(sigma2 / h_c) +
                           " is not small; the diminishing-MAD limit may be inaccurate");
  }
  res.constant = std::pow(r1, s.e_ge3_ge3) / aut * std::pow(sigma2 * r1 + mu * mu, s.n2_1) *
                 std::pow(sigma2 * r1 * r1 + mu * mu, s.n2 - s.n2_1) * std::pow(mu, s.n1) *
                 std::pow(sigma2, s.n_ge3);
  res.normalization = std::pow(n, k) * std::pow(h_c, -2.0 * k + s.n1);
  res.value = res.constant * res.normalization;
  return res;
}

BoundResult subgraph_bound_variance_chunglu(const Pattern& pattern, double mu, double sigma2, double n) {
  if (!(mu > 0.0) || sigma2 < 0.0 || !(n > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "need mu > 0, sigma2 >= 0, n > 0");
  }
  const DegreeStats s = degree_stats(pattern);
  const int k = pattern.k();
  const double aut = static_cast<double>(automorphism_count(pattern));
  BoundResult res;
  res.regime = BoundRegime::AsymptoticVariance;
  res.n_exponent = s.n1 / 2.0;
  res.normalization = std::pow(n, res.n_exponent);
  res.constant = std::pow(mu * mu + sigma2, s.n2) * std::pow(sigma2, s.n_ge3) /
                 (aut * std::pow(mu, k - 1.5 * s.n1));
  res.value = res.constant * res.normalization;
  return res;
}

PowerLawParams asymptotic_powerlaw(double tau) {
  return powerlaw_params(tau, std::numeric_limits<double>::infinity(), 1.0);
}

namespace {

void require_sparse(double tau) {
  if (!(tau > 2.0 && tau < 3.0)) {
    throw Error(ErrorCode::ExponentOutOfRange, "formula requires 2 < tau < 3, got " + fmt(tau));
  }
}

BoundResult sparse_clique_formula(int k, double tau, double n, double denominator, BoundRegime regime) {
  if (k < 2 || k > Pattern::kMaxVertices) {
    throw Error(ErrorCode::InvalidArgument, "clique size must be in [2, 8]");
  }
  const PowerLawParams pl = asymptotic_powerlaw(tau);
  BoundResult res;
  res.regime = regime;
  res.n_exponent = k / 2.0 * (3.0 - tau);
  res.normalization = std::pow(n, res.n_exponent);
  res.constant = std::pow(pl.mu, k / 2.0 * (1.0 - tau)) / factorial(k) * std::pow(pl.C / denominator, k);
  res.value = res.constant * res.normalization;
  return res;
}

}  // namespace

BoundResult powerlaw_clique_count(int k, double tau, double n) {
  require_sparse(tau);
  return sparse_clique_formula(k, tau, n, k - tau, BoundRegime::PowerLaw);
}

BoundResult powerlaw_clique_scaling_dense(int k, double tau, double n) {
  if (!(tau > 1.0 && tau < 2.0)) {
    throw Error(ErrorCode::ExponentOutOfRange, "dense regime requires 1 < tau < 2, got " + fmt(tau));
  }
  if (k < 2 || k > Pattern::kMaxVertices) {
    throw Error(ErrorCode::InvalidArgument, "clique size must be in [2, 8]");
  }
  BoundResult res;
  res.regime = BoundRegime::PowerLaw;
  res.n_exponent = k / tau;
  res.normalization = std::pow(n, res.n_exponent);
  res.constant = 1.0;
  res.value = res.normalization;
  res.warnings.push_back("order-only: n^{k/tau} with unit constant");
  return res;
}

BoundResult variance_matched_clique_bound(int k, double tau, double n) {
  require_sparse(tau);
  return sparse_clique_formula(k, tau, n, 3.0 - tau, BoundRegime::AsymptoticVariance);
}

}  // namespace robustsub
