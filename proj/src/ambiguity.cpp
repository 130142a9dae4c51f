#include "robustsub/ambiguity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "robustsub/error.hpp"

namespace robustsub {

namespace {

constexpr double kFeasTol = 1e-12;
constexpr double kExponentEps = 1e-8;

// Integral of h^p over [lo, hi]; hi may be +infinity.
double pow_integral(double p, double lo, double hi) {
  if (hi <= lo) return 0.0;
  const double q = p + 1.0;
  const double log_ratio = std::log(hi / lo);
  if (std::abs(q) < kExponentEps) {
    if (std::isinf(log_ratio)) return log_ratio;
    return log_ratio * (1.0 + 0.5 * q * (std::log(hi) + std::log(lo)));
  }
  return std::pow(lo, q) * std::expm1(q * log_ratio) / q;
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(9);
  os << v;
  return os.str();
}

}  // namespace

double AmbiguityParams::max_feasible_mad() const { return 2.0 * (mu - a) * (h_c - mu) / (h_c - a); }

void AmbiguityParams::validate() const {
  for (double v : {a, mu, d, h_c, h_s}) {
    if (!std::isfinite(v)) throw Error(ErrorCode::InvalidArgument, "parameters must be finite");
  }
  if (a < 0.0) throw Error(ErrorCode::InvalidArgument, "a must be >= 0, got " + fmt(a));
  if (!(a < mu && mu < h_c)) {
    throw Error(ErrorCode::InvalidArgument,
                "need a < mu < h_c, got a=" + fmt(a) + " mu=" + fmt(mu) + " h_c=" + fmt(h_c));
  }
  if (d < 0.0) throw Error(ErrorCode::InvalidArgument, "MAD must be >= 0, got " + fmt(d));
  if (!(h_s > 0.0)) throw Error(ErrorCode::InvalidArgument, "h_s must be > 0");
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "n must be >= 1");
  const double p_mu = 1.0 - d / (2.0 * (mu - a)) - d / (2.0 * (h_c - mu));
  if (p_mu < -kFeasTol) {
    throw Error(ErrorCode::Infeasible, "MAD d=" + fmt(d) + " exceeds the feasible maximum " +
                                           fmt(max_feasible_mad()) + " for a=" + fmt(a) +
                                           ", mu=" + fmt(mu) + ", h_c=" + fmt(h_c));
  }
}

double ThreePointDistribution::mean() const {
  double s = 0.0;
  for (int i = 0; i < 3; ++i) s += probs[i] * support[i];
  return s;
}

double ThreePointDistribution::mad() const {
  const double m = support[1];
  double s = 0.0;
  for (int i = 0; i < 3; ++i) s += probs[i] * std::abs(support[i] - m);
  return s;
}

double ThreePointDistribution::moment(double power) const {
  double s = 0.0;
  for (int i = 0; i < 3; ++i) {
    if (probs[i] > 0.0) s += probs[i] * std::pow(support[i], power);
  }
  return s;
}

ThreePointDistribution three_point(const AmbiguityParams& params) {
  params.validate();
  ThreePointDistribution dist;
  dist.support = {params.a, params.mu, params.h_c};
  const double p_a = params.d / (2.0 * (params.mu - params.a));
  const double p_hc = params.d / (2.0 * (params.h_c - params.mu));
  dist.probs = {p_a, std::max(0.0, 1.0 - p_a - p_hc), p_hc};
  return dist;
}

double variance_of_three_point(const ThreePointDistribution& dist) {
  const double m = dist.support[1];
  double s = 0.0;
  for (int i = 0; i < 3; ++i) s += dist.probs[i] * (dist.support[i] - m) * (dist.support[i] - m);
  return s;
}

MadRange mad_bounds_from_variance(double sigma2, double a, double h_c) {
  if (sigma2 < 0.0) throw Error(ErrorCode::InvalidArgument, "variance must be >= 0");
  if (!(h_c > a)) throw Error(ErrorCode::InvalidArgument, "need h_c > a");
  return {2.0 * sigma2 / (h_c - a), std::sqrt(sigma2)};
}

double PowerLawParams::cdf(double h) const {
  if (h <= h_min) return h < h_min ? 0.0 : (h_c == h_min ? 1.0 : 0.0);
  if (h >= h_c) return 1.0;
  return C * pow_integral(-tau, h_min, h);
}

PowerLawParams powerlaw_params(double tau, double h_c, double h_min) {
  if (!(tau > 1.0)) {
    throw Error(ErrorCode::ExponentUnsupported, "power-law exponent must exceed 1, got " + fmt(tau));
  }
  if (!(h_min > 0.0) || !(h_c >= h_min)) {
    throw Error(ErrorCode::InvalidArgument, "need 0 < h_min <= h_c");
  }
  PowerLawParams pl;
  pl.tau = tau;
  pl.h_min = h_min;
  pl.h_c = h_c;
  if (h_c == h_min) {
    pl.C = std::numeric_limits<double>::infinity();
    pl.mu = h_min;
    return pl;
  }
  pl.C = 1.0 / pow_integral(-tau, h_min, h_c);
  pl.mu = pl.C * pow_integral(1.0 - tau, h_min, h_c);
  const double m2 = pl.C * pow_integral(2.0 - tau, h_min, h_c);
  pl.sigma2 = std::isinf(m2) ? m2 : m2 - pl.mu * pl.mu;
  if (std::isinf(pl.mu)) {
    pl.d = pl.mu;
    return pl;
  }
  // E|h - mu|, split at mu.
  const double mu = pl.mu;
  pl.d = pl.C * (pow_integral(1.0 - tau, mu, h_c) - pow_integral(1.0 - tau, h_min, mu)) -
         pl.C * mu * (pow_integral(-tau, mu, h_c) - pow_integral(-tau, h_min, mu));
  return pl;
}

double self_consistent_cutoff(double tau, double n, double h_min) {
  if (!(tau > 1.0)) {
    throw Error(ErrorCode::ExponentUnsupported, "power-law exponent must exceed 1, got " + fmt(tau));
  }
  if (!(n > h_min)) throw Error(ErrorCode::InvalidArgument, "need n > h_min");
  double lo = h_min;
  double hi = std::max(n, 2.0 * h_min);
  auto excess = [&](double h) { return powerlaw_params(tau, h, h_min).mu * n - h * h; };
  while (hi / lo - 1.0 > 1e-12) {
    const double mid = std::sqrt(lo * hi);
    if (mid <= lo || mid >= hi) break;
    (excess(mid) > 0.0 ? lo : hi) = mid;
  }
  return std::sqrt(lo * hi);
}

namespace {

struct Basis3 {
  std::array<std::size_t, 3> idx;
  std::array<std::array<double, 3>, 3> inv;  // inverse of the 3x3 column block
};

bool invert3(const std::array<std::array<double, 3>, 3>& m, std::array<std::array<double, 3>, 3>& out) {
  const double det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                     m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                     m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  double scale = 0.0;
  for (const auto& row : m) {
    for (double v : row) scale = std::max(scale, std::abs(v));
  }
  if (std::abs(det) <= 1e-12 * scale * scale * scale) return false;
  const double id = 1.0 / det;
  out[0][0] = (m[1][1] * m[2][2] - m[1][2] * m[2][1]) * id;
  out[0][1] = (m[0][2] * m[2][1] - m[0][1] * m[2][2]) * id;
  out[0][2] = (m[0][1] * m[1][2] - m[0][2] * m[1][1]) * id;
  out[1][0] = (m[1][2] * m[2][0] - m[1][0] * m[2][2]) * id;
  out[1][1] = (m[0][0] * m[2][2] - m[0][2] * m[2][0]) * id;
  out[1][2] = (m[0][2] * m[1][0] - m[0][0] * m[1][2]) * id;
  out[2][0] = (m[1][0] * m[2][1] - m[1][1] * m[2][0]) * id;
  out[2][1] = (m[0][1] * m[2][0] - m[0][0] * m[2][1]) * id;
  out[2][2] = (m[0][0] * m[1][1] - m[0][1] * m[1][0]) * id;
  return true;
}

class GridObjective {
 public:
  GridObjective(const Pattern& pattern, const Kernel& kernel, const std::vector<double>& xs,
                double h_s, double n)
      : k_(pattern.k()), m_(xs.size()) {
    std::vector<double> f(m_ * m_);
    for (std::size_t i = 0; i < m_; ++i) {
      for (std::size_t j = 0; j < m_; ++j) {
        f[i * m_ + j] = kernel.f(std::min(1.0, xs[i] * xs[j] / (h_s * h_s)));
      }
    }
    std::size_t total = 1;
    for (int i = 0; i < k_; ++i) total *= m_;
    weights_.resize(total);
    std::vector<std::size_t> digit(static_cast<std::size_t>(k_), 0);
    for (std::size_t t = 0; t < total; ++t) {
      double w = 1.0;
      for (const auto& [u, v] : pattern.edges()) w *= f[digit[u] * m_ + digit[v]];
      weights_[t] = w;
      for (int pos = k_ - 1; pos >= 0; --pos) {
        if (++digit[pos] < m_) break;
        digit[pos] = 0;
      }
    }
    scale_ = std::pow(n, k_) / static_cast<double>(automorphism_count(pattern));
  }

  double operator()(const std::vector<double>& q) const {
    double sum = 0.0;
    std::vector<std::size_t> digit(static_cast<std::size_t>(k_), 0);
    for (double w : weights_) {
      if (w != 0.0) {
        double p = w;
        for (std::size_t d : digit) p *= q[d];
        sum += p;
      }
      for (int pos = k_ - 1; pos >= 0; --pos) {
        if (++digit[pos] < m_) break;
        digit[pos] = 0;
      }
    }
    return scale_ * sum;
  }

 private:
  int k_;
  std::size_t m_;
  std::vector<double> weights_;
  double scale_ = 1.0;
};

}  // namespace

GridSearchResult grid_search_optimality_oracle(const AmbiguityParams& params, const Pattern& pattern,
                                               const Kernel& kernel, std::span<const double> support_grid,
                                               double prob_resolution) {
  params.validate();
  if (pattern.k() > 4) {
    throw Error(ErrorCode::TooLarge, "grid search supports patterns with k <= 4");
  }
  if (!(prob_resolution > 0.0 && prob_resolution <= 1.0)) {
    throw Error(ErrorCode::InvalidArgument, "prob_resolution must be in (0, 1]");
  }
  std::vector<double> xs(support_grid.begin(), support_grid.end());
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  if (xs.size() < 3 || xs.size() > 8) {
    throw Error(ErrorCode::InvalidArgument, "support grid must have 3..8 distinct points");
  }
  for (double x : xs) {
    if (x < params.a - 1e-12 || x > params.h_c + 1e-12) {
      throw Error(ErrorCode::InvalidArgument, "support point " + fmt(x) + " outside [a, h_c]");
    }
  }
  const std::size_t m = xs.size();
  const std::array<double, 3> rhs = {1.0, params.mu, params.d};
  auto column = [&](std::size_t i) {
    return std::array<double, 3>{1.0, xs[i], std::abs(xs[i] - params.mu)};
  };
  auto try_basis = [&](std::array<std::size_t, 3> idx, Basis3& out) {
    std::array<std::array<double, 3>, 3> mat{};
    for (int c = 0; c < 3; ++c) {
      const auto col = column(idx[c]);
      for (int r = 0; r < 3; ++r) mat[r][c] = col[r];
    }
    out.idx = idx;
    return invert3(mat, out.inv);
  };

  const GridObjective objective(pattern, kernel, xs, params.h_s, static_cast<double>(params.n));
  GridSearchResult best;
  best.support = xs;
  best.value = -1.0;
  auto consider = [&](const std::vector<double>& q) {
    ++best.feasible_points;
    const double v = objective(q);
    if (v > best.value) {
      best.value = v;
      best.probabilities = q;
    }
  };

  // Basic feasible solutions.
  Basis3 lattice_basis{};
  bool have_lattice_basis = false;
  std::vector<double> q(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      for (std::size_t l = j + 1; l < m; ++l) {
        Basis3 b{};
        if (!try_basis({i, j, l}, b)) continue;
        if (!have_lattice_basis) {
          lattice_basis = b;
          have_lattice_basis = true;
        }
        std::fill(q.begin(), q.end(), 0.0);
        bool ok = true;
        for (int r = 0; r < 3; ++r) {
          double v = 0.0;
          for (int c = 0; c < 3; ++c) v += b.inv[r][c] * rhs[c];
          if (v < -kFeasTol) ok = false;
          q[b.idx[r]] = std::max(0.0, v);
        }
        if (ok) consider(q);
      }
    }
  }
  if (best.feasible_points == 0) {
    throw Error(ErrorCode::GridInfeasible, "no distribution on the grid has mean " + fmt(params.mu) +
                                               " and MAD " + fmt(params.d));
  }

  // Interior lattice over the non-basic coordinates.
  std::vector<std::size_t> free_idx;
  for (std::size_t i = 0; i < m; ++i) {
    if (std::find(lattice_basis.idx.begin(), lattice_basis.idx.end(), i) == lattice_basis.idx.end()) {
      free_idx.push_back(i);
    }
  }
  const auto steps = static_cast<std::size_t>(std::floor(1.0 / prob_resolution + 1e-9));
  if (std::pow(static_cast<double>(steps + 1), static_cast<double>(free_idx.size())) > 5e7) {
    throw Error(ErrorCode::TooLarge, "lattice too fine for this grid size");
  }
  std::vector<std::size_t> level(free_idx.size(), 0);
  auto evaluate_lattice_point = [&]() {
    std::fill(q.begin(), q.end(), 0.0);
    std::array<double, 3> r = rhs;
    for (std::size_t f = 0; f < free_idx.size(); ++f) {
      const double qf = static_cast<double>(level[f]) * prob_resolution;
      q[free_idx[f]] = qf;
      const auto col = column(free_idx[f]);
      for (int c = 0; c < 3; ++c) r[c] -= qf * col[c];
    }
    for (int row = 0; row < 3; ++row) {
      double v = 0.0;
      for (int c = 0; c < 3; ++c) v += lattice_basis.inv[row][c] * r[c];
      if (v < -kFeasTol) return;
      q[lattice_basis.idx[row]] = std::max(0.0, v);
    }
    consider(q);
  };
  if (free_idx.empty()) return best;
  while (true) {
    std::size_t used = 0;
    for (std::size_t s : level) used += s;
    if (used <= steps) evaluate_lattice_point();
    std::size_t pos = 0;
    while (pos < level.size()) {
      if (++level[pos] <= steps) break;
      level[pos] = 0;
      ++pos;
    }
    if (pos == level.size()) break;
  }
  return best;
}

}  // namespace robustsub
