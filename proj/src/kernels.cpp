#include "robustsub/kernels.hpp"

#include <algorithm>
#include <cmath>

#include "robustsub/error.hpp"

namespace robustsub {

namespace {

constexpr double kDomainTol = 1e-12;
constexpr double kCheckTol = 1e-9;

}  // namespace

Kernel Kernel::chung_lu() { return Kernel(KernelKind::ChungLu); }
Kernel Kernel::poisson() { return Kernel(KernelKind::PoissonRG); }
Kernel Kernel::generalized() { return Kernel(KernelKind::GeneralizedRG); }

Kernel Kernel::custom(std::vector<double> xs, std::vector<double> fs, double declared_r1) {
  if (xs.size() < 2 || xs.size() != fs.size()) {
    throw Error(ErrorCode::InvalidArgument, "custom kernel needs >= 2 matching (x, f) points");
  }
  if (xs.front() > 0.0 || xs.back() < 1.0) {
    throw Error(ErrorCode::InvalidArgument, "custom kernel table must cover [0,1]");
  }
  for (std::size_t i = 1; i < xs.size(); ++i) {
    if (!(xs[i] > xs[i - 1])) {
      throw Error(ErrorCode::InvalidArgument, "custom kernel abscissae must be strictly increasing");
    }
  }
  for (double v : fs) {
    if (!(v >= 0.0 && v <= 1.0)) {
      throw Error(ErrorCode::InvalidArgument, "custom kernel values must lie in [0,1]");
    }
  }
  Kernel k(KernelKind::Custom);
  k.table_ = std::make_shared<const Table>(Table{std::move(xs), std::move(fs), declared_r1});
  const double f1 = k.f_unchecked(1.0);
  if (!(declared_r1 > 0.0 && declared_r1 <= 1.0) || std::abs(f1 - declared_r1) > 1e-9) {
    throw Error(ErrorCode::InvalidArgument,
                "declared r(1) must be in (0,1] and equal f(1) = " + std::to_string(f1));
  }
  return k;
}

Kernel Kernel::from_name(std::string_view name) {
  if (name == "chung-lu") return chung_lu();
  if (name == "poisson") return poisson();
  if (name == "generalized") return generalized();
  throw Error(ErrorCode::InvalidArgument, "unknown kernel '" + std::string(name) +
                                              "' (expected chung-lu, poisson or generalized)");
}

std::string Kernel::name() const {
  switch (kind_) {
    case KernelKind::ChungLu: return "chung-lu";
    case KernelKind::PoissonRG: return "poisson";
    case KernelKind::GeneralizedRG: return "generalized";
    case KernelKind::Custom: return "custom";
  }
  return "unknown";
}

double Kernel::f_unchecked(double u) const {
  switch (kind_) {
    case KernelKind::ChungLu: return std::min(u, 1.0);
    case KernelKind::PoissonRG: return -std::expm1(-u);
    case KernelKind::GeneralizedRG: return u / (1.0 + u);
    case KernelKind::Custom: {
      const auto& xs = table_->xs;
      const auto& fs = table_->fs;
      auto it = std::upper_bound(xs.begin(), xs.end(), u);
      if (it == xs.begin()) return fs.front();
      if (it == xs.end()) return fs.back();
      const auto i = static_cast<std::size_t>(it - xs.begin());
      const double t = (u - xs[i - 1]) / (xs[i] - xs[i - 1]);
      return fs[i - 1] + t * (fs[i] - fs[i - 1]);
    }
  }
  return 0.0;
}

double Kernel::f(double u) const {
  if (!(u >= -kDomainTol && u <= 1.0 + kDomainTol)) {
    throw Error(ErrorCode::DomainError, "kernel argument " + std::to_string(u) + " outside [0,1]");
  }
  return f_unchecked(std::clamp(u, 0.0, 1.0));
}

double Kernel::r(double u) const {
  const double fu = f(u);
  if (u <= 0.0) return 1.0;
  return fu / u;
}

double Kernel::r1() const {
  if (kind_ == KernelKind::Custom) return table_->r1;
  return f_unchecked(1.0);
}

Assumption1Report check_assumption1(const Kernel& kernel, int grid_size) {
  if (grid_size < 3) throw Error(ErrorCode::InvalidArgument, "grid_size must be >= 3");
  const auto m = static_cast<std::size_t>(grid_size);
  std::vector<double> fv(m);
  double scale = 1.0;
  for (std::size_t i = 0; i < m; ++i) {
    fv[i] = kernel.f(static_cast<double>(i) / static_cast<double>(m - 1));
    scale = std::max(scale, std::abs(fv[i]));
  }
  const double tol = kCheckTol * scale;

  Assumption1Report rep;
  double worst_f = 0.0, worst_d1 = 0.0, worst_d2 = 0.0;
  for (std::size_t i = 0; i < m; ++i) worst_f = std::min(worst_f, fv[i]);
  for (std::size_t i = 0; i + 1 < m; ++i) worst_d1 = std::min(worst_d1, fv[i + 1] - fv[i]);
  for (std::size_t i = 1; i + 1 < m; ++i) {
    worst_d2 = std::min(worst_d2, fv[i + 1] - 2.0 * fv[i] + fv[i - 1]);
  }
  rep.nonnegative = worst_f >= -tol;
  rep.nondecreasing = worst_d1 >= -tol;
  rep.convex = worst_d2 >= -tol;
  rep.worst_violation = std::min({worst_f, worst_d1, worst_d2});
  return rep;
}

Assumption2Report check_assumption2(const Kernel& kernel, int grid_size) {
  if (grid_size < 3) throw Error(ErrorCode::InvalidArgument, "grid_size must be >= 3");
  const double step = 1.0 / static_cast<double>(grid_size - 1);

  // r(0) itself is 1 by definition, so the limit is probed well inside the
  // first grid cell.
  const double probe = step * 1e-6;
  const double r0 = kernel.f(probe) / probe;

  Assumption2Report rep;
  rep.r0_is_one = std::abs(r0 - 1.0) <= 1e-6;
  double worst = -std::abs(r0 - 1.0);
  double prev = r0;
  double worst_increase = 0.0;
  for (int i = 1; i < grid_size; ++i) {
    const double u = static_cast<double>(i) * step;
    const double cur = kernel.f(u) / u;
    worst_increase = std::max(worst_increase, cur - prev);
    prev = cur;
  }
  rep.r_nonincreasing = worst_increase <= kCheckTol;
  rep.worst_violation = std::min(worst, -worst_increase);
  return rep;
}

}  // namespace robustsub
