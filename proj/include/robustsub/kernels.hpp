#pragma once

#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace robustsub {

enum class KernelKind { ChungLu, PoissonRG, GeneralizedRG, Custom };

// A connection function f on [0,1]. Vertices with weights h_i, h_j connect
// with probability f(h_i h_j / h_s^2).
class Kernel {
 public:
  static Kernel chung_lu();
  static Kernel poisson();
  static Kernel generalized();

  // Piecewise-linear interpolation through (xs[i], fs[i]). xs must be strictly
  // increasing and cover [0,1]; fs must lie in [0,1]. declared_r1 must agree
  // with f(1) to 1e-9.
  static Kernel custom(std::vector<double> xs, std::vector<double> fs, double declared_r1);

  // Accepts "chung-lu", "poisson", "generalized".
  static Kernel from_name(std::string_view name);

  KernelKind kind() const noexcept { return kind_; }
  std::string name() const;

  // f(u). Throws DomainError when u is outside [0,1] by more than 1e-12.
  double f(double u) const;
  // r(u) = f(u)/u, with r(0) = 1.
  double r(double u) const;
  // r(1) = f(1).
  double r1() const;

 private:
  struct Table {
    std::vector<double> xs;
    std::vector<double> fs;
    double r1;
  };

  explicit Kernel(KernelKind kind) : kind_(kind) {}
  double f_unchecked(double u) const;

  KernelKind kind_;
  std::shared_ptr<const Table> table_;
};

inline double eval_f(const Kernel& k, double u) { return k.f(u); }
inline double eval_r(const Kernel& k, double u) { return k.r(u); }

struct Assumption1Report {
  bool nonnegative = false;
  bool nondecreasing = false;
  bool convex = false;
  // Most negative value among f, its first and its second differences; 0 when
  // nothing is negative.
  double worst_violation = 0.0;
};

struct Assumption2Report {
  bool r0_is_one = false;
  bool r_nonincreasing = false;
  double worst_violation = 0.0;
};

// f >= 0, non-decreasing and convex on a uniform grid over [0,1].
Assumption1Report check_assumption1(const Kernel& kernel, int grid_size);
// f(u) = u r(u) with r(0+) = 1 and r non-increasing on the grid.
Assumption2Report check_assumption2(const Kernel& kernel, int grid_size);

}  // namespace robustsub
