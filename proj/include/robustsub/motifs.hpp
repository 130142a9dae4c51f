#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "robustsub/graph.hpp"
#include "robustsub/patterns.hpp"

namespace robustsub {

// Non-induced copies of pattern in g: injective edge-preserving maps divided
// by Aut(pattern). k <= 5, otherwise PatternTooLarge. threads = 0 picks the
// hardware concurrency; small graphs always run on the calling thread.
std::uint64_t count_copies(const Graph& g, const Pattern& pattern, unsigned threads = 0);

std::uint64_t count_triangles(const Graph& g);
std::uint64_t count_k4(const Graph& g);

// Degree statistics in population form.
struct SummaryStats {
  std::size_t n = 0;
  double mu = 0.0;
  double mad = 0.0;
  double h_max = 0.0;
  double sigma2 = 0.0;
  double h_min = 0.0;
};

SummaryStats summary_stats(const Graph& g);

enum class CutoffChoice { SqrtMuN, HMax };
enum class BoundVariant { MAD, VarianceMAD };

std::string_view to_string(CutoffChoice c);
std::string_view to_string(BoundVariant v);
CutoffChoice parse_cutoff(std::string_view s);
BoundVariant parse_variant(std::string_view s);

struct RatioOptions {
  CutoffChoice cutoff = CutoffChoice::SqrtMuN;
  BoundVariant variant = BoundVariant::MAD;
  // Replace the empirical statistics, e.g. with the generating parameters.
  std::optional<double> mu;
  std::optional<double> d;
  std::optional<double> sigma2;
  std::optional<double> n;
  unsigned threads = 0;
};

struct RatioEntry {
  std::string pattern;
  std::uint64_t observed = 0;
  double bound = 0.0;
  // observed / bound; +inf when the bound is 0.
  double ratio = 0.0;
};

struct RatioReport {
  std::vector<RatioEntry> entries;
  CutoffChoice cutoff = CutoffChoice::SqrtMuN;
  BoundVariant variant = BoundVariant::MAD;
  SummaryStats stats;
  double h_c = 0.0;
  // MAD the bound was evaluated with; for the variance variant, the MAD
  // 2 sigma^2 / (h_c - 1) of the variance-matched extremal graph.
  double d = 0.0;
};

// Chung-Lu bounds with the MAD formula or the diminishing-MAD variance formula,
// h_c = sqrt(mu n) or the largest degree, compared with exact counts.
RatioReport bound_ratio(const Graph& g, std::span<const Pattern> patterns, const RatioOptions& options = {});

}  // namespace robustsub
