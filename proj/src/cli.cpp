#include "robustsub/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include "robustsub/ambiguity.hpp"
#include "robustsub/bounds.hpp"
#include "robustsub/error.hpp"
#include "robustsub/graph.hpp"
#include "robustsub/graphgen.hpp"
#include "robustsub/kernels.hpp"
#include "robustsub/motifs.hpp"
#include "robustsub/patterns.hpp"

namespace robustsub::cli {

std::string format_number(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (std::isnan(x)) return "nan";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9g", x);
  return buf;
}

NGrid parse_n_grid(const std::string& text) {
  NGrid g;
  char extra = 0;
  if (std::sscanf(text.c_str(), "%lf:%lf:%d%c", &g.start, &g.stop, &g.points, &extra) != 3) {
    throw Error(ErrorCode::InvalidArgument, "n-grid must look like start:stop:points, got '" + text + "'");
  }
  if (!(g.start >= 1.0) || !(g.stop >= g.start) || g.points < 1 || (g.points == 1 && g.stop != g.start)) {
    throw Error(ErrorCode::InvalidArgument, "n-grid needs 1 <= start <= stop and points >= 1");
  }
  return g;
}

std::vector<double> expand(const NGrid& grid) {
  std::vector<double> ns;
  const double l0 = std::log10(grid.start), l1 = std::log10(grid.stop);
  for (int i = 0; i < grid.points; ++i) {
    const double t = grid.points == 1 ? 0.0 : static_cast<double>(i) / (grid.points - 1);
    ns.push_back(std::round(std::pow(10.0, l0 + t * (l1 - l0))));
  }
  return ns;
}

namespace {

struct Options {
  std::vector<std::string> patterns;
  int pattern_size = 0;
  std::optional<double> a, mu, mad, sigma2, hc, hs, n, tau;
  std::string kernel = "chung-lu";
  std::uint64_t seed = 1;
  std::string input, output, dat;
  std::string cutoff = "sqrt-mu-n";
  std::string variant = "mad";
  std::string n_grid;
  std::string model = "three-point";
  std::string regime;
  std::string from_powerlaw;
  int grid = 1001;
};

std::vector<Pattern> select_patterns(const Options& o, int default_size) {
  std::vector<Pattern> out;
  for (const auto& p : o.patterns) out.push_back(parse_pattern(p));
  if (o.pattern_size) {
    for (auto& p : catalog(o.pattern_size)) out.push_back(std::move(p));
  }
  if (out.empty()) {
    if (!default_size) throw Error(ErrorCode::InvalidArgument, "give --pattern or --pattern-size");
    out = catalog(default_size);
  }
  return out;
}

std::string pattern_label(const Pattern& p) { return p.name().empty() ? p.literal() : p.name(); }

double need(const std::optional<double>& v, const char* flag) {
  if (!v) throw Error(ErrorCode::InvalidArgument, std::string("missing ") + flag);
  return *v;
}

std::uint64_t as_count(double n) {
  if (!(n >= 1.0) || n != std::floor(n)) throw Error(ErrorCode::InvalidArgument, "--n must be a positive integer");
  return static_cast<std::uint64_t>(n);
}

// Three-point ambiguity parameters. --sigma2 in place of --mad selects the
// variance-matched MAD 2 sigma^2 / (h_c - a).
AmbiguityParams ambiguity_from(const Options& o) {
  AmbiguityParams p;
  p.a = o.a.value_or(0.0);
  p.mu = need(o.mu, "--mu");
  p.n = as_count(need(o.n, "--n"));
  p.h_c = o.hc.value_or(std::sqrt(p.mu * static_cast<double>(p.n)));
  p.h_s = o.hs.value_or(p.h_c);
  if (o.mad && o.sigma2) throw Error(ErrorCode::InvalidArgument, "--mad and --sigma2 are exclusive");
  if (o.sigma2) {
    p.d = 2.0 * *o.sigma2 / (p.h_c - p.a);
  } else {
    p.d = need(o.mad, "--mad or --sigma2");
  }
  p.validate();
  return p;
}

// --from-powerlaw tau=..,hc=..[,hmin=..]: a, mu and either the MAD or the
// variance of the truncated power law, with h_c as its cutoff.
Options with_powerlaw(Options o, bool want_variance) {
  if (o.from_powerlaw.empty()) return o;
  if (o.mad || o.sigma2 || o.mu) {
    throw Error(ErrorCode::InvalidArgument, "--from-powerlaw excludes --mu, --mad and --sigma2");
  }
  std::optional<double> tau, hc;
  double hmin = 1.0;
  std::stringstream ss(o.from_powerlaw);
  for (std::string item; std::getline(ss, item, ',');) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw Error(ErrorCode::InvalidArgument, "expected key=value in --from-powerlaw");
    const std::string key = item.substr(0, eq);
    double value = 0.0;
    try {
      value = std::stod(item.substr(eq + 1));
    } catch (const std::exception&) {
      throw Error(ErrorCode::InvalidArgument, "bad number in --from-powerlaw: " + item);
    }
    if (key == "tau") {
      tau = value;
    } else if (key == "hc") {
      hc = value;
    } else if (key == "hmin") {
      hmin = value;
    } else {
      throw Error(ErrorCode::InvalidArgument, "unknown --from-powerlaw key '" + key + "'");
    }
  }
  const PowerLawParams pl = powerlaw_params(need(tau, "tau= in --from-powerlaw"), need(hc, "hc= in --from-powerlaw"), hmin);
  o.a = pl.h_min;
  o.mu = pl.mu;
  o.hc = pl.h_c;
  if (want_variance) {
    o.sigma2 = pl.sigma2;
  } else {
    o.mad = pl.d;
  }
  return o;
}

class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : out_(&fallback) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw Error(ErrorCode::InvalidArgument, "cannot write " + path);
      out_ = file_.get();
    }
  }
  std::ostream& operator*() { return *out_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* out_;
};

// Bound CSV fields contain commas inside the literal, so it is quoted.
void bound_row_quoted(std::ostream& os, const Pattern& p, const BoundResult& r, double n) {
  os << pattern_label(p) << ",\"" << p.literal() << "\"," << to_string(r.regime) << ',' << format_number(n) << ','
     << format_number(r.value) << ',' << format_number(r.constant) << '\n';
}

constexpr const char* kBoundHeader = "pattern,name,regime,n,value,normalized_constant\n";

void warn(std::ostream& err, const BoundResult& r) {
  for (const auto& w : r.warnings) err << "warning: " << w << '\n';
  if (r.correlated_regime) err << "warning: h_c > h_s, kernel arguments above 1 were clamped\n";
}

int cmd_bound(const Options& opts, std::ostream& out, std::ostream& err) {
  const Options o = with_powerlaw(opts, false);
  const AmbiguityParams p = ambiguity_from(o);
  const Kernel kernel = Kernel::from_name(o.kernel);
  Sink sink(o.output, out);
  *sink << kBoundHeader;
  for (const auto& pat : select_patterns(o, 0)) {
    const BoundResult r = tight_bound(pat, p, kernel);
    warn(err, r);
    bound_row_quoted(*sink, pat, r, static_cast<double>(p.n));
  }
  return 0;
}

int cmd_scale(const Options& opts, std::ostream& out, std::ostream& err) {
  const BoundVariant variant = parse_variant(opts.variant);
  const Options o = with_powerlaw(opts, variant == BoundVariant::VarianceMAD);
  const Kernel kernel = Kernel::from_name(o.kernel);
  const double mu = need(o.mu, "--mu");
  const double n = need(o.n, "--n");
  const double h_c = o.hc.value_or(std::sqrt(mu * n));
  Sink sink(o.output, out);
  *sink << kBoundHeader;
  for (const auto& pat : select_patterns(o, 0)) {
    BoundResult r;
    if (variant == BoundVariant::MAD) {
      AmbiguityParams p;
      p.a = o.a.value_or(0.0);
      p.mu = mu;
      p.d = need(o.mad, "--mad");
      p.h_c = p.h_s = h_c;
      p.n = as_count(n);
      r = scaling_mad(pat, p, kernel);
    } else {
      r = scaling_variance(pat, mu, need(o.sigma2, "--sigma2"), h_c, n, kernel);
    }
    warn(err, r);
    bound_row_quoted(*sink, pat, r, n);
  }
  return 0;
}

// Clique counts for a power-law weight law and the two extremal counterparts:
// the MAD-matched exact tight bound and the variance-matched formula.
std::vector<std::pair<std::string, BoundResult>> powerlaw_rows(int k, double tau, double n) {
  std::vector<std::pair<std::string, BoundResult>> rows;
  if (tau > 1.0 && tau < 2.0) {
    rows.emplace_back("power-law", powerlaw_clique_scaling_dense(k, tau, n));
  } else {
    rows.emplace_back("power-law", powerlaw_clique_count(k, tau, n));
    rows.emplace_back("variance-matched", variance_matched_clique_bound(k, tau, n));
  }
  const double h_c = self_consistent_cutoff(tau, n);
  const PowerLawParams pl = powerlaw_params(tau, h_c);
  AmbiguityParams p;
  p.a = pl.h_min;
  p.mu = pl.mu;
  p.d = pl.d;
  p.h_c = p.h_s = h_c;
  p.n = static_cast<std::uint64_t>(n);
  rows.emplace_back("mad-matched", tight_bound(complete_pattern(k), p, Kernel::chung_lu()));
  return rows;
}

int cmd_powerlaw(const Options& o, std::ostream& out, std::ostream& err) {
  const double tau = need(o.tau, "--tau");
  const double n = need(o.n, "--n");
  if (o.mad || o.sigma2) throw Error(ErrorCode::InvalidArgument, "--tau excludes --mad and --sigma2");
  const int k = o.pattern_size ? o.pattern_size : 3;
  const double h_c = self_consistent_cutoff(tau, n);
  const PowerLawParams pl = powerlaw_params(tau, h_c);
  err << "# tau=" << format_number(tau) << " h_c=" << format_number(h_c) << " C=" << format_number(pl.C)
      << " mu=" << format_number(pl.mu) << " d=" << format_number(pl.d) << " sigma2=" << format_number(pl.sigma2)
      << '\n';
  Sink sink(o.output, out);
  *sink << "k,model,regime,n,value,normalized_constant\n";
  for (const auto& [model, r] : powerlaw_rows(k, tau, n)) {
    warn(err, r);
    *sink << k << ',' << model << ',' << to_string(r.regime) << ',' << format_number(n) << ','
          << format_number(r.value) << ',' << format_number(r.constant) << '\n';
  }
  return 0;
}

int cmd_gen(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.output.empty()) throw Error(ErrorCode::InvalidArgument, "gen needs --output");
  const Kernel kernel = Kernel::from_name(o.kernel);
  nlohmann::ordered_json meta;
  WeightVector w;
  double h_s = 0.0;
  const std::uint64_t n = as_count(need(o.n, "--n"));
  meta["n"] = n;
  meta["seed"] = o.seed;
  meta["kernel"] = kernel.name();
  meta["model"] = o.model;
  if (o.model == "three-point") {
    const AmbiguityParams p = ambiguity_from(o);
    const ThreePointDistribution dist = three_point(p);
    w = sample_weights_three_point(dist, n, o.seed);
    h_s = p.h_s;
    meta["params"] = {{"a", p.a}, {"mu", p.mu}, {"d", p.d}, {"h_c", p.h_c}, {"h_s", p.h_s}};
  } else if (o.model == "powerlaw") {
    if (o.mad || o.sigma2) throw Error(ErrorCode::InvalidArgument, "--tau excludes --mad and --sigma2");
    const double tau = need(o.tau, "--tau");
    const double h_c = o.hc.value_or(self_consistent_cutoff(tau, static_cast<double>(n)));
    const PowerLawParams pl = powerlaw_params(tau, h_c);
    w = sample_weights_powerlaw(pl, n, o.seed);
    h_s = o.hs.value_or(h_c);
    meta["params"] = {{"tau", tau}, {"h_min", pl.h_min}, {"h_c", h_c}, {"h_s", h_s},
                      {"mu", pl.mu}, {"d", pl.d},       {"sigma2", pl.sigma2}};
  } else {
    throw Error(ErrorCode::InvalidArgument, "--model must be three-point or powerlaw");
  }
  // Weights and edges use separate seeds derived from the one given.
  const Realization real = realize_graph(w, kernel, h_s, o.seed ^ 0x5bd1e995ULL);
  if (real.clamped) err << "warning: some h_i h_j exceeded h_s^2; f was evaluated at 1\n";
  {
    std::ofstream f(o.output);
    if (!f) throw Error(ErrorCode::InvalidArgument, "cannot write " + o.output);
    f << "# n=" << n << '\n';
    write_edge_list(f, real.graph);
  }
  meta["edges"] = real.graph.edge_count();
  meta["clamped"] = real.clamped;
  std::ofstream(o.output + ".meta.json") << meta.dump(2) << '\n';
  out << "n,edges,output\n" << n << ',' << real.graph.edge_count() << ',' << o.output << '\n';
  return 0;
}

EdgeListData load(const Options& o, std::ostream& err) {
  if (o.input.empty()) throw Error(ErrorCode::InvalidArgument, "missing --input");
  EdgeListData data = read_edge_list_file(o.input);
  if (data.self_loops || data.duplicates) {
    err << "warning: dropped " << data.self_loops << " self-loops and " << data.duplicates << " duplicate edges\n";
  }
  return data;
}

int cmd_count(const Options& o, std::ostream& out, std::ostream& err) {
  const EdgeListData data = load(o, err);
  Sink sink(o.output, out);
  *sink << "pattern,count\n";
  for (const auto& pat : select_patterns(o, 4)) *sink << pattern_label(pat) << ',' << count_copies(data.graph, pat) << '\n';
  return 0;
}

int cmd_stats(const Options& o, std::ostream& out, std::ostream& err) {
  const EdgeListData data = load(o, err);
  const SummaryStats s = summary_stats(data.graph);
  Sink sink(o.output, out);
  *sink << "n,mu,d,h_max,sigma2\n"
        << s.n << ',' << format_number(s.mu) << ',' << format_number(s.mad) << ',' << format_number(s.h_max) << ','
        << format_number(s.sigma2) << '\n';
  return 0;
}

int cmd_compare(const Options& o, std::ostream& out, std::ostream& err) {
  const EdgeListData data = load(o, err);
  RatioOptions ro;
  ro.cutoff = parse_cutoff(o.cutoff);
  ro.variant = parse_variant(o.variant);
  ro.mu = o.mu;
  ro.d = o.mad;
  ro.sigma2 = o.sigma2;
  ro.n = o.n;
  Graph g = data.graph;
  // Isolated vertices do not appear in an edge list; --n restores them.
  if (o.n && *o.n > static_cast<double>(g.n())) g = Graph::from_edges(as_count(*o.n), g.edges());
  const auto patterns = select_patterns(o, 4);
  const RatioReport rep = bound_ratio(g, patterns, ro);
  err << "# h_c=" << format_number(rep.h_c) << " d=" << format_number(rep.d) << '\n';
  Sink sink(o.output, out);
  *sink << "pattern,observed,bound,ratio,variant,cutoff\n";
  for (const auto& e : rep.entries) {
    *sink << e.pattern << ',' << e.observed << ',' << format_number(e.bound) << ',' << format_number(e.ratio) << ','
          << to_string(rep.variant) << ',' << to_string(rep.cutoff) << '\n';
  }
  return 0;
}

int cmd_check_kernel(const Options& o, std::ostream& out, std::ostream&) {
  const Kernel kernel = Kernel::from_name(o.kernel);
  const Assumption1Report a1 = check_assumption1(kernel, o.grid);
  const Assumption2Report a2 = check_assumption2(kernel, o.grid);
  auto yn = [](bool b) { return b ? "true" : "false"; };
  Sink sink(o.output, out);
  *sink << "check,value\n"
        << "kernel," << kernel.name() << '\n'
        << "r1," << format_number(kernel.r1()) << '\n'
        << "assumption1," << (a1.nonnegative && a1.nondecreasing && a1.convex ? "pass" : "fail") << '\n'
        << "assumption1_nonnegative," << yn(a1.nonnegative) << '\n'
        << "assumption1_nondecreasing," << yn(a1.nondecreasing) << '\n'
        << "assumption1_convex," << yn(a1.convex) << '\n'
        << "assumption1_worst_violation," << format_number(a1.worst_violation) << '\n'
        << "assumption2," << (a2.r0_is_one && a2.r_nonincreasing ? "pass" : "fail") << '\n'
        << "assumption2_r0_is_one," << yn(a2.r0_is_one) << '\n'
        << "assumption2_r_nonincreasing," << yn(a2.r_nonincreasing) << '\n'
        << "assumption2_worst_violation," << format_number(a2.worst_violation) << '\n';
  return 0;
}

// Bound curves over a log n-grid. Without --tau: the exact tight bound (or the
// asymptotic formula with --regime mad / variance) at h_c = h_s = sqrt(mu n).
// With --tau: the power-law, variance-matched and MAD-matched clique rows.
int cmd_sweep(const Options& o, std::ostream& out, std::ostream& err) {
  const std::vector<double> ns = expand(parse_n_grid(o.n_grid.empty() ? "1000:1000000000:13" : o.n_grid));
  struct Row {
    double n;
    std::string pattern, regime;
    double value, constant;
  };
  std::vector<Row> rows;
  if (o.tau) {
    if (o.mad || o.sigma2) throw Error(ErrorCode::InvalidArgument, "--tau excludes --mad and --sigma2");
    const int k = o.pattern_size ? o.pattern_size : 3;
    for (double n : ns) {
      for (const auto& [model, r] : powerlaw_rows(k, *o.tau, n)) {
        rows.push_back({n, "k" + std::to_string(k), model, r.value, r.constant});
      }
    }
  } else {
    const Kernel kernel = Kernel::from_name(o.kernel);
    const std::string regime = o.regime.empty() ? "exact" : o.regime;
    for (double n : ns) {
      Options at = o;
      at.n = n;
      at.hc.reset();
      at.hs.reset();
      for (const auto& pat : select_patterns(o, 0)) {
        BoundResult r;
        if (regime == "exact") {
          r = tight_bound(pat, ambiguity_from(at), kernel);
        } else if (regime == "mad") {
          r = scaling_mad(pat, ambiguity_from(at), kernel);
        } else if (regime == "variance") {
          r = scaling_variance(pat, need(o.mu, "--mu"), need(o.sigma2, "--sigma2"),
                               std::sqrt(*o.mu * n), n, kernel);
        } else {
          throw Error(ErrorCode::InvalidArgument, "--regime must be exact, mad or variance");
        }
        warn(err, r);
        rows.push_back({n, pattern_label(pat), std::string(to_string(r.regime)), r.value, r.constant});
      }
    }
  }
  Sink sink(o.output, out);
  *sink << "n,pattern,regime,value,normalized_constant\n";
  for (const auto& r : rows) {
    *sink << format_number(r.n) << ',' << r.pattern << ',' << r.regime << ',' << format_number(r.value) << ','
          << format_number(r.constant) << '\n';
  }
  if (!o.dat.empty()) {
    std::ofstream dat(o.dat);
    if (!dat) throw Error(ErrorCode::InvalidArgument, "cannot write " + o.dat);
    dat << "# n value pattern regime\n";
    for (const auto& r : rows) {
      const std::string key = r.pattern + " " + r.regime;
      dat << format_number(r.n) << ' ' << format_number(r.value) << ' ' << key << '\n';
    }
  }
  return 0;
}

constexpr const char* kSchemas = R"(CSV outputs (numbers with 9 significant digits):
  bound, scale    pattern,name,regime,n,value,normalized_constant
  powerlaw        k,model,regime,n,value,normalized_constant
  sweep           n,pattern,regime,value,normalized_constant
  count           pattern,count
  stats           n,mu,d,h_max,sigma2
  compare         pattern,observed,bound,ratio,variant,cutoff
  check-kernel    check,value
Exit status: 0 ok, 1 infeasible parameters or failed run, 2 usage error.)";

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Robust subgraph-count bounds for hidden-variable random graphs"};
  app.footer(kSchemas);
  app.set_config("--config", "", "key=value configuration file");
  app.require_subcommand(1);
  Options o;

  using Handler = std::function<int(const Options&, std::ostream&, std::ostream&)>;
  std::vector<std::pair<CLI::App*, Handler>> commands;

  auto patterns = [&](CLI::App* c) {
    c->add_option("--pattern", o.patterns, "pattern name, <k>:<index> or k=..;edges=.. (repeatable)");
    c->add_option("--pattern-size", o.pattern_size, "all connected patterns of this size")->check(CLI::Range(3, 5));
  };
  auto three_point = [&](CLI::App* c) {
    c->add_option("--a", o.a, "lower end of the weight range (default 0)");
    c->add_option("--mu", o.mu, "mean weight");
    c->add_option("--mad", o.mad, "mean absolute deviation");
    c->add_option("--sigma2", o.sigma2, "variance; sets d = 2 sigma2 / (h_c - a)");
    c->add_option("--hc", o.hc, "natural cutoff (default sqrt(mu n))");
    c->add_option("--hs", o.hs, "structural cutoff (default h_c)");
    c->add_option("--n", o.n, "number of vertices");
    c->add_option("--kernel", o.kernel, "chung-lu, poisson or generalized");
    c->add_option("--from-powerlaw", o.from_powerlaw, "tau=..,hc=..[,hmin=..]: take a, mu, d (or sigma2), h_c from a power law");
  };
  auto output = [&](CLI::App* c) { c->add_option("--output", o.output, "write CSV here instead of stdout"); };

  auto* bound = app.add_subcommand("bound", "exact maximal expected count over the MAD ambiguity set");
  patterns(bound), three_point(bound), output(bound);
  commands.emplace_back(bound, cmd_bound);

  auto* scale = app.add_subcommand("scale", "large-n limit with h_s = h_c");
  patterns(scale), three_point(scale), output(scale);
  scale->add_option("--variant", o.variant, "mad or variance")->check(CLI::IsMember({"mad", "variance"}));
  commands.emplace_back(scale, cmd_scale);

  auto* powerlaw = app.add_subcommand("powerlaw", "clique counts of power-law graphs against extremal bounds");
  powerlaw->add_option("--tau", o.tau, "degree exponent")->required();
  powerlaw->add_option("--n", o.n, "number of vertices")->required();
  powerlaw->add_option("--pattern-size", o.pattern_size, "clique size (default 3)")->check(CLI::Range(2, 8));
  powerlaw->add_option("--mad", o.mad)->group("");
  powerlaw->add_option("--sigma2", o.sigma2)->group("");
  output(powerlaw);
  commands.emplace_back(powerlaw, cmd_powerlaw);

  auto* gen = app.add_subcommand("gen", "sample a hidden-variable graph to an edge list plus .meta.json");
  three_point(gen);
  gen->add_option("--model", o.model, "three-point or powerlaw")->check(CLI::IsMember({"three-point", "powerlaw"}));
  gen->add_option("--tau", o.tau, "degree exponent for --model powerlaw");
  gen->add_option("--seed", o.seed, "random seed");
  gen->add_option("--output", o.output, "edge list path")->required();
  commands.emplace_back(gen, cmd_gen);

  auto* count = app.add_subcommand("count", "exact non-induced pattern counts (default: all size-4 patterns)");
  count->add_option("--input", o.input, "edge list")->required();
  patterns(count), output(count);
  commands.emplace_back(count, cmd_count);

  auto* stats = app.add_subcommand("stats", "degree summary statistics");
  stats->add_option("--input", o.input, "edge list")->required();
  output(stats);
  commands.emplace_back(stats, cmd_stats);

  auto* compare = app.add_subcommand("compare", "observed counts over Chung-Lu maximal bounds");
  compare->add_option("--input", o.input, "edge list")->required();
  patterns(compare), output(compare);
  compare->add_option("--cutoff", o.cutoff, "sqrt-mu-n or h-max")->check(CLI::IsMember({"sqrt-mu-n", "h-max"}));
  compare->add_option("--variant", o.variant, "mad or variance")->check(CLI::IsMember({"mad", "variance"}));
  compare->add_option("--mu", o.mu, "override the degree mean");
  compare->add_option("--mad", o.mad, "override the MAD");
  compare->add_option("--sigma2", o.sigma2, "override the variance");
  compare->add_option("--n", o.n, "override the vertex count (restores isolated vertices)");
  commands.emplace_back(compare, cmd_compare);

  auto* check = app.add_subcommand("check-kernel", "test a kernel against the two structural assumptions");
  check->add_option("--kernel", o.kernel, "chung-lu, poisson or generalized");
  check->add_option("--grid", o.grid, "grid points on [0,1]")->check(CLI::Range(3, 10000000));
  output(check);
  commands.emplace_back(check, cmd_check_kernel);

  auto* sweep = app.add_subcommand("sweep", "bounds over a log-spaced n grid with h_c = h_s = sqrt(mu n)");
  patterns(sweep), output(sweep);
  sweep->add_option("--a", o.a, "lower end of the weight range (default 0)");
  sweep->add_option("--mu", o.mu, "mean weight");
  sweep->add_option("--mad", o.mad, "mean absolute deviation");
  sweep->add_option("--sigma2", o.sigma2, "variance");
  sweep->add_option("--kernel", o.kernel, "chung-lu, poisson or generalized");
  sweep->add_option("--tau", o.tau, "power-law clique sweep instead");
  sweep->add_option("--regime", o.regime, "exact, mad or variance")->check(CLI::IsMember({"exact", "mad", "variance"}));
  sweep->add_option("--n-grid", o.n_grid, "start:stop:points (default 1000:1000000000:13)");
  sweep->add_option("--dat", o.dat, "also write a gnuplot .dat file");
  commands.emplace_back(sweep, cmd_sweep);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  for (auto& [sub, handler] : commands) {
    if (!sub->parsed()) continue;
    try {
      return handler(o, out, err);
    } catch (const Error& e) {
      err << "error: " << e.what() << '\n';
      switch (e.code()) {
        case ErrorCode::InvalidArgument:
        case ErrorCode::ParseError:
          return 2;
        default:
          return 1;
      }
    } catch (const std::exception& e) {
      err << "error: " << e.what() << '\n';
      return 1;
    }
  }
  return 2;
}

}  // namespace robustsub::cli
