// Command-line front end: gen | kernelize | decide | approx | exact | verify | bench.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "maxleaf/approx.hpp"
#include "maxleaf/errors.hpp"
#include "maxleaf/exact.hpp"
#include "maxleaf/gen.hpp"
#include "maxleaf/io.hpp"
#include "maxleaf/reduce.hpp"

using namespace maxleaf;

namespace {

constexpr int kExitParse = 2;
constexpr int kExitInfeasible = 3;
constexpr int kExitInvariant = 4;

RootedDigraph input_graph(const std::string& path) {
  if (path == "-") return read_graph(std::cin);
  return load_graph(path);
}

void emit_graph(const std::string& path, const RootedDigraph& d) {
  if (path.empty() || path == "-") {
    write_graph(std::cout, d);
  } else {
    save_graph(path, d);
  }
}

void write_dot(const std::string& path, const std::string& text) {
  if (path.empty()) return;
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

RootedDigraph with_root(const RootedDigraph& d, Vertex root) {
  const auto arcs = d.arcs();
  return RootedDigraph::build(d.vertex_count(), root, arcs);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Maximum leaf outbranching toolkit"};
  app.require_subcommand(1);

  GenSpec spec;
  std::string family = "random";
  std::string out_path;
  std::string dot_path;
  std::string in_path;
  std::string tree_path;
  std::string trace_path;
  int k = 1;
  int limit = kDefaultExactLimit;
  int count = 10;
  bool all_roots = false;

  auto* gen = app.add_subcommand("gen", "generate a graph");
  gen->add_option("--family", family, "t_l|boloney|random|star|dipath|bipath_chain")->required();
  gen->add_option("--size,-n", spec.size, "family size parameter")->required();
  gen->add_option("--p", spec.p, "extra arc probability (random)");
  gen->add_option("--seed", spec.seed, "seed (random)");
  gen->add_flag("--oriented", spec.oriented, "no 2-circuits (random)");
  gen->add_option("-o,--output", out_path, "graph file, stdout if omitted");
  gen->add_option("--dot", dot_path, "also write DOT");

  auto* kern = app.add_subcommand("kernelize", "apply the reduction rules");
  kern->add_option("graph", in_path)->required();
  kern->add_option("-o,--output", out_path, "reduced graph file");
  kern->add_option("--trace", trace_path, "reduction trace file");

  auto* dec = app.add_subcommand("decide", "is there an outbranching with k leaves");
  dec->add_option("graph", in_path)->required();
  dec->add_option("-k", k, "leaf target")->required();
  dec->add_option("-w,--witness", tree_path, "witness tree file when TRUE");

  auto* apx = app.add_subcommand("approx", "factor-92 approximation");
  apx->add_option("graph", in_path)->required();
  apx->add_option("-o,--output", tree_path, "lifted tree file");
  apx->add_option("--dot", dot_path, "write DOT of the tree");
  apx->add_flag("--all-roots", all_roots, "try every root, ignoring the given one");

  auto* ex = app.add_subcommand("exact", "exhaustive optimum");
  ex->add_option("graph", in_path)->required();
  ex->add_option("-o,--output", tree_path, "witness tree file");
  ex->add_option("--limit", limit, "largest vertex count accepted");
  ex->add_option("--dot", dot_path, "write DOT of the witness");

  auto* ver = app.add_subcommand("verify", "check a tree against a graph");
  ver->add_option("graph", in_path)->required();
  ver->add_option("tree", tree_path)->required();

  auto* bench = app.add_subcommand("bench", "compare approx with exact over generated instances");
  bench->add_option("--family", family)->required();
  bench->add_option("--n,--size", spec.size)->required();
  bench->add_option("--count", count);
  bench->add_option("--seed", spec.seed);
  bench->add_option("--p", spec.p);
  bench->add_flag("--oriented", spec.oriented);
  bench->add_option("--limit", limit);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (gen->parsed()) {
      spec.family = parse_family(family);
      const auto d = generate(spec);
      emit_graph(out_path, d);
      write_dot(dot_path, to_dot(d));
      return 0;
    }
    if (kern->parsed()) {
      const auto d = input_graph(in_path);
      const auto kernel = kernelize(d);
      std::cout << "n=" << d.vertex_count() << " m=" << d.arc_count() << "\n"
                << "reduced_n=" << kernel.reduced.vertex_count()
                << " reduced_m=" << kernel.reduced.arc_count() << "\n"
                << "steps=" << kernel.trace.steps.size() << "\n";
      if (!out_path.empty()) save_graph(out_path, kernel.reduced);
      if (!trace_path.empty()) {
        std::ofstream t(trace_path);
        t << kernel.trace.to_text();
      }
      return 0;
    }
    if (dec->parsed()) {
      const auto d = input_graph(in_path);
      const auto result = decide(d, k);
      switch (result.verdict) {
        case Verdict::kTrueWithWitness:
          std::cout << "TRUE leaves=" << result.witness->leaf_count() << "\n";
          if (!tree_path.empty()) save_tree(tree_path, *result.witness);
          break;
        case Verdict::kFalse:
          std::cout << "FALSE\n";
          return kExitInfeasible;
        case Verdict::kReduced:
          std::cout << "REDUCED n=" << result.reduced.vertex_count()
                    << " threshold=" << kernel_threshold(k) << "\n";
          break;
      }
      return 0;
    }
    if (apx->parsed()) {
      const auto d = input_graph(in_path);
      std::optional<Approximation> best;
      if (all_roots) {
        for (Vertex r = 0; r < d.vertex_count(); ++r) {
          const auto rooted = with_root(d, r);
          if (!is_connected(rooted)) continue;
          auto a = approximate(rooted);
          if (!best || a.report.leaves > best->report.leaves) best = std::move(a);
        }
        if (!best) throw InfeasibleInstance("no vertex reaches all others");
        std::cout << "root=" << best->tree.root() << "\n";
      } else {
        best = approximate(d);
      }
      std::cout << best->report.to_text();
      if (!tree_path.empty()) save_tree(tree_path, best->tree);
      write_dot(dot_path, to_dot(all_roots ? with_root(d, best->tree.root()) : d, best->tree));
      return 0;
    }
    if (ex->parsed()) {
      const auto d = input_graph(in_path);
      const auto result = maxleaf_exact(d, limit);
      std::cout << result.maxleaf << "\n";
      if (!tree_path.empty()) save_tree(tree_path, result.witness);
      write_dot(dot_path, to_dot(d, result.witness));
      return 0;
    }
    if (ver->parsed()) {
      const auto d = input_graph(in_path);
      const auto t = load_tree(tree_path);
      const auto check = verify_outbranching(d, t);
      if (check.ok) {
        std::cout << "OK leaves=" << check.leaf_count << "\n";
        return 0;
      }
      std::cout << "INVALID " << check.reason << "\n";
      return 1;
    }
    if (bench->parsed()) {
      spec.family = parse_family(family);
      const std::uint64_t first_seed = spec.seed;
      double worst = 1.0;
      std::cout << "instance,n,m,l,h,exact,approx,ratio\n";
      for (int i = 0; i < count; ++i) {
        spec.seed = first_seed + static_cast<std::uint64_t>(i);
        const auto d = generate(spec);
        const auto a = approximate(d);
        std::cout << i << ',' << d.vertex_count() << ',' << d.arc_count() << ',' << a.report.l << ','
                  << a.report.h << ',';
        if (d.vertex_count() <= limit) {
          const int opt = maxleaf_exact(d, limit).maxleaf;
          const double ratio = static_cast<double>(opt) / a.report.leaves;
          worst = std::max(worst, ratio);
          std::cout << opt << ',' << a.report.leaves << ',' << std::fixed << std::setprecision(4) << ratio
                    << std::defaultfloat << '\n';
        } else {
          std::cout << ",," << a.report.leaves << ",\n";
        }
      }
      std::cerr << "worst_ratio=" << std::fixed << std::setprecision(4) << worst << "\n";
      return 0;
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const InfeasibleInstance& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    return kExitInfeasible;
  } catch (const InvariantViolation& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return kExitInvariant;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
