#include <chrono>
#include <memory>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ssnc/commands.hpp"
#include "ssnc/errors.hpp"

namespace {

using namespace ssnc;

struct Common {
  std::string format;
  std::string out;
  std::optional<std::size_t> k;
  std::optional<std::size_t> m;
};

std::optional<GraphFormat> parse_format(const std::string& s) {
  if (s.empty()) return std::nullopt;
  auto f = graph_format_from_string(s);
  if (!f) throw Error(ErrorKind::BadParam, "unknown format '" + s + "'");
  return f;
}

HuntTarget parse_target(const std::string& s) {
  auto t = hunt_target_from_string(s);
  if (!t) throw Error(ErrorKind::BadParam, "unknown target '" + s + "'");
  return *t;
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorKind::Io, "cannot write '" + path + "'");
  f << text;
}

// Progress lines on stderr, at most one per second plus a final one.
HuntOptions with_progress(HuntOptions opts, bool quiet) {
  if (quiet) return opts;
  auto last = std::make_shared<std::chrono::steady_clock::time_point>(std::chrono::steady_clock::now());
  opts.progress = [last](const HuntReport& r) {
    const auto now = std::chrono::steady_clock::now();
    if (now - *last < std::chrono::seconds(1)) return;
    *last = now;
    std::cerr << "progress: " << r.scanned << " scanned, " << r.accepted << " accepted, "
              << r.counterexamples << " counterexamples\n";
  };
  return opts;
}

std::vector<Filter> filters_from(const Common& c, std::optional<std::size_t> min_out) {
  std::vector<Filter> f;
  if (c.k) f.push_back(Filter::k_anti_transitive(*c.k));
  if (c.m) f.push_back(Filter::m_free(*c.m));
  if (min_out) f.push_back(Filter::min_out_deg(*min_out));
  return f;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Seymour second-neighbourhood toolkit for oriented graphs"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolVersion));

  Common c;
  std::string input = "-";
  bool skip_precheck = false;
  bool quiet = false;
  std::size_t n = 0;
  std::optional<std::size_t> n_max, min_out, delta, delta_max, max_scanned;
  std::string target = "ssnc", kind = "random", to;
  double p = 0.5;
  std::optional<double> p_max;
  std::uint64_t seed = 0, limit = 0;
  std::size_t threads = 0;
  std::vector<std::size_t> connections;

  auto add_out = [&](CLI::App* sub) {
    sub->add_option("--out", c.out, "Write the report to FILE instead of stdout");
  };
  auto add_input = [&](CLI::App* sub) {
    sub->add_option("input", input, "Graph file, '-' for stdin")->default_val("-");
    sub->add_option("--format", c.format, "Input format: edgelist or digraph6 (default: detect)");
  };

  auto* check = app.add_subcommand("check", "Class profile and Seymour report of one digraph");
  add_input(check);
  check->add_option("--k", c.k, "Probe only this k");
  check->add_option("--m", c.m, "Also test m-freeness");
  add_out(check);

  auto* trace = app.add_subcommand("trace", "Run the constructive Seymour-vertex finder");
  add_input(trace);
  trace->add_option("--k", c.k, "Anti-transitivity parameter (>= 6)")->required();
  trace->add_flag("--skip-precheck", skip_precheck, "Skip the class recognizers");
  add_out(trace);

  auto* enumerate = app.add_subcommand("enumerate", "Exhaustive sweep over labelled oriented graphs");
  enumerate->add_option("--n", n, "Vertex count (<= 6)")->required();
  enumerate->add_option("--target", target, "ssnc, caccetta, lemma3 or prover");
  enumerate->add_option("--k", c.k, "k-anti-transitivity filter (and prover k)");
  enumerate->add_option("--m", c.m, "m-freeness filter");
  enumerate->add_option("--min-out-deg", min_out, "Minimum out-degree filter");
  enumerate->add_option("--threads", threads, "Worker threads (0 = all cores)");
  enumerate->add_flag("--quiet", quiet, "No progress lines");
  add_out(enumerate);

  auto* hunt = app.add_subcommand("hunt", "Counterexample hunt over a generated stream");
  hunt->add_option("--kind", kind, "random, tournament, circulant, layered, planted or exhaustive");
  hunt->add_option("--n", n, "Vertex count");
  hunt->add_option("--n-max", n_max, "Draw n from [n, n-max]");
  hunt->add_option("--p", p, "Arc probability");
  hunt->add_option("--p-max", p_max, "Draw p from [p, p-max)");
  hunt->add_option("--connections", connections, "Circulant connection set")->delimiter(',');
  hunt->add_option("--delta", delta, "Layered and planted: minimum out-degree");
  hunt->add_option("--delta-max", delta_max, "Layered and planted: draw delta from [delta, delta-max]");
  hunt->add_option("--seed", seed, "Stream seed");
  hunt->add_option("--limit", limit, "Stop after this many accepted instances");
  hunt->add_option("--max-scanned", max_scanned, "Stop after this many scanned instances");
  hunt->add_option("--target", target, "ssnc, caccetta, lemma3 or prover");
  hunt->add_option("--k", c.k, "k-anti-transitivity filter (and prover / layered k)");
  hunt->add_option("--m", c.m, "m-freeness filter");
  hunt->add_option("--min-out-deg", min_out, "Minimum out-degree filter");
  hunt->add_option("--threads", threads, "Worker threads (0 = all cores)");
  hunt->add_flag("--quiet", quiet, "No progress lines");
  add_out(hunt);

  auto* convert = app.add_subcommand("convert", "Convert between edgelist and digraph6");
  add_input(convert);
  convert->add_option("--to", to, "Output format")->required();
  add_out(convert);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    CommandResult result;
    if (*check) {
      result = cmd_check(load_input(input, parse_format(c.format)), {c.k, c.m});
    } else if (*trace) {
      result = cmd_trace(load_input(input, parse_format(c.format)), *c.k, skip_precheck);
    } else if (*enumerate) {
      HuntOptions opts;
      opts.threads = threads;
      if (c.k) opts.k = *c.k;
      result = cmd_enumerate(n, filters_from(c, min_out), parse_target(target),
                             with_progress(opts, quiet));
    } else if (*hunt) {
      GenSpec spec;
      auto k = gen_kind_from_string(kind);
      if (!k) throw Error(ErrorKind::BadParam, "unknown kind '" + kind + "'");
      spec.kind = *k;
      spec.n = n;
      spec.n_max = n_max.value_or(0);
      spec.p_arc = p;
      spec.p_arc_max = p_max.value_or(0.0);
      spec.seed = seed;
      spec.limit = limit;
      spec.max_scanned = max_scanned.value_or(0);
      spec.connection_set = connections;
      if (c.k) spec.layered_k = *c.k;
      if (delta) spec.delta = *delta;
      spec.delta_max = delta_max.value_or(0);
      spec.filters = filters_from(c, min_out);
      HuntOptions opts;
      opts.threads = threads;
      if (c.k) opts.k = *c.k;
      result = cmd_hunt(spec, parse_target(target), with_progress(opts, quiet));
      std::cerr << result.report["summary"].get<std::string>() << "\n";
    } else if (*convert) {
      auto fmt = parse_format(to);
      if (!fmt) throw Error(ErrorKind::BadParam, "--to needs a format");
      result = cmd_convert(load_input(input, parse_format(c.format)), *fmt);
    }
    if (*enumerate) std::cerr << result.report["summary"].get<std::string>() << "\n";
    write_output(c.out, *convert ? result.text : dump_report(result.report));
    return result.exit_code;
  } catch (const Error& e) {
    std::cerr << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    return kExitUsage;
  }
}
