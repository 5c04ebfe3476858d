#include "ssnc/commands.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <iterator>

#include "ssnc/errors.hpp"

namespace ssnc {

namespace {

class Stopwatch {
 public:
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

Json input_json(const InputRef& input) {
  Json j{{"source", input.name}, {"format", std::string(to_string(input.doc.format))}};
  j["graph"] = graph_summary(input.doc.graph);
  return j;
}

int hunt_exit_code(const HuntReport& r) {
  if (r.counterexamples == 0) return kExitOk;
  return r.target == HuntTarget::Prover ? kExitDivergence : kExitCounterexample;
}

}  // namespace

InputRef load_input(const std::string& path, std::optional<GraphFormat> format) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::Io, "cannot open '" + path + "'");
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  return {path, parse_graph(text, format)};
}

CommandResult cmd_check(const InputRef& input, const CheckOptions& options) {
  Stopwatch clock;
  const Digraph& d = input.doc.graph;
  CommandResult out;
  out.report = make_report("check");
  out.report["input"] = input_json(input);

  std::vector<std::size_t> ks;
  if (options.k) {
    ks.push_back(*options.k);
  } else {
    for (std::size_t k = 2; k <= 8; ++k) ks.push_back(k);
  }
  out.report["profile"] = to_json(profile(d, ks));
  if (options.m)
    out.report["m_free"] = Json{{"m", *options.m}, {"holds", is_m_free(d, *options.m)}};

  if (d.order() == 0) {
    out.report["seymour"] = nullptr;
    out.report["lambda"] = nullptr;
    out.report["verdict"] = "empty digraph";
    out.exit_code = kExitOk;
  } else {
    const SeymourReport rep = seymour_report(d);
    out.report["seymour"] = to_json(rep);
    out.report["lambda"] = to_json(lambda_ratio_check(d));
    const bool ok = !rep.seymour_vertices.empty();
    out.report["verdict"] = ok ? "seymour vertex found" : "no seymour vertex";
    out.exit_code = ok ? kExitOk : kExitCounterexample;
  }
  set_timing(out.report, clock.elapsed_ms());
  return out;
}

CommandResult cmd_trace(const InputRef& input, std::size_t k, bool skip_precheck) {
  Stopwatch clock;
  const Digraph& d = input.doc.graph;
  CommandResult out;
  out.report = make_report("trace");
  out.report["input"] = input_json(input);
  out.report["k"] = k;
  if (k < 6) throw Error(ErrorKind::BadParam, "trace needs k >= 6");

  ProverOptions opts;
  opts.skip_precheck = skip_precheck;
  const ProofOutcome res = find_seymour_constructive(d, k, opts);
  if (const ProofTrace* t = trace_of(res)) {
    out.report["status"] = "ok";
    out.report["trace"] = to_json(*t);
    out.report["error"] = nullptr;
    out.exit_code = kExitOk;
  } else {
    const TraceError& e = *error_of(res);
    out.report["status"] = std::string(to_string(e.kind));
    out.report["trace"] = nullptr;
    out.report["error"] = to_json(e);
    switch (e.kind) {
      case TraceErrorKind::PreconditionViolated: out.exit_code = kExitPrecondition; break;
      case TraceErrorKind::ProofDivergence: out.exit_code = kExitDivergence; break;
      case TraceErrorKind::FallbackExhausted: out.exit_code = kExitCounterexample; break;
    }
  }
  if (d.order() > 0) out.report["seymour"] = to_json(seymour_report(d));
  set_timing(out.report, clock.elapsed_ms());
  return out;
}

CommandResult cmd_enumerate(std::size_t n, const std::vector<Filter>& filters, HuntTarget target,
                            const HuntOptions& options) {
  Stopwatch clock;
  GenSpec spec;
  spec.kind = GenKind::Exhaustive;
  spec.n = n;
  spec.filters = filters;
  const HuntReport r = hunt_counterexamples(spec, target, options);
  CommandResult out;
  out.report = make_report("enumerate");
  out.report["spec"] = to_json(spec);
  out.report["hunt"] = to_json(r);
  out.report["summary"] = std::to_string(r.scanned) + " scanned, " +
                          std::to_string(r.counterexamples) + " counterexamples";
  out.exit_code = hunt_exit_code(r);
  set_timing(out.report, clock.elapsed_ms());
  return out;
}

CommandResult cmd_hunt(const GenSpec& spec, HuntTarget target, const HuntOptions& options) {
  Stopwatch clock;
  const HuntReport r = hunt_counterexamples(spec, target, options);
  CommandResult out;
  out.report = make_report("hunt");
  out.report["spec"] = to_json(spec);
  if (target == HuntTarget::Prover) out.report["k"] = options.k;
  out.report["hunt"] = to_json(r);
  out.report["summary"] = std::to_string(r.scanned) + " scanned, " +
                          std::to_string(r.counterexamples) + " counterexamples";
  out.exit_code = hunt_exit_code(r);
  set_timing(out.report, clock.elapsed_ms());
  return out;
}

CommandResult cmd_convert(const InputRef& input, GraphFormat to) {
  CommandResult out;
  out.text = emit_graph(input.doc.graph, to);
  return out;
}

}  // namespace ssnc
