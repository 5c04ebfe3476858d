#include "ssnc/report.hpp"

#include "ssnc/formats.hpp"

namespace ssnc {

namespace {

template <typename T>
Json optional_json(const std::optional<T>& x) {
  return x ? to_json(*x) : Json(nullptr);
}

Json count_or_null(const std::optional<std::size_t>& x) { return x ? Json(*x) : Json(nullptr); }

Json triple(const std::optional<std::array<Vertex, 3>>& t) {
  return t ? Json::array({(*t)[0], (*t)[1], (*t)[2]}) : Json(nullptr);
}

}  // namespace

Json to_json(const VertexSet& s) { return Json(s.to_vector()); }

Json to_json(const Path& p) { return Json(p.vertices); }

Json to_json(const PathWitness& w) {
  return Json{{"u", w.u}, {"v", w.v}, {"path", to_json(w.path)}};
}

Json to_json(const Ratio& r) {
  return Json{{"num", r.num}, {"den", r.den}, {"value", r.value()}};
}

Json graph_summary(const Digraph& d) {
  Json j{{"n", d.order()}, {"arcs", d.arc_count()}};
  j["encoding"] = compact_encoding(d);
  return j;
}

Json to_json(const ClassProfile& p) {
  Json j;
  j["oriented"] = p.oriented;
  j["girth"] = count_or_null(p.girth);
  j["max_m_free"] = count_or_null(p.max_m_free);
  Json by_k = Json::array();
  for (const KVerdict& v : p.by_k) {
    by_k.push_back(Json{{"k", v.k},
                        {"anti_transitive", v.anti_transitive()},
                        {"anti_transitive_witness", optional_json(v.anti_transitive_violation)},
                        {"transitive", v.transitive()},
                        {"transitive_witness", optional_json(v.transitive_violation)},
                        {"quasi_transitive", v.quasi_transitive()},
                        {"quasi_transitive_witness", optional_json(v.quasi_transitive_violation)}});
  }
  j["by_k"] = std::move(by_k);
  j["transitive_triangle_free"] = p.transitive_triangle_free;
  j["transitive_triangle"] = triple(p.transitive_triangle);
  return j;
}

Json to_json(const SeymourReport& r) {
  Json rows = Json::array();
  for (const VertexRecord& rec : r.records)
    rows.push_back(Json{{"v", rec.v},
                        {"out_deg", rec.out_deg},
                        {"second_out_deg", rec.second_out_deg},
                        {"is_seymour", rec.is_seymour}});
  return Json{{"vertices", std::move(rows)},
              {"seymour_vertices", to_json(r.seymour_vertices)},
              {"max_ratio", optional_json(r.max_ratio)},
              {"min_slack", r.min_slack}};
}

Json to_json(const LambdaCheck& c) {
  const LambdaConstant& lambda = LambdaConstant::get();
  return Json{{"lambda", lambda.value},
              {"lambda_enclosure", Json{{"lo_num", lambda.lo_num},
                                        {"hi_num", lambda.hi_num},
                                        {"scale_bits", LambdaConstant::kScaleBits}}},
              {"max_ratio", optional_json(c.max_ratio)},
              {"passes", c.passes},
              {"marginal", c.marginal},
              {"witness", c.witness ? Json(*c.witness) : Json(nullptr)}};
}

Json to_json(const ProofTrace& t) {
  Json j;
  j["k"] = t.k;
  j["m"] = t.m;
  j["v"] = t.v;
  j["delta"] = t.delta;
  j["R"] = to_json(t.R);
  j["branch"] = std::string(to_string(t.branch));
  j["step"] = t.step;
  j["longest_path"] = to_json(t.subpath);
  j["longest_path_length"] = t.subpath.length();
  j["B"] = to_json(t.B);
  j["X"] = optional_json(t.X);
  j["z_chain"] = t.z_chain;
  Json named = Json::array();
  for (const auto& [role, x] : t.named) named.push_back(Json{{"role", role}, {"vertex", x}});
  j["named"] = std::move(named);
  j["notes"] = t.notes;
  Json asserts = Json::array();
  for (const Assertion& a : t.assertions) asserts.push_back(Json{{"text", a.text}, {"holds", a.holds}});
  j["assertions"] = std::move(asserts);
  j["result"] = t.result;
  return j;
}

Json to_json(const TraceError& e) {
  return Json{{"kind", std::string(to_string(e.kind))},
              {"message", e.message},
              {"involved", e.involved},
              {"witness", optional_json(e.witness)},
              {"partial", to_json(e.partial)}};
}

Json to_json(const GenSpec& s) {
  Json j;
  j["kind"] = std::string(to_string(s.kind));
  j["n"] = s.n;
  j["n_max"] = s.n_max;
  j["p_arc"] = s.p_arc;
  j["p_arc_max"] = s.p_arc_max;
  j["seed"] = s.seed;
  j["connection_set"] = s.connection_set;
  j["layered_k"] = s.layered_k;
  j["delta"] = s.delta;
  j["delta_max"] = s.delta_max;
  Json filters = Json::array();
  for (const Filter& f : s.filters) filters.push_back(f.describe());
  j["filters"] = std::move(filters);
  j["limit"] = s.limit;
  j["max_scanned"] = s.max_scanned;
  return j;
}

Json to_json(const HuntReport& r) {
  Json j;
  j["target"] = std::string(to_string(r.target));
  j["scanned"] = r.scanned;
  j["accepted"] = r.accepted;
  j["acceptance_rate"] = r.acceptance_rate();
  j["hypothesis_met"] = r.hypothesis_met;
  j["counterexamples"] = r.counterexamples;
  Json hist = Json::array();
  for (const auto& [slack, count] : r.min_slack_histogram)
    hist.push_back(Json{{"min_slack", slack}, {"count", count}});
  j["min_slack_histogram"] = std::move(hist);
  Json best = Json::array();
  for (const auto& [slack, count] : r.best_slack_histogram)
    best.push_back(Json{{"best_slack", slack}, {"count", count}});
  j["best_slack_histogram"] = std::move(best);
  if (r.target == HuntTarget::Prover) {
    Json branches = Json::object();
    for (Branch b : kAllBranches) {
      const auto it = r.branch_counts.find(std::string(to_string(b)));
      branches[std::string(to_string(b))] = it == r.branch_counts.end() ? 0 : it->second;
    }
    j["branch_counts"] = std::move(branches);
    j["step_counts"] = r.step_counts;
  }
  Json examples = Json::array();
  for (const Counterexample& ex : r.examples)
    examples.push_back(Json{{"index", ex.index}, {"encoding", ex.encoding}, {"detail", ex.detail}});
  j["examples"] = std::move(examples);
  return j;
}

Json make_report(std::string_view command) {
  Json j;
  j["schema_version"] = kReportSchemaVersion;
  j["tool"] = std::string(kToolName);
  j["tool_version"] = std::string(kToolVersion);
  j["command"] = std::string(command);
  return j;
}

void set_timing(Json& report, double elapsed_ms) {
  report.erase("timing");
  report["timing"] = Json{{"elapsed_ms", elapsed_ms}};
}

Json without_timing(Json report) {
  report.erase("timing");
  return report;
}

std::string dump_report(const Json& report) { return report.dump(2) + "\n"; }

}  // namespace ssnc
