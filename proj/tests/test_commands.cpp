#include "doctest.h"
#include "fixtures.hpp"
#include "ssnc/commands.hpp"
#include "ssnc/errors.hpp"

using namespace ssnc;

namespace {

InputRef input(std::string_view text) { return {"memory", parse_graph(text)}; }

}  // namespace

TEST_CASE("check") {
  const CommandResult c3 = cmd_check(input("3\n0 1\n1 2\n2 0\n"), {3, 2});
  CHECK(c3.exit_code == kExitOk);
  CHECK(c3.report["profile"]["girth"] == 3);
  CHECK(c3.report["m_free"]["holds"] == true);
  CHECK(c3.report["seymour"]["seymour_vertices"] == Json::array({0, 1, 2}));
  CHECK(c3.report["schema_version"] == kReportSchemaVersion);

  const CommandResult t = cmd_check(input("3\n0 1\n1 2\n0 2\n"), {2, {}});
  const Json& v = t.report["profile"]["by_k"][0];
  CHECK(v["anti_transitive"] == false);
  CHECK(v["anti_transitive_witness"]["path"] == Json::array({0, 1, 2}));

  CHECK_THROWS_AS(input("2\n0 1\n1 0\n"), ParseError);

  const CommandResult empty = cmd_check(input("0\n"), {});
  CHECK(empty.exit_code == kExitOk);
  CHECK(empty.report["seymour"].is_null());
}

TEST_CASE("trace") {
  const CommandResult c5 = cmd_trace(input("5\n0 1\n1 2\n2 3\n3 4\n4 0\n"), 7, false);
  CHECK(c5.exit_code == kExitOk);
  CHECK(c5.report["trace"]["branch"] == "SmallDelta");
  CHECK(c5.report["trace"]["result"] == 0);

  const CommandResult tt3 = cmd_trace(input("3\n0 1\n1 2\n0 2\n"), 7, false);
  CHECK(tt3.exit_code == kExitOk);
  CHECK(tt3.report["trace"]["result"] == 2);

  const CommandResult bad = cmd_trace(input("8\n0 1\n1 2\n2 3\n3 4\n4 5\n5 6\n6 7\n0 7\n"), 7, false);
  CHECK(bad.exit_code == kExitPrecondition);
  CHECK(bad.report["error"]["witness"]["u"] == 0);
  CHECK(bad.report["error"]["witness"]["v"] == 7);

  CHECK_THROWS_AS(cmd_trace(input("3\n0 1\n"), 5, false), Error);
}

TEST_CASE("enumerate and hunt") {
  const CommandResult e = cmd_enumerate(4, {}, HuntTarget::SSNC, {});
  CHECK(e.exit_code == kExitOk);
  CHECK(e.report["summary"] == "729 scanned, 0 counterexamples");

  const CommandResult cac = cmd_enumerate(3, {}, HuntTarget::Caccetta, {});
  CHECK(cac.exit_code == kExitOk);
  CHECK(cac.report["hunt"]["hypothesis_met"] == 2);

  GenSpec spec;
  spec.kind = GenKind::RandomOriented;
  spec.n = 12;
  spec.p_arc = 0.3;
  spec.seed = 7;
  spec.limit = 10000;
  const CommandResult h = cmd_hunt(spec, HuntTarget::SSNC, {});
  CHECK(h.exit_code == kExitOk);
  CHECK(h.report["hunt"]["counterexamples"] == 0);
  CHECK(h.report["hunt"]["accepted"] == 10000);

  GenSpec layered;
  layered.kind = GenKind::Layered;
  layered.layered_k = 7;
  layered.delta = 8;
  layered.limit = 20;
  HuntOptions opts;
  opts.k = 7;
  const CommandResult p = cmd_hunt(layered, HuntTarget::Prover, opts);
  CHECK(p.exit_code == kExitOk);
  CHECK(p.report["hunt"]["branch_counts"].size() == kAllBranches.size());
}

TEST_CASE("reports are deterministic apart from timing") {
  GenSpec spec;
  spec.kind = GenKind::RandomOriented;
  spec.n = 10;
  spec.seed = 99;
  spec.limit = 300;
  const std::string a = dump_report(without_timing(cmd_hunt(spec, HuntTarget::SSNC, {}).report));
  const std::string b = dump_report(without_timing(cmd_hunt(spec, HuntTarget::SSNC, {}).report));
  CHECK(a == b);
  const Json r = cmd_hunt(spec, HuntTarget::SSNC, {}).report;
  CHECK(r.contains("timing"));
  CHECK(std::prev(r.end()).key() == "timing");
}

TEST_CASE("convert") {
  CHECK(cmd_convert(input("3\n0 1\n1 2\n2 0\n"), GraphFormat::Digraph6).text == "&BP_\n");
  CHECK(cmd_convert(input("&BP_"), GraphFormat::Edgelist).text == "3\n0 1\n1 2\n2 0\n");
}
