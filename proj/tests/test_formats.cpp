#include <fstream>
#include <sstream>

#include "doctest.h"
#include "fixtures.hpp"
#include "ssnc/errors.hpp"
#include "ssnc/formats.hpp"
#include "ssnc/generators.hpp"
#include "ssnc/prng.hpp"

using namespace ssnc;

namespace {

struct Golden {
  std::string name;
  Digraph graph;
  std::string code;
};

std::vector<Golden> load_golden() {
  std::ifstream in(fx::data_dir() + "/digraph6_golden.txt");
  std::vector<Golden> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream row(line);
    Golden g;
    std::size_t n;
    std::string arcs;
    row >> g.name >> n >> arcs >> g.code;
    std::vector<Arc> list;
    if (arcs != "-") {
      std::istringstream as(arcs);
      std::string item;
      while (std::getline(as, item, ',')) {
        const auto dash = item.find('-');
        list.push_back({Vertex(std::stoul(item.substr(0, dash))), Vertex(std::stoul(item.substr(dash + 1)))});
      }
    }
    g.graph = Digraph::build(n, list);
    out.push_back(std::move(g));
  }
  return out;
}

std::pair<ErrorKind, std::size_t> parse_failure(std::string_view text) {
  try {
    parse_edgelist(text);
  } catch (const ParseError& e) {
    return {e.kind(), e.line()};
  }
  FAIL("parsed");
  return {ErrorKind::Io, 0};
}

}  // namespace

TEST_CASE("edge lists") {
  CHECK(parse_edgelist("3\n0 1\n1 2\n2 0\n") == fx::c3());
  CHECK(parse_edgelist("# header\n\n3  # order\n0 1\n1 2 # arc\n2 0") == fx::c3());
  const Digraph one = parse_edgelist("1\n");
  CHECK(one.order() == 1);
  CHECK(one.arc_count() == 0);
  CHECK(emit_edgelist(fx::c3()) == "3\n0 1\n1 2\n2 0\n");

  CHECK(parse_failure("2\n0 1\n1 0\n") == std::pair{ErrorKind::TwoCycle, std::size_t{3}});
  CHECK(parse_failure("2\n0 0\n") == std::pair{ErrorKind::SelfLoop, std::size_t{2}});
  CHECK(parse_failure("2\n0 5\n") == std::pair{ErrorKind::OutOfRange, std::size_t{2}});
  CHECK(parse_failure("2\n0 x\n").second == 2);
  CHECK(parse_failure("2\n0 1 2\n").second == 2);
  CHECK(parse_failure("# nothing\n").first == ErrorKind::ParseError);
  CHECK(parse_failure("-3\n").second == 1);
}

TEST_CASE("digraph6 golden encodings") {
  const auto golden = load_golden();
  CHECK(golden.size() >= 40);
  for (const Golden& g : golden) {
    INFO(g.name);
    CHECK(emit_digraph6(g.graph) == g.code);
    CHECK(parse_digraph6(g.code) == g.graph);
  }
  CHECK(emit_digraph6(Digraph::build(1, {})) == "&@?");
  CHECK(emit_digraph6(fx::c3()) == "&BP_");
}

TEST_CASE("digraph6 errors") {
  auto kind = [](std::string_view s) {
    try {
      parse_digraph6(s);
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::Io;
  };
  CHECK(kind("BP_") == ErrorKind::ParseError);
  CHECK(kind("&") == ErrorKind::ParseError);
  CHECK(kind("&BP") == ErrorKind::ParseError);
  CHECK(kind("&BP_?") == ErrorKind::ParseError);
  CHECK(kind("&BP\x7f") == ErrorKind::ParseError);
  CHECK(kind("&BP`") == ErrorKind::ParseError);  // padding bit set
  CHECK(kind("&~") == ErrorKind::Unsupported);
  CHECK(kind("&A_") == ErrorKind::SelfLoop);
  CHECK(parse_digraph6("&BP_\n") == fx::c3());
  CHECK_THROWS_AS(emit_digraph6(Digraph::build(63, {})), Error);
  CHECK(compact_encoding(Digraph::build(63, {})).starts_with("63\n"));
}

TEST_CASE("format detection") {
  CHECK(parse_graph("&BP_").format == GraphFormat::Digraph6);
  CHECK(parse_graph("3\n0 1\n").format == GraphFormat::Edgelist);
  CHECK(parse_graph("&BP_", GraphFormat::Digraph6).graph == fx::c3());
  CHECK(emit_graph(fx::c3(), GraphFormat::Digraph6) == "&BP_\n");
  CHECK(graph_format_from_string("digraph6") == GraphFormat::Digraph6);
  CHECK(!graph_format_from_string("dot"));
}

TEST_CASE("round trips on random digraphs") {
  SplitMix64 rng(8);
  for (int i = 0; i < 1000; ++i) {
    const std::size_t n = rng.below(63);
    const Digraph d = random_oriented(n, rng.uniform(), rng());
    const std::string code = emit_digraph6(d);
    CHECK(parse_digraph6(code) == d);
    CHECK(emit_digraph6(parse_digraph6(code)) == code);
    CHECK(parse_edgelist(emit_edgelist(d)) == d);
  }
}
