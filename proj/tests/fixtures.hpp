#ifndef SSNC_TESTS_FIXTURES_HPP
#define SSNC_TESTS_FIXTURES_HPP

#include <string>
#include <vector>

#include "ssnc/digraph.hpp"

namespace fx {

inline ssnc::Digraph c3() { return ssnc::Digraph::build(3, {{0, 1}, {1, 2}, {2, 0}}); }
inline ssnc::Digraph tt3() { return ssnc::Digraph::build(3, {{0, 1}, {1, 2}, {0, 2}}); }
inline ssnc::Digraph cycle(std::size_t n) {
  std::vector<ssnc::Arc> arcs;
  for (ssnc::Vertex i = 0; i < n; ++i) arcs.push_back({i, (i + 1) % n});
  return ssnc::Digraph::build(n, arcs);
}
inline ssnc::Digraph c5() { return cycle(5); }
inline ssnc::Digraph c5_chord() {
  return ssnc::Digraph::build(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 2}});
}
inline ssnc::Digraph star4() { return ssnc::Digraph::build(4, {{0, 1}, {0, 2}, {0, 3}}); }

inline std::string data_dir() { return SSNC_TEST_DATA_DIR; }

}  // namespace fx

#endif  // SSNC_TESTS_FIXTURES_HPP
