#include "ssnc/prover.hpp"

#include <sstream>
#include <string>

#include "ssnc/errors.hpp"
#include "ssnc/seymour.hpp"

namespace ssnc {

std::string_view to_string(Branch b) {
  switch (b) {
    case Branch::SmallDelta: return "SmallDelta";
    case Branch::LargeM: return "LargeM";
    case Branch::Sink: return "Sink";
    case Branch::VSeymour: return "VSeymour";
    case Branch::Case1: return "Case1";
    case Branch::Case2a: return "Case2a";
    case Branch::Case2b: return "Case2b";
    case Branch::Case3a: return "Case3a";
    case Branch::Case3b: return "Case3b";
  }
  return "?";
}

std::optional<Branch> branch_from_string(std::string_view s) {
  for (Branch b : kAllBranches)
    if (to_string(b) == s) return b;
  return std::nullopt;
}

std::string_view to_string(TraceErrorKind k) {
  switch (k) {
    case TraceErrorKind::PreconditionViolated: return "PreconditionViolated";
    case TraceErrorKind::ProofDivergence: return "ProofDivergence";
    case TraceErrorKind::FallbackExhausted: return "FallbackExhausted";
  }
  return "?";
}

std::optional<Vertex> brute_force_seymour(const Digraph& d) {
  if (d.order() == 0) throw Error(ErrorKind::EmptyGraph, "digraph has no vertices");
  for (Vertex v = 0; v < d.order(); ++v)
    if (is_seymour_vertex(d, v)) return v;
  return std::nullopt;
}

std::optional<std::array<Vertex, 3>> find_directed_triangle(const Digraph& d) {
  for (Vertex x = 0; x < d.order(); ++x)
    for (Vertex y : d.out_nbrs(x)) {
      const VertexSet closing = d.out_nbrs(y) & d.in_nbrs(x);
      if (auto z = closing.first()) return std::array<Vertex, 3>{x, y, *z};
    }
  return std::nullopt;
}

CaccettaVerdict check_caccetta_instance(const Digraph& d) {
  CaccettaVerdict out;
  if (d.order() == 0) return out;
  const std::size_t n = d.order();
  out.hypothesis_met = 3 * d.min_in_deg() >= n && 3 * d.min_out_deg() >= n;
  out.triangle = find_directed_triangle(d);
  out.has_seymour_vertex = brute_force_seymour(d).has_value();
  out.consistent = !out.hypothesis_met || !out.has_seymour_vertex || out.triangle.has_value();
  return out;
}

namespace {

struct Divergence {
  std::string text;
  std::vector<Vertex> involved;
};

std::string rname(std::size_t i) { return "r_" + std::to_string(i); }

std::string set_text(const std::vector<std::size_t>& idx) {
  std::string s = "{";
  for (std::size_t i = 0; i < idx.size(); ++i) s += (i ? "," : "") + rname(idx[i]);
  return s + "}";
}

// Walks the case analysis on one instance. Every derived fact is evaluated
// and recorded; a false one aborts with Divergence.
class CaseAnalysis {
 public:
  CaseAnalysis(const Digraph& d, ProofTrace& t)
      : d_(d), t_(t), m_(t.m), delta_(t.delta), R_(t.R) {}

  void run() {
    const Vertex v = t_.v;
    for (Vertex x : R_)
      if (!d_.out_nbrs(x).intersects(R_)) {
        t_.branch = Branch::Sink;
        name("x", x);
        finish(v, "sink");
        return;
      }
    note("every vertex of R has an out-neighbour in R");

    if (d_.second_out_deg(v) >= delta_) {
      t_.branch = Branch::VSeymour;
      finish(v, "v-seymour");
      return;
    }
    require(d_.second_out_deg(v) + 1 <= delta_, "d++(v) <= delta - 1", {v});

    const LongestPath lp = longest_path_in(d_, R_);
    r_ = lp.path.vertices;
    sync_path();
    const std::size_t l = lp.length;
    require(l >= m_, "D[R] has a path of length >= m (l = " + std::to_string(l) + ")", r_);
    require(l <= m_ + 2, "longest path in D[R] has length <= m+2 (l = " + std::to_string(l) + ")",
            r_);
    if (l == m_)
      case1();
    else if (l == m_ + 1)
      case2();
    else
      case3();
  }

 private:
  // --- bookkeeping -------------------------------------------------------

  void require(bool cond, const std::string& text, std::vector<Vertex> involved = {}) {
    t_.assertions.push_back({text, cond});
    if (!cond) throw Divergence{text, std::move(involved)};
  }
  void note(std::string s) { t_.notes.push_back(std::move(s)); }
  void name(const std::string& role, Vertex x) { t_.named.emplace_back(role, x); }

  void finish(Vertex w, std::string step) {
    t_.result = w;
    t_.step = std::move(step);
  }

  Vertex r(std::size_t i) const {
    if (i >= r_.size())
      throw Divergence{rname(i) + " does not exist (labelled path has " +
                           std::to_string(r_.size()) + " vertices)",
                       {}};
    return r_[i];
  }

  /// Path labels r_0..r_l are the first l+1 entries of r_; later entries are
  /// extra R-vertices introduced by the claims.
  void sync_path() {
    t_.subpath.vertices.assign(r_.begin(), r_.begin() + static_cast<std::ptrdiff_t>(path_len_()));
    t_.B = VertexSet::from(d_.order(), t_.subpath.vertices);
  }
  std::size_t path_len_() const { return std::min(r_.size(), labelled_); }

  void fix_path_length(std::size_t l) {
    labelled_ = l + 1;
    r_.resize(l + 1);
    sync_path();
    for (std::size_t i = 0; i <= l; ++i) name(rname(i), r_[i]);
  }

  void add_label(std::size_t i, Vertex x) {
    if (r_.size() != i) throw Divergence{"label " + rname(i) + " assigned out of order", {x}};
    r_.push_back(x);
    name(rname(i), x);
  }

  bool arc(Vertex a, Vertex b) const { return d_.has_arc(a, b); }
  VertexSet nr(Vertex x) const { return d_.out_nbrs(x) & R_; }
  VertexSet nrbar(Vertex x) const { return d_.out_nbrs(x) - R_; }
  std::size_t dr(Vertex x) const { return d_.restricted_out_deg(x, R_); }
  VertexSet rs(const std::vector<std::size_t>& idx) const {
    VertexSet s = d_.empty_set();
    for (std::size_t i : idx) s.insert(r(i));
    return s;
  }
  const VertexSet& B() const { return t_.B; }

  void no_arc(Vertex a, const std::string& an, Vertex b, const std::string& bn) {
    require(!arc(a, b), an + " -/-> " + bn, {a, b});
  }
  void no_arc_into(Vertex a, const std::string& an, const VertexSet& s, const std::string& sn) {
    require(!d_.out_nbrs(a).intersects(s), an + " has no out-neighbour in " + sn, {a});
  }
  void second_nbr(Vertex w, const std::string& wn, Vertex x, const std::string& xn) {
    require(d_.second_out_nbrs(w).contains(x), xn + " in N++(" + wn + ")", {w, x});
  }
  std::size_t dx(Vertex z) const { return d_.out_nbrs(z).intersection_size(*t_.X); }
  void set_x(const VertexSet& x) { t_.X = x; }

  /// Smallest common out-neighbour outside R of the labelled vertices,
  /// checking the common-neighbourhood lower bound on the way.
  Vertex pick_common(const std::vector<std::size_t>& idx) {
    std::vector<Vertex> vs;
    for (std::size_t i : idx) vs.push_back(r(i));
    const VertexSet common = common_out_nbrs_outside(d_, R_, vs);
    const std::int64_t bound = lemma3_bound(d_, R_, delta_, vs);
    const std::string label = "N+_Rbar" + set_text(idx);
    require(static_cast<std::int64_t>(common.size()) >= bound,
            "|" + label + "| >= " + std::to_string(bound), vs);
    require(!common.empty(), label + " is non-empty", vs);
    return take_z(common);
  }

  Vertex pick_z(const VertexSet& candidates, const std::string& from) {
    require(!candidates.empty(),
            "z_" + std::to_string(t_.z_chain.size() + 1) + " exists in " + from, t_.z_chain);
    return take_z(candidates);
  }

  Vertex take_z(const VertexSet& candidates) {
    const Vertex z = *candidates.first();
    t_.z_chain.push_back(z);
    name("z_" + std::to_string(t_.z_chain.size()), z);
    return z;
  }

  /// Rotate the cycle r_0 -> ... -> r_{L-1} -> r_0 so that old r_i becomes r_{L-1}.
  void rotate_to_end(std::size_t i, std::size_t cycle_len) {
    std::vector<Vertex> rotated(cycle_len);
    for (std::size_t j = 0; j < cycle_len; ++j) rotated[j] = r_[(i + 1 + j) % cycle_len];
    note("relabel: rotate the cycle on B so that old " + rname(i) + " becomes " +
         rname(cycle_len - 1));
    r_ = std::move(rotated);
    sync_path();
    for (std::size_t j = 0; j < cycle_len; ++j) name(rname(j), r_[j]);
  }

  // --- l = m ---------------------------------------------------------------

  void case1() {
    t_.branch = Branch::Case1;
    const std::size_t m = m_;
    fix_path_length(m);
    require(nr(r(m)) == rs({0}), "N+_R(r_m) = {r_0}", {r(m)});
    for (std::size_t i = 0; i < m; ++i)
      require(nr(r(i)) == rs({i + 1}), "N+_R(" + rname(i) + ") = {" + rname(i + 1) + "}", {r(i)});
    for (std::size_t i = 0; i <= m; ++i)
      require(d_.out_deg(r(i)) == delta_, "d+(" + rname(i) + ") = delta", {r(i)});
    for (std::size_t i = 1; i <= m; ++i)
      require(nrbar(r(i)) == nrbar(r(0)), "N+_Rbar(" + rname(i) + ") = N+_Rbar(r_0)",
              {r(i), r(0)});
    const VertexSet x = nrbar(r(m));
    set_x(x);
    std::optional<Vertex> sink;
    for (Vertex z : x)
      if (!d_.out_nbrs(z).intersects(x)) {
        sink = z;
        break;
      }
    require(sink.has_value(), "D[X] has a sink", {});
    t_.z_chain.push_back(*sink);
    name("z", *sink);
    require(!d_.out_nbrs(*sink).intersects(d_.out_nbrs(r(m))), "N+(z) misses N+(r_m)",
            {*sink, r(m)});
    finish(r(m), "case1/sink-in-X");
  }

  // --- l = m+1 -------------------------------------------------------------

  void case2() {
    const std::size_t e = m_ + 1;
    fix_path_length(e);
    require(nr(r(e)).is_subset_of(rs({0, 1})), "N+_R(r_{m+1}) within {r_0,r_1}", {r(e)});
    if (arc(r(e), r(0)))
      case2a();
    else
      case2b();
  }

  void case2a() {
    t_.branch = Branch::Case2a;
    const std::size_t e = m_ + 1;
    const std::size_t len = m_ + 2;
    for (std::size_t i = 0; i <= e; ++i)
      require(nr(r(i)).is_subset_of(B()), rname(i) + " has no out-neighbour in R\\B", {r(i)});
    for (std::size_t i = 0; i <= e; ++i)
      require(nr(r(i)).is_subset_of(rs({(i + 1) % len, (i + 2) % len})),
              "N+_R(" + rname(i) + ") within {" + rname((i + 1) % len) + "," +
                  rname((i + 2) % len) + "}",
              {r(i)});
    std::optional<std::size_t> low;
    if (d_.restricted_out_deg(r(e), B()) == 1) low = e;
    for (std::size_t i = 0; !low && i <= e; ++i)
      if (d_.restricted_out_deg(r(i), B()) == 1) low = i;
    require(low.has_value(), "some r_i in B has d+_B(r_i) = 1", t_.subpath.vertices);
    if (*low != e) rotate_to_end(*low, len);

    require(nr(r(e)) == rs({0}), "N+_R(r_{m+1}) = {r_0}", {r(e)});
    require(d_.out_deg(r(e)) == delta_, "d+(r_{m+1}) = delta", {r(e)});
    const Vertex z1 = pick_common({1, m_, e});
    set_x(d_.out_nbrs(r(e)));
    if (dx(z1) <= 1) {
      second_nbr(r(e), "r_{m+1}", r(1), "r_1");
      no_arc(z1, "z_1", r(1), "r_1");
      finish(r(e), "case2a/z1-low");
      return;
    }
    const Vertex z2 = pick_z(d_.out_nbrs(z1) & nrbar(r(e)), "N+(z_1) & N+_Rbar(r_{m+1})");
    no_arc_into(z2, "z_2", nrbar(r(e)), "N+_Rbar(r_{m+1})");
    no_arc(z2, "z_2", r(0), "r_0");
    require(dx(z2) == 0, "d+_X(z_2) = 0", {z2});
    finish(r(e), "case2a/z2-sink");
  }

  void case2b() {
    t_.branch = Branch::Case2b;
    const std::size_t m = m_;
    const std::size_t e = m + 1;
    require(nr(r(e)) == rs({1}), "N+_R(r_{m+1}) = {r_1}", {r(e)});
    require(d_.out_deg(r(e)) == delta_, "d+(r_{m+1}) = delta", {r(e)});

    const VertexSet escape = nr(r(m)) - B();
    if (!escape.empty()) {
      claim_rm_escape(*escape.first());
      return;
    }
    note("N+_{R\\B}(r_m) is empty");
    require(nr(r(m)).is_subset_of(rs({0, e})), "N+_R(r_m) within {r_0,r_{m+1}}", {r(m)});
    require(dr(r(1)) + 3 <= delta_, "d+_R(r_1) <= delta - 3", {r(1)});

    const Vertex z1 = pick_common({1, m, e});
    set_x(d_.out_nbrs(r(e)));
    second_nbr(r(e), "r_{m+1}", r(2), "r_2");
    no_arc(z1, "z_1", r(2), "r_2");
    if (dx(z1) <= 1) {
      finish(r(e), "case2b/z1-low");
      return;
    }
    const Vertex z2 = pick_z(d_.out_nbrs(z1) & nrbar(r(e)), "N+(z_1) & N+_Rbar(r_{m+1})");
    if (dx(z2) == 0) {
      finish(r(e), "case2b/z2-sink");
      return;
    }
    no_arc(z2, "z_2", r(1), "r_1");
    const Vertex z3 = pick_z(d_.out_nbrs(z2) & nrbar(r(e)), "N+(z_2) & N+_Rbar(r_{m+1})");
    no_arc_into(z3, "z_3", nrbar(r(e)), "N+_Rbar(r_{m+1})");
    no_arc(z3, "z_3", r(1), "r_1");
    require(dx(z3) == 0, "d+_X(z_3) = 0", {z3});
    finish(r(e), "case2b/z3-sink");
  }

  // r_m has an out-neighbour outside the path: r_{m+1} is Seymour.
  void claim_rm_escape(Vertex extra) {
    const std::size_t m = m_;
    const std::size_t e = m + 1;
    note("claim: r_m has an out-neighbour r_{m+2} in R\\B");
    add_label(m + 2, extra);
    no_arc(r(m + 2), "r_{m+2}", r(0), "r_0");
    require(nr(r(m + 2)) == rs({1}), "N+_R(r_{m+2}) = {r_1}", {r(m + 2)});
    const Vertex z1 = pick_common({m, e, m + 2});
    no_arc(z1, "z_1", r(2), "r_2");
    set_x(d_.out_nbrs(r(e)));
    if (dx(z1) <= 1) {
      second_nbr(r(e), "r_{m+1}", r(2), "r_2");
      finish(r(e), "case2b/claim/z1-low");
      return;
    }
    const Vertex z2 = pick_z(d_.out_nbrs(z1) & nrbar(r(e)), "N+(z_1) & N+_Rbar(r_{m+1})");
    no_arc_into(z2, "z_2", nrbar(r(e)), "N+_Rbar(r_{m+1})");
    no_arc(z2, "z_2", r(1), "r_1");
    require(dx(z2) == 0, "d+_X(z_2) = 0", {z2});
    finish(r(e), "case2b/claim/z2-sink");
  }

  // --- l = m+2 -------------------------------------------------------------

  void case3() {
    const std::size_t e = m_ + 2;
    fix_path_length(e);
    require(nr(r(e)).is_subset_of(rs({0, 1, 2})), "N+_R(r_{m+2}) within {r_0,r_1,r_2}", {r(e)});
    if (arc(r(e), r(0)))
      case3a();
    else
      case3b();
  }

  void case3a() {
    t_.branch = Branch::Case3a;
    const std::size_t e = m_ + 2;
    const std::size_t len = m_ + 3;
    for (std::size_t i = 0; i <= e; ++i)
      require(nr(r(i)).is_subset_of(B()), rname(i) + " has no out-neighbour in R\\B", {r(i)});
    for (std::size_t i = 0; i <= e; ++i)
      require(nr(r(i)).is_subset_of(rs({(i + 1) % len, (i + 2) % len, (i + 3) % len})),
              "N+_R(" + rname(i) + ") within the next three cycle vertices", {r(i)});
    std::optional<std::size_t> low;
    if (d_.restricted_out_deg(r(e), B()) <= 2) low = e;
    for (std::size_t i = 0; !low && i <= e; ++i)
      if (d_.restricted_out_deg(r(i), B()) <= 2) low = i;
    require(low.has_value(), "some r_i in B has d+_B(r_i) <= 2", t_.subpath.vertices);
    if (*low != e) rotate_to_end(*low, len);

    require(dr(r(e)) <= 2, "d+_R(r_{m+2}) <= 2", {r(e)});
    require(d_.out_deg(r(e)) <= delta_ + 1, "d+(r_{m+2}) <= delta + 1", {r(e)});
    set_x(d_.out_nbrs(r(e)));
    const Vertex z1 = pick_common({1, m_ + 1, e});
    no_arc_into(z1, "z_1", nrbar(r(e)), "N+_Rbar(r_{m+2})");
    no_arc(z1, "z_1", r(0), "r_0");
    no_arc(z1, "z_1", r(1), "r_1");
    no_arc(z1, "z_1", r(2), "r_2");
    require(dx(z1) == 0, "d+_X(z_1) = 0", {z1});
    const VertexSet second = d_.second_out_nbrs(r(e));
    require(second.contains(r(1)) || second.contains(r(2)), "r_1 or r_2 in N++(r_{m+2})",
            {r(e)});
    finish(r(e), "case3a/z1-sink");
  }

  void case3b() {
    t_.branch = Branch::Case3b;
    const std::size_t m = m_;
    const std::size_t e = m + 2;
    require(nr(r(e)).is_subset_of(rs({1, 2})), "N+_R(r_{m+2}) within {r_1,r_2}", {r(e)});

    const VertexSet escape = nr(r(m + 1)) - B();
    if (!escape.empty()) {
      claim_rm1_escape();
      return;
    }
    note("N+_{R\\B}(r_{m+1}) is empty");
    require(nr(r(m + 1)).is_subset_of(rs({0, 1, e})), "N+_R(r_{m+1}) within {r_0,r_1,r_{m+2}}",
            {r(m + 1)});

    const VertexSet escape2 = nr(r(2)) - B();
    if (!escape2.empty()) {
      claim_r2_escape(*escape2.first());
      return;
    }
    note("N+_{R\\B}(r_2) is empty");
    require(nr(r(2)).is_subset_of(rs({3, 4, 5})), "N+_R(r_2) within {r_3,r_4,r_5}", {r(2)});
    require(dr(r(2)) <= 3, "d+_R(r_2) <= 3", {r(2)});
    require(dr(r(m + 1)) <= 3, "d+_R(r_{m+1}) <= 3", {r(m + 1)});
    require(dr(r(e)) <= 2, "d+_R(r_{m+2}) <= 2", {r(e)});
    const Vertex z1 = pick_common({2, m + 1, e});
    if (dr(r(e)) == 1)
      final_single(z1);
    else
      final_double(z1);
  }

  // r_{m+1} has an out-neighbour outside the path: r_{m+2} is Seymour.
  void claim_rm1_escape() {
    const std::size_t m = m_;
    const std::size_t e = m + 2;
    note("claim: r_{m+1} has an out-neighbour in R\\B");
    auto outside = [&] { return nr(r(m + 1)) - B(); };
    for (Vertex s : outside()) {
      no_arc(s, "r_{m+3}", r(0), "r_0");
      require(nr(s).is_subset_of(rs({1, 2})), "N+_R(r_{m+3}) within {r_1,r_2}", {s});
    }
    VertexSet others = nr(r(m + 1));
    others.erase(r(0));
    std::optional<Vertex> to_r1;
    for (Vertex s : others)
      if (arc(s, r(1))) {
        to_r1 = s;
        break;
      }

    if (to_r1) {
      if (!arc(r(e), r(1))) {
        note("relabel: swap r_{m+2} with an out-neighbour of r_{m+1} that points to r_1");
        r_[e] = *to_r1;
        sync_path();
        name(rname(e), r(e));
        no_arc(r(e), "r_{m+2}", r(0), "r_0");
        require(nr(r(e)).is_subset_of(rs({1, 2})), "N+_R(r_{m+2}) within {r_1,r_2}", {r(e)});
      }
      add_label(m + 3, *outside().first());
      require(arc(r(e), r(1)), "r_{m+2} -> r_1", {r(e)});
      require(d_.out_deg(r(e)) <= delta_ + 1, "d+(r_{m+2}) <= delta + 1", {r(e)});
      set_x(d_.out_nbrs(r(e)));
      const Vertex z1 = pick_common({e, m + 3});
      no_arc(z1, "z_1", r(1), "r_1");
      no_arc(z1, "z_1", r(2), "r_2");
      no_arc(z1, "z_1", r(3), "r_3");
      no_arc_into(z1, "z_1", nrbar(r(e)), "N+_Rbar(r_{m+2})");
      require(dx(z1) == 0, "d+_X(z_1) = 0", {z1});
      if (!arc(r(e), r(2)))
        second_nbr(r(e), "r_{m+2}", r(2), "r_2");
      else
        second_nbr(r(e), "r_{m+2}", r(3), "r_3");
      finish(r(e), "case3b/claim-rm1/to-r1/z1-sink");
      return;
    }

    add_label(m + 3, *outside().first());
    for (Vertex s : others)
      require(nr(s) == rs({2}), "out-neighbours of r_{m+1} other than r_0 have N+_R = {r_2}", {s});
    require(d_.out_deg(r(e)) == delta_, "d+(r_{m+2}) = delta", {r(e)});
    require(dr(r(m + 1)) + 2 <= delta_, "d+_R(r_{m+1}) <= delta - 2", {r(m + 1)});
    set_x(d_.out_nbrs(r(e)));
    const Vertex z1 = pick_common({m + 1, e, m + 3});
    no_arc(z1, "z_1", r(3), "r_3");
    second_nbr(r(e), "r_{m+2}", r(3), "r_3");
    if (dx(z1) <= 1) {
      finish(r(e), "case3b/claim-rm1/to-r2/z1-low");
      return;
    }
    const Vertex z2 = pick_z(d_.out_nbrs(z1) & nrbar(r(e)), "N+(z_1) & N+_Rbar(r_{m+2})");
    no_arc_into(z2, "z_2", nrbar(r(e)), "N+_Rbar(r_{m+2})");
    no_arc(z2, "z_2", r(3), "r_3");
    require(dx(z2) <= 1, "d+_X(z_2) <= 1", {z2});
    finish(r(e), "case3b/claim-rm1/to-r2/z2-low");
  }

  // r_2 has an out-neighbour outside the path: r_{m+2} is Seymour.
  void claim_r2_escape(Vertex extra) {
    const std::size_t m = m_;
    const std::size_t e = m + 2;
    note("claim: r_2 has an out-neighbour r_{m+3} in R\\B");
    add_label(m + 3, extra);
    const Vertex s = r(m + 3);
    require(d_.out_deg(r(e)) <= delta_ + 1, "d+(r_{m+2}) <= delta + 1", {r(e)});
    no_arc(s, "r_{m+3}", r(2), "r_2");
    no_arc(s, "r_{m+3}", r(0), "r_0");
    no_arc(s, "r_{m+3}", r(3), "r_3");
    require(dr(s) + 4 <= delta_, "d+_R(r_{m+3}) <= delta - 4", {s});
    const Vertex z1 = pick_common({m + 1, e, m + 3});
    set_x(d_.out_nbrs(r(e)));

    if (arc(r(e), r(2))) {
      second_nbr(r(e), "r_{m+2}", r(3), "r_3");
      second_nbr(r(e), "r_{m+2}", s, "r_{m+3}");
      no_arc(z1, "z_1", s, "r_{m+3}");
      no_arc(z1, "z_1", r(3), "r_3");
      if (dx(z1) <= 1) {
        finish(r(e), "case3b/claim-r2/to-r2/z1-low");
        return;
      }
      no_arc(z1, "z_1", r(1), "r_1");
      const Vertex z2 = pick_z(d_.out_nbrs(z1) & nrbar(r(e)), "N+(z_1) & N+_Rbar(r_{m+2})");
      no_arc(z2, "z_2", s, "r_{m+3}");
      if (dx(z2) == 0) {
        finish(r(e), "case3b/claim-r2/to-r2/z2-sink");
        return;
      }
      no_arc(z2, "z_2", r(1), "r_1");
      no_arc(z2, "z_2", r(2), "r_2");
      const Vertex z3 = pick_z(d_.out_nbrs(z2) & nrbar(r(e)), "N+(z_2) & N+_Rbar(r_{m+2})");
      no_arc(z3, "z_3", r(1), "r_1");
      no_arc(z3, "z_3", r(2), "r_2");
      no_arc_into(z3, "z_3", nrbar(r(e)), "N+_Rbar(r_{m+2})");
      require(dx(z3) == 0, "d+_X(z_3) = 0", {z3});
      no_arc(z3, "z_3", r(3), "r_3");
      finish(r(e), "case3b/claim-r2/to-r2/z3-sink");
      return;
    }

    require(nr(r(e)) == rs({1}), "N+_R(r_{m+2}) = {r_1}", {r(e)});
    require(d_.out_deg(r(e)) == delta_, "d+(r_{m+2}) = delta", {r(e)});
    if (dx(z1) == 0) {
      finish(r(e), "case3b/claim-r2/to-r1/z1-sink");
      return;
    }
    no_arc(z1, "z_1", r(1), "r_1");
    const Vertex z2 = pick_z(d_.out_nbrs(z1) & nrbar(r(e)), "N+(z_1) & N+_Rbar(r_{m+2})");
    no_arc(z2, "z_2", r(1), "r_1");
    no_arc_into(z2, "z_2", nrbar(r(e)), "N+_Rbar(r_{m+2})");
    require(dx(z2) == 0, "d+_X(z_2) = 0", {z2});
    finish(r(e), "case3b/claim-r2/to-r1/z2-sink");
  }

  // d+_R(r_{m+2}) = 1
  void final_single(Vertex z1) {
    const std::size_t e = m_ + 2;
    require(d_.out_deg(r(e)) == delta_, "d+(r_{m+2}) = delta", {r(e)});
    set_x(d_.out_nbrs(r(e)));
    if (nr(r(e)) == rs({1})) {
      second_nbr(r(e), "r_{m+2}", r(2), "r_2");
      if (dx(z1) <= 1) {
        no_arc(z1, "z_1", r(2), "r_2");
        finish(r(e), "case3b/single/to-r1/z1-low");
        return;
      }
      const Vertex z2 = pick_z(d_.out_nbrs(z1) & nrbar(r(e)), "N+(z_1) & N+_Rbar(r_{m+2})");
      no_arc_into(z2, "z_2", nrbar(r(e)), "N+_Rbar(r_{m+2})");
      no_arc(z2, "z_2", r(1), "r_1");
      require(dx(z2) == 0, "d+_X(z_2) = 0", {z2});
      finish(r(e), "case3b/single/to-r1/z2-sink");
      return;
    }
    require(nr(r(e)) == rs({2}), "N+_R(r_{m+2}) = {r_2}", {r(e)});
    second_nbr(r(e), "r_{m+2}", r(3), "r_3");
    if (dx(z1) <= 1) {
      no_arc(z1, "z_1", r(3), "r_3");
      finish(r(e), "case3b/single/to-r2/z1-low");
      return;
    }
    const Vertex z2 = pick_z(d_.out_nbrs(z1) & nrbar(r(e)), "N+(z_1) & N+_Rbar(r_{m+2})");
    no_arc(z2, "z_2", r(3), "r_3");
    if (dx(z2) <= 1) {
      finish(r(e), "case3b/single/to-r2/z2-low");
      return;
    }
    const Vertex z3 = pick_z(d_.out_nbrs(z2) & nrbar(r(e)), "N+(z_2) & N+_Rbar(r_{m+2})");
    no_arc_into(z3, "z_3", nrbar(r(e)), "N+_Rbar(r_{m+2})");
    no_arc(z3, "z_3", r(2), "r_2");
    require(dx(z3) == 0, "d+_X(z_3) = 0", {z3});
    finish(r(e), "case3b/single/to-r2/z3-sink");
  }

  // d+_R(r_{m+2}) = 2: the witness moves to r_2.
  void final_double(Vertex z1) {
    const std::size_t e = m_ + 2;
    require(nr(r(e)) == rs({1, 2}), "N+_R(r_{m+2}) = {r_1,r_2}", {r(e)});
    require(nr(r(2)) == rs({3}), "N+_R(r_2) = {r_3}", {r(2)});
    require(d_.out_deg(r(2)) == delta_, "d+(r_2) = delta", {r(2)});
    set_x(d_.out_nbrs(r(2)));
    no_arc(z1, "z_1", r(3), "r_3");
    if (dx(z1) == 0) {
      finish(r(2), "case3b/double/z1-sink");
      return;
    }
    const Vertex z2 = pick_z(d_.out_nbrs(z1) & nrbar(r(2)), "N+(z_1) & N+_Rbar(r_2)");
    no_arc(z2, "z_2", r(3), "r_3");
    if (dx(z2) == 0) {
      finish(r(2), "case3b/double/z2-sink");
      return;
    }
    const Vertex z3 = pick_z(d_.out_nbrs(z2) & nrbar(r(2)), "N+(z_2) & N+_Rbar(r_2)");
    no_arc_into(z3, "z_3", nrbar(r(2)), "N+_Rbar(r_2)");
    no_arc(z3, "z_3", r(3), "r_3");
    require(dx(z3) == 0, "d+_X(z_3) = 0", {z3});
    finish(r(2), "case3b/double/z3-sink");
  }

  const Digraph& d_;
  ProofTrace& t_;
  const std::size_t m_;
  const std::size_t delta_;
  const VertexSet R_;
  std::vector<Vertex> r_;
  std::size_t labelled_ = static_cast<std::size_t>(-1);
};

TraceError make_error(TraceErrorKind kind, std::string message, const ProofTrace& t,
                      std::vector<Vertex> involved = {}) {
  TraceError e;
  e.kind = kind;
  e.message = std::move(message);
  e.involved = std::move(involved);
  e.partial = t;
  return e;
}

ProofOutcome verified(ProofTrace t, const Digraph& d) {
  const bool ok = is_seymour_vertex(d, t.result);
  t.assertions.push_back({"result " + std::to_string(t.result) + " is a Seymour vertex", ok});
  if (!ok)
    return make_error(TraceErrorKind::ProofDivergence,
                      "returned vertex " + std::to_string(t.result) + " is not a Seymour vertex",
                      t, {t.result});
  return t;
}

ProofOutcome fallback(ProofTrace t, const Digraph& d, Branch b, std::string reason) {
  t.branch = b;
  t.step = "fallback";
  t.notes.push_back(std::move(reason));
  const auto w = brute_force_seymour(d);
  if (!w)
    return make_error(TraceErrorKind::FallbackExhausted,
                      "brute-force search found no Seymour vertex", t);
  t.result = *w;
  return verified(std::move(t), d);
}

}  // namespace

ProofOutcome find_seymour_constructive(const Digraph& d, std::size_t k,
                                       const ProverOptions& options) {
  ProofTrace t;
  t.k = k;
  t.m = k >= 4 ? k - 4 : 0;
  if (d.order() == 0)
    return make_error(TraceErrorKind::PreconditionViolated, "digraph has no vertices", t);
  if (k < 6)
    return make_error(TraceErrorKind::PreconditionViolated,
                      "k must be at least 6, got " + std::to_string(k), t);
  if (!options.skip_precheck) {
    if (auto w = anti_transitivity_witness(d, k)) {
      auto e = make_error(TraceErrorKind::PreconditionViolated,
                          "not " + std::to_string(k) + "-anti-transitive", t, {w->u, w->v});
      e.witness = std::move(w);
      return e;
    }
    if (!is_m_free(d, t.m)) {
      const auto g = girth(d);
      return make_error(TraceErrorKind::PreconditionViolated,
                        "not " + std::to_string(t.m) + "-free (girth " +
                            std::to_string(g.value_or(0)) + ")",
                        t);
    }
  }

  const auto [v, delta] = d.min_out_deg_vertex();
  t.v = v;
  t.delta = delta;
  t.R = d.out_nbrs(v);
  t.B = d.empty_set();
  t.named.emplace_back("v", v);

  if (options.external_fallbacks) {
    if (delta <= 6) return fallback(std::move(t), d, Branch::SmallDelta, "minimum out-degree <= 6");
    if (k == 6) return fallback(std::move(t), d, Branch::SmallDelta, "k = 6");
    if (t.m + 1 >= delta) return fallback(std::move(t), d, Branch::LargeM, "m >= delta - 1");
  }

  try {
    CaseAnalysis(d, t).run();
  } catch (const Divergence& div) {
    return make_error(TraceErrorKind::ProofDivergence, div.text, t, div.involved);
  }
  return verified(std::move(t), d);
}

}  // namespace ssnc
