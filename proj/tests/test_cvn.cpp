#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "freeact/cvn.hpp"
#include "freeact/error.hpp"

using namespace freeact;

namespace {

Scalar q(long n, long d = 1) { return Scalar::rational(n, d); }

MarkedMetricGraph theta(Scalar x, Scalar y, Scalar z) {
  return MarkedMetricGraph(2, 2, {{"e", 0, 1, x}, {"f", 0, 1, y}, {"g", 0, 1, z}}, {0},
                           {{1, Word::parse("a")}, {2, Word::parse("b")}});
}

// Rank 3: theta graph with an extra loop at vertex 1, marked by a Nielsen-moved basis.
MarkedMetricGraph theta_loop() {
  return MarkedMetricGraph(3, 2,
                           {{"e", 0, 1, q(1)}, {"f", 0, 1, q(1, 2)}, {"g", 0, 1, q(2)},
                            {"h", 1, 1, q(1, 3)}},
                           {0}, {{1, Word::parse("ab")}, {2, Word::parse("b")}, {3, Word::parse("c")}});
}

// Test-side tight path: words rewritten through the letter loops, cancelled
// with a naive pass.
std::vector<int> naive_tighten(std::vector<int> p) {
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
      if ((p[i] ^ 1) == p[i + 1]) {
        p.erase(p.begin() + static_cast<std::ptrdiff_t>(i), p.begin() + static_cast<std::ptrdiff_t>(i) + 2);
        changed = true;
        break;
      }
    }
  }
  return p;
}

std::vector<int> word_path(const MarkedMetricGraph& t, const Word& w) {
  std::vector<int> p;
  for (Letter x : w) {
    const auto& lp = t.letter_path(x < 0 ? -x : x);
    if (x > 0) {
      p.insert(p.end(), lp.begin(), lp.end());
    } else {
      for (auto it = lp.rbegin(); it != lp.rend(); ++it) p.push_back(*it ^ 1);
    }
  }
  return naive_tighten(p);
}

Scalar path_length(const MarkedMetricGraph& t, const std::vector<int>& p) {
  Scalar s;
  for (int o : p) s += t.edges()[o / 2].length;
  return s;
}

// min over universal-cover vertices x within `radius` edges of d(x, w x).
Scalar fine_net_length(const MarkedMetricGraph& t, const Word& w, int radius) {
  const std::vector<int> wp = word_path(t, w);
  std::vector<std::vector<int>> frontier{{}};
  std::optional<Scalar> best;
  for (int r = 0; r <= radius; ++r) {
    std::vector<std::vector<int>> next;
    for (const auto& x : frontier) {
      std::vector<int> loop;
      for (auto it = x.rbegin(); it != x.rend(); ++it) loop.push_back(*it ^ 1);
      loop.insert(loop.end(), wp.begin(), wp.end());
      loop.insert(loop.end(), x.begin(), x.end());
      const Scalar d = path_length(t, naive_tighten(loop));
      if (!best || d < *best) best = d;
      const int at = x.empty() ? t.basepoint() : t.terminus(x.back());
      for (int o : t.star(at)) {
        if (!x.empty() && o == (x.back() ^ 1)) continue;
        auto y = x;
        y.push_back(o);
        next.push_back(std::move(y));
      }
    }
    frontier = std::move(next);
  }
  return *best;
}

Word random_word(std::mt19937_64& rng, int rank, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len), let(1, rank), sg(0, 1);
  std::vector<Letter> v(len(rng));
  for (auto& x : v) x = sg(rng) ? let(rng) : -let(rng);
  return Word::reduce(v);
}

}  // namespace

TEST_CASE("translation_length examples") {
  const auto rose = MarkedMetricGraph::rose({q(1), q(1)});
  CHECK(translation_length(rose, Word::parse("a")) == q(1));
  CHECK(translation_length(rose, Word::parse("abA")) == q(1));
  const auto r12 = MarkedMetricGraph::rose({q(1), q(2)});
  CHECK(translation_length(r12, Word::parse("ab")) == q(3));
  CHECK(fine_net_length(r12, Word::parse("ab"), 6) == q(3));
  CHECK(translation_length(rose, Word()) == q(0));
}

TEST_CASE("volume") {
  CHECK(volume(MarkedMetricGraph::rose({q(1), q(1)})) == q(2));
  CHECK(volume(MarkedMetricGraph::rose({q(1), q(2)})) == q(3));
  CHECK(volume(theta(q(1, 2), q(1, 3), q(1, 5))) == q(31, 30));
  CHECK(bbt_constant(theta(q(1, 2), q(1, 3), q(1, 5))) == q(31, 30));
}

TEST_CASE("graph validation") {
  CHECK_THROWS_AS(MarkedMetricGraph::rose({q(1), q(0)}), Error);
  // Marking that is not a basis.
  CHECK_THROWS_AS(MarkedMetricGraph(2, 1, {{"x", 0, 0, q(1)}, {"y", 0, 0, q(1)}}, {},
                                    {{0, Word::parse("aa")}, {1, Word::parse("b")}}),
                  Error);
  // Vertex of degree 1.
  CHECK_THROWS_AS(MarkedMetricGraph(1, 2, {{"x", 0, 0, q(1)}, {"y", 0, 1, q(1)}}, {1},
                                    {{0, Word::parse("a")}}),
                  Error);
  // Betti number mismatch.
  CHECK_THROWS_AS(MarkedMetricGraph(3, 1, {{"x", 0, 0, q(1)}, {"y", 0, 0, q(1)}}, {},
                                    {{0, Word::parse("a")}, {1, Word::parse("b")}}),
                  Error);
}

TEST_CASE("translation_length matches fine-net minimisation") {
  const std::vector<MarkedMetricGraph> graphs{
      MarkedMetricGraph::rose({q(1), q(2)}), theta(q(1, 2), q(1, 3), q(1, 5)),
      MarkedMetricGraph(2, 1, {{"x", 0, 0, q(1)}, {"y", 0, 0, Scalar::sqrt(2)}}, {},
                        {{0, Word::parse("ab")}, {1, Word::parse("b")}})};
  std::mt19937_64 rng(17);
  for (const auto& t : graphs) {
    for (int i = 0; i < 12; ++i) {
      const Word w = random_word(rng, 2, 4);
      if (w.empty()) continue;
      CHECK(translation_length(t, w) == fine_net_length(t, w, 6));
    }
  }
}

TEST_CASE("translation length: conjugacy invariance and powers") {
  const auto t = theta_loop();
  std::mt19937_64 rng(23);
  for (int i = 0; i < 100; ++i) {
    const Word w = random_word(rng, 3, 6);
    const Word g = random_word(rng, 3, 5);
    const Scalar l = translation_length(t, w);
    CHECK(translation_length(t, g * w * g.inverse()) == l);
    CHECK(translation_length(t, w.inverse()) == l);
    for (int k = 2; k <= 5; ++k) CHECK(translation_length(t, w.pow(k)) == Scalar(k) * l);
    if (!w.empty()) CHECK(l > q(0));
  }
}

TEST_CASE("minimal_subtree examples") {
  const auto rose = MarkedMetricGraph::rose({q(1), q(1)});
  const auto full = minimal_subtree(rose, build_core(std::vector<Word>{Word{1}, Word{2}}, 2));
  CHECK(full.covering);
  CHECK(full.degree == 1);
  CHECK(full.volume == q(2));
  const auto circle = minimal_subtree(rose, build_core(std::vector<Word>{Word{1}}, 2));
  CHECK(circle.vertex_count == 1);
  CHECK(circle.edges.size() == 1);
  CHECK(circle.volume == q(1));
  CHECK_FALSE(circle.surjective);
  const auto r12 = MarkedMetricGraph::rose({q(1), q(2)});
  const auto axis = minimal_subtree(r12, build_core(std::vector<Word>{Word::parse("ab")}, 2));
  CHECK(axis.volume == translation_length(r12, Word::parse("ab")));
  CHECK(axis.volume == q(3));
  CHECK_THROWS_AS(minimal_subtree(rose, StallingsGraph(2)), Error);
}

TEST_CASE("minimal_subtree dichotomy and volume bound") {
  const std::vector<MarkedMetricGraph> graphs{MarkedMetricGraph::rose({q(1), q(2)}),
                                              theta(q(1, 2), q(1, 3), q(1, 5))};
  std::mt19937_64 rng(29);
  int finite = 0;
  for (int i = 0; i < 120; ++i) {
    const auto& t = graphs[i % 2];
    std::vector<Word> gens;
    const int count = 1 + i % 4;
    for (int j = 0; j < count; ++j) gens.push_back(random_word(rng, 2, 3 + i % 3));
    const StallingsGraph h = build_core(gens, 2);
    if (h.is_trivial()) continue;
    const MetricCoreGraph m = minimal_subtree(t, h);
    const SubgroupIndex idx = index(h);
    CHECK((m.surjective && m.covering) == idx.finite);
    if (idx.finite) {
      ++finite;
      CHECK(m.degree == idx.value);
      CHECK(m.volume == Scalar(idx.value) * volume(t));
    }
    // Every core edge projects with its length, and the core is a core.
    std::vector<int> degree(m.vertex_count, 0);
    for (const auto& e : m.edges) {
      ++degree[e.from];
      ++degree[e.to];
      CHECK(e.length == t.edges()[e.base_edge].length);
    }
    for (int d : degree) CHECK(d >= 2);
  }
  CHECK(finite > 0);
}

TEST_CASE("edge_in_minimal_subtree") {
  const auto rose = MarkedMetricGraph::rose({q(1), q(1)});
  const StallingsGraph a = build_core(std::vector<Word>{Word{1}}, 2);
  const StallingsGraph f = build_core(std::vector<Word>{Word{1}, Word{2}}, 2);
  const int ea = 0, eb = 2;
  for (int o = 0; o < 4; ++o) CHECK(edge_in_minimal_subtree(rose, f, Word::parse("bA"), std::vector<int>{o}));
  CHECK(edge_in_minimal_subtree(rose, a, Word(), std::vector<int>{ea}));
  CHECK_FALSE(edge_in_minimal_subtree(rose, a, Word(), std::vector<int>{eb}));
  CHECK_FALSE(edge_in_minimal_subtree(rose, a, Word::parse("b"), std::vector<int>{ea}));
  // Backing up along the b edge lands on the axis edge from x0.
  CHECK(edge_in_minimal_subtree(rose, a, Word::parse("b"), std::vector<int>{eb + 1, ea}));
  CHECK_THROWS_AS(edge_in_minimal_subtree(rose, a, Word(), std::vector<int>{}), Error);
  const auto t = theta(q(1), q(1), q(1));
  // Edges e, f, g of the theta graph: 0, 2, 4; e ends at vertex 1, g starts at 0.
  CHECK_THROWS_AS(edge_in_minimal_subtree(t, f, Word(), std::vector<int>{0, 4}), Error);
}

TEST_CASE("translate_intersection") {
  const auto rose = MarkedMetricGraph::rose({q(1), q(1)});
  const StallingsGraph a = build_core(std::vector<Word>{Word{1}}, 2);
  CHECK(translate_intersection(rose, a, Word::parse("aa"), 6).kind == IntersectionKind::whole_tree);
  CHECK(translate_intersection(rose, a, Word::parse("b"), 6).kind == IntersectionKind::disjoint);
  const StallingsGraph h = build_core(std::vector<Word>{Word{1}, Word::parse("baB")}, 2);
  const TranslateIntersection r = translate_intersection(rose, h, Word::parse("b"), 4);
  CHECK(r.kind == IntersectionKind::nondegenerate);
  CHECK(r.arc.size() == 4);
  CHECK(r.arc_length == q(4));
  // The b-translate of the axis of a meets the axis of bab^-1... only at a point
  // for H = <a, bbaBB> and g = b: T_H contains x0 and b^2 x0 but not the edge b x0 -> b^2 x0 from both.
  const StallingsGraph k = build_core(std::vector<Word>{Word{1}, Word::parse("bbaBB")}, 2);
  const TranslateIntersection s = translate_intersection(rose, k, Word::parse("b"), 6);
  CHECK(s.kind == IntersectionKind::nondegenerate);
  // The axis of bbbbaBBBB sits 4 edges away from both x0 and a x0.
  const StallingsGraph far = build_core(std::vector<Word>{Word::parse("bbbbaBBBB")}, 2);
  CHECK(translate_intersection(rose, far, Word::parse("a"), 2).kind ==
        IntersectionKind::degenerate_within_radius);
  CHECK(translate_intersection(rose, far, Word::parse("a"), 6).kind == IntersectionKind::disjoint);
}

TEST_CASE("translate_intersection agrees with edge-membership search") {
  // Oracle: collect edges of the universal cover within a ball that lie in
  // both T_H and g T_H, using edge_in_minimal_subtree on g^-1-translates.
  const auto t = theta(q(1), q(1, 2), q(1, 3));
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<Word> gens{random_word(rng, 2, 4), random_word(rng, 2, 4)};
    const StallingsGraph h = build_core(gens, 2);
    if (h.is_trivial() || index(h).finite) continue;
    const Word g = random_word(rng, 2, 3);
    const TranslateIntersection r = translate_intersection(t, h, g, 20);
    if (r.kind == IntersectionKind::whole_tree) {
      CHECK(membership(h, g));
      continue;
    }
    // Ball of radius 5 around x0 and around g x0.
    int common = 0;
    std::vector<std::vector<int>> frontier{{}};
    std::set<std::vector<int>> starts{{}, t.path_of(g)};
    for (const auto& s : starts) {
      frontier = {s};
      for (int rr = 0; rr < 5; ++rr) {
        std::vector<std::vector<int>> next;
        for (const auto& x : frontier) {
          const int at = x.empty() ? t.basepoint() : t.terminus(x.back());
          for (int o : t.star(at)) {
            if (!x.empty() && o == (x.back() ^ 1)) continue;
            std::vector<int> y = x;
            y.push_back(o);
            y = tighten(y);
            if (y.size() < x.size()) continue;
            // Express the edge as base word 1 + edge path from x0.
            const bool in_a = edge_in_minimal_subtree(t, h, Word(), y);
            const bool in_b = edge_in_minimal_subtree(t, h, g.inverse(), y);
            if (in_a && in_b) ++common;
            next.push_back(y);
          }
        }
        frontier = std::move(next);
      }
    }
    if (r.kind == IntersectionKind::nondegenerate) {
      CHECK(common > 0);
    } else {
      CHECK(common == 0);
    }
  }
}

TEST_CASE("transverse_family_report") {
  const auto rose = MarkedMetricGraph::rose({q(1), q(1)});
  const StallingsGraph f = build_core(std::vector<Word>{Word{1}, Word{2}}, 2);
  CHECK(transverse_family_report(rose, f, 3, 6).verdict == TransverseVerdict::single_tree);
  const StallingsGraph a = build_core(std::vector<Word>{Word{1}}, 2);
  const TransverseReport r = transverse_family_report(rose, a, 3, 6);
  CHECK(r.verdict == TransverseVerdict::transverse_up_to_budget);
  CHECK_FALSE(r.entries.empty());
  for (const auto& e : r.entries) CHECK(e.result.kind == IntersectionKind::disjoint);
  // Representatives are pairwise in distinct double cosets and start with b or B.
  for (const auto& e : r.entries) CHECK(std::abs(e.g.front()) == 2);
  const StallingsGraph two = build_core(std::vector<Word>{Word::parse("aa"), Word{2}, Word::parse("abA")}, 2);
  CHECK(transverse_family_report(rose, two, 3, 6).verdict == TransverseVerdict::family_degenerate);
  const StallingsGraph h = build_core(std::vector<Word>{Word{1}, Word::parse("baB")}, 2);
  CHECK(transverse_family_report(rose, h, 2, 6).verdict == TransverseVerdict::violation);
}

TEST_CASE("omega_epsilon examples") {
  const auto rose = MarkedMetricGraph::rose({q(1), q(1)});
  CHECK(omega_epsilon(rose, q(1, 2), 6).empty());
  const auto w = omega_epsilon(rose, q(3, 2), 1);
  REQUIRE(w.size() == 2);
  CHECK(w[0].str() == "a");
  CHECK(w[1].str() == "b");
  const auto thin = MarkedMetricGraph::rose({q(1, 10), q(1)});
  std::vector<std::string> names;
  for (const Word& x : omega_epsilon(thin, q(1, 2), 4)) names.push_back(x.str());
  CHECK(names == std::vector<std::string>{"a", "aa", "aaa", "aaaa"});
  CHECK_THROWS_AS(omega_epsilon(rose, q(0), 2), Error);
}
