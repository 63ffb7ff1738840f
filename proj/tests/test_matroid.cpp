#include <gtest/gtest.h>

#include "matreg/error.hpp"
#include "matreg/families.hpp"
#include "matreg/matroid.hpp"
#include "oracles.hpp"

using namespace matreg;

namespace {

Matroid square() { return from_bases(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}}); }

// a-b, a-c, a-d, b-c, b-d, c-d with a..d = 1..4; the triangle abc is {1,2,4}
Graph k4() { return Graph{4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}}; }

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorKind::InvalidArgument;
}

std::vector<Matroid> sample_family() {
  std::vector<Matroid> out;
  for (int n = 1; n <= 4; ++n) {
    for (auto& m : enumerate_all_matroids(n)) out.push_back(m);
  }
  for (auto& nm : curated_medium()) out.push_back(nm.matroid);
  return out;
}

}  // namespace

TEST(FromBases, SquareMatroid) {
  const Matroid m = square();
  EXPECT_EQ(m.rank(), 2);
  EXPECT_EQ(m.ground_size(), 4);
  EXPECT_EQ(SubsetFamily(4, m.bases()).to_string(), "{1 2} {1 4} {2 3} {3 4}");
}

TEST(FromBases, Rejections) {
  EXPECT_EQ(kind_of([] { from_bases(3, {{1, 2}, {3, 4}}); }), ErrorKind::OutOfRange);
  EXPECT_EQ(kind_of([] { from_bases(3, {}); }), ErrorKind::EmptyFamily);
  EXPECT_EQ(kind_of([] { from_bases(3, {{1}, {2, 3}}); }), ErrorKind::UnequalCardinality);
  try {
    from_bases(4, {{1, 2}, {3, 4}});
    FAIL();
  } catch (const ExchangeError& e) {
    // B1 = {1 2}, B2 = {3 4}: removing 1 leaves {2}, and neither {2 3} nor {2 4} is a basis.
    EXPECT_EQ(e.witness().b1, (ElementSet{1, 2}));
    EXPECT_EQ(e.witness().b2, (ElementSet{3, 4}));
    EXPECT_EQ(e.witness().x, 1);
  }
}

TEST(FromBases, SmallestNonStar) {
  const Matroid m = from_bases(2, {{1}, {2}});
  EXPECT_EQ(m, uniform(1, 2));
  EXPECT_FALSE(is_star(m));
}

TEST(FromCircuits, Examples) {
  EXPECT_EQ(from_circuits(4, {{1, 3}, {2, 4}}), square());
  EXPECT_EQ(from_circuits(3, {{1, 2, 3}}), uniform(2, 3));
  EXPECT_EQ(kind_of([] { from_circuits(3, {{1, 2}, {1, 2, 3}}); }), ErrorKind::NotAntichain);
  // {1 2} and {2 3} force {1 3} to be a circuit as well
  EXPECT_EQ(kind_of([] { from_circuits(3, {{1, 2}, {2, 3}}); }), ErrorKind::ExchangeViolation);
}

TEST(FromCircuits, RoundTripOnAllSmallMatroids) {
  for (const Matroid& m : sample_family()) {
    const SubsetFamily c = circuits(m);
    EXPECT_EQ(from_circuits(m.ground_size(), c.members()), m);
  }
}

TEST(Uniform, Examples) {
  const Matroid u = uniform(2, 4);
  EXPECT_EQ(u.bases().size(), 6U);
  EXPECT_EQ(circuits(u).members(), k_subsets(4, 3));
  EXPECT_EQ(dual(u), u);
  EXPECT_EQ(circumference(u), 3);
  EXPECT_EQ(kind_of([] { uniform(5, 4); }), ErrorKind::InvalidRank);
  EXPECT_EQ(kind_of([] { uniform(-1, 4); }), ErrorKind::InvalidRank);
  for (int n = 1; n <= 6; ++n) {
    for (int k = 0; k <= n; ++k) {
      EXPECT_EQ(dual(uniform(k, n)), uniform(n - k, n));
      if (k < n) EXPECT_EQ(circumference(uniform(k, n)), k + 1);
    }
  }
}

TEST(Graphic, FourCycle) {
  const Graph c4{4, {{1, 2}, {2, 3}, {3, 4}, {4, 1}}};
  const Matroid m = graphic(c4);
  EXPECT_EQ(oracle::bases_of(m), oracle::spanning_forests(c4));
  EXPECT_EQ(m, uniform(3, 4));
  EXPECT_EQ(circuits(m).to_string(), "{1 2 3 4}");
}

TEST(Graphic, K4HasSixteenSpanningTrees) {
  const Matroid m = graphic(k4());
  EXPECT_EQ(m.rank(), 3);
  const auto forests = oracle::spanning_forests(k4());
  EXPECT_EQ(forests.size(), 16U);
  EXPECT_EQ(oracle::bases_of(m), forests);
  std::set<int> sizes;
  for (ElementSet c : circuits(m)) sizes.insert(c.size());
  EXPECT_EQ(sizes, (std::set<int>{3, 4}));
  EXPECT_EQ(rank_subset(m, {1, 2, 4}), 2);
}

TEST(Graphic, SingleEdgeIsFree) {
  const Matroid m = graphic(Graph{2, {{1, 2}}});
  EXPECT_EQ(m, free_matroid(1));
  EXPECT_FALSE(circumference(m).has_value());
}

TEST(Graphic, AgreesWithForestEnumerationOnSmallGraphs) {
  for (const Graph& g : small_graphs(4, 6)) {
    EXPECT_EQ(oracle::bases_of(graphic(g)), oracle::spanning_forests(g));
  }
  for (int k = 2; k <= 4; ++k) EXPECT_EQ(graphic(parallel_edges(k)), uniform(1, k));
}

TEST(Graphic, CircuitsAreSimpleCycles) {
  // Chords are never inside a cycle's edge set, so every simple cycle is minimal.
  const Matroid m = graphic(k4());
  for (ElementSet c : circuits(m)) {
    std::map<int, int> degree;
    for (int e : c.elements()) {
      const auto [a, b] = k4().edges[static_cast<std::size_t>(e - 1)];
      ++degree[a];
      ++degree[b];
    }
    for (auto [v, d] : degree) EXPECT_EQ(d, 2);
  }
  EXPECT_EQ(circuits(m).size(), 7U);  // four triangles, three 4-cycles
}

TEST(Dual, Examples) {
  EXPECT_EQ(SubsetFamily(4, dual(square()).bases()).to_string(), "{1 2} {1 4} {2 3} {3 4}");
  EXPECT_EQ(dual(uniform(1, 3)), uniform(2, 3));
  const Matroid d = dual(free_matroid(3));
  EXPECT_EQ(d.rank(), 0);
  EXPECT_EQ(d.bases(), std::vector<ElementSet>{ElementSet()});
}

TEST(RankSubset, Examples) {
  EXPECT_EQ(rank_subset(square(), {1, 3}), 1);
  EXPECT_EQ(rank_subset(square(), {}), 0);
  EXPECT_EQ(kind_of([] { rank_subset(square(), {5}); }), ErrorKind::OutOfRange);
}

TEST(Circuits, Examples) {
  EXPECT_EQ(circuits(square()).to_string(), "{1 3} {2 4}");
  EXPECT_TRUE(circuits(free_matroid(3)).empty());
  EXPECT_EQ(circumference(square()), 2);
  EXPECT_FALSE(circumference(free_matroid(2)).has_value());
}

TEST(Restriction, Examples) {
  const Relabelled r = restriction(square(), {1, 2, 3});
  EXPECT_EQ(r.labels, (std::vector<int>{1, 2, 3}));
  EXPECT_EQ(circuits(r.matroid).to_string(), "{1 3}");
  EXPECT_EQ(kind_of([] { restriction(square(), {}); }), ErrorKind::EmptySubset);
}

TEST(LinkMatroid, Examples) {
  const Relabelled l = link_matroid(square(), {1});
  EXPECT_EQ(l.labels, (std::vector<int>{2, 4}));
  EXPECT_EQ(l.matroid, uniform(1, 2));
  EXPECT_EQ(kind_of([] { link_matroid(square(), {1, 3}); }), ErrorKind::DependentFace);
}

TEST(StarAndCore, Examples) {
  const Matroid star = from_bases(3, {{1, 3}, {2, 3}});
  EXPECT_TRUE(is_star(star));
  EXPECT_EQ(star_centers(star), (ElementSet{3}));
  const Relabelled c = core(star);
  EXPECT_EQ(c.matroid, uniform(1, 2));
  EXPECT_EQ(c.labels, (std::vector<int>{1, 2}));
  EXPECT_EQ(core(free_matroid(3)).matroid.ground_size(), 0);
}

TEST(DirectSum, Examples) {
  const Matroid s = direct_sum(uniform(1, 2), uniform(1, 2));
  EXPECT_EQ(SubsetFamily(4, s.bases()).to_string(), "{1 3} {1 4} {2 3} {2 4}");
  EXPECT_EQ(circuits(s).to_string(), "{1 2} {3 4}");  // the square with 2 and 3 swapped
  const Matroid plus = direct_sum(square(), free_matroid(1));
  EXPECT_EQ(star_centers(plus), (ElementSet{5}));
  EXPECT_EQ(circuits(direct_sum(uniform(2, 3), uniform(2, 3))).to_string(), "{1 2 3} {4 5 6}");
  EXPECT_EQ(circumference(direct_sum(uniform(1, 3), uniform(2, 4))), 3);
  EXPECT_FALSE(circumference(direct_sum(free_matroid(1), free_matroid(2))).has_value());
}

// ---- invariants over every matroid on up to four elements plus the curated list ----

TEST(MatroidProperties, ExchangeAndDualInvolution) {
  for (const Matroid& m : sample_family()) {
    EXPECT_FALSE(find_exchange_violation(m.bases()).has_value());
    EXPECT_EQ(dual(dual(m)), m);
    EXPECT_EQ(dual(m).rank(), m.ground_size() - m.rank());
    EXPECT_EQ(rank_subset(m, m.ground()), m.rank());
  }
}

TEST(MatroidProperties, CircuitsAndRankMatchBruteForce) {
  for (const Matroid& m : sample_family()) {
    const auto bases = oracle::bases_of(m);
    oracle::Family mine;
    for (ElementSet c : circuits(m)) mine.insert(c.elements());
    EXPECT_EQ(mine, oracle::circuits(bases, m.ground_size()));
    for_each_subset(m.ground(), [&](ElementSet a) { EXPECT_EQ(rank_subset(m, a), oracle::rank(bases, a.elements())); });
  }
}

TEST(MatroidProperties, RestrictionKeepsContainedCircuits) {
  for (const Matroid& m : sample_family()) {
    if (m.ground_size() > 5) continue;
    for_each_subset(m.ground(), [&](ElementSet a) {
      if (a.empty()) return;
      const Relabelled r = restriction(m, a);
      std::vector<ElementSet> got;
      for (ElementSet c : circuits(r.matroid)) got.push_back(r.to_original(c));
      canonicalize(got);
      std::vector<ElementSet> want;
      for (ElementSet c : circuits(m)) {
        if (c.subset_of(a)) want.push_back(c);
      }
      EXPECT_EQ(got, want);
    });
  }
}

TEST(MatroidProperties, LinkCircumferenceAndCore) {
  for (const Matroid& m : sample_family()) {
    const auto c = circumference(m);
    for (int x = 1; x <= m.ground_size(); ++x) {
      if (!m.is_independent(ElementSet::singleton(x))) continue;
      const Relabelled l = link_matroid(m, ElementSet::singleton(x));
      if (l.matroid.ground_size() == 0) continue;
      const auto cl = circumference(l.matroid);
      if (cl && c) EXPECT_LE(*cl, *c);
      if (cl) EXPECT_TRUE(c.has_value());
    }
    const Matroid k = core(m).matroid;
    if (k.ground_size() > 0) EXPECT_FALSE(is_star(k));
  }
}

TEST(MatroidProperties, UniformDetection) {
  for (int n = 1; n <= 4; ++n) {
    for (const Matroid& m : enumerate_all_matroids(n)) {
      const bool want = m.bases().size() == k_subsets(n, m.rank()).size();
      EXPECT_EQ(is_uniform(m), want);
    }
  }
}
