#include <gtest/gtest.h>

#include "matreg/arboricity.hpp"
#include "matreg/error.hpp"
#include "matreg/families.hpp"
#include "oracles.hpp"

using namespace matreg;

namespace {

Matroid square() { return from_bases(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}}); }
Graph c4() { return Graph{4, {{1, 2}, {2, 3}, {3, 4}, {4, 1}}}; }
Graph k4() { return Graph{4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}}; }

template <class F>
ErrorKind kind_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST(Gamma, Examples) {
  EXPECT_EQ(gamma(square()).value, 2);
  EXPECT_EQ(gamma(uniform(2, 4)).value, 2);
  EXPECT_EQ(gamma(uniform(1, 3)).value, 2);
  EXPECT_EQ(gamma(uniform(2, 3)).value, 3);  // needs all three bases
  EXPECT_EQ(kind_of([] { gamma(from_bases(3, {{1, 3}, {2, 3}})); }), ErrorKind::StarMatroid);
  const auto g = gamma(uniform(2, 3));
  EXPECT_EQ(g.certificate.kind, CoverKind::EmptyIntersection);
  EXPECT_TRUE(validate_certificate(uniform(2, 3), g.certificate));
}

TEST(ArboricityExact, Examples) {
  EXPECT_EQ(arboricity_exact(square()).value, 2);
  EXPECT_EQ(arboricity_exact(uniform(1, 3)).value, 3);
  EXPECT_EQ(arboricity_exact(free_matroid(3)).value, 1);
  EXPECT_EQ(arboricity_exact(graphic(k4())).value, 2);
  EXPECT_EQ(kind_of([] { arboricity_exact(from_bases(2, {{1}})); }), ErrorKind::LoopElement);
  const auto a = arboricity_exact(uniform(2, 5));
  EXPECT_EQ(a.value, 3);
  EXPECT_TRUE(validate_certificate(uniform(2, 5), a.certificate));
}

TEST(Certificates, RejectBadWitnesses) {
  EXPECT_FALSE(validate_certificate(square(), {CoverKind::BaseCover, {{1, 2}}}));
  EXPECT_FALSE(validate_certificate(square(), {CoverKind::BaseCover, {{1, 3}, {2, 4}}}));  // not bases
  EXPECT_TRUE(validate_certificate(square(), {CoverKind::BaseCover, {{1, 2}, {3, 4}}}));
  EXPECT_FALSE(validate_certificate(square(), {CoverKind::EmptyIntersection, {{1, 2}, {2, 3}}}));
  EXPECT_TRUE(validate_certificate(square(), {CoverKind::EmptyIntersection, {{1, 2}, {3, 4}}}));
}

TEST(Edmonds, Examples) {
  const auto e = arboricity_edmonds(uniform(1, 3));
  EXPECT_EQ(e.value, 3);
  EXPECT_EQ(arboricity_edmonds(square()).value, 2);
  EXPECT_EQ(kind_of([] { arboricity_edmonds(from_bases(2, {ElementSet()})); }), ErrorKind::ZeroRank);
}

TEST(NashWilliams, Examples) {
  EXPECT_EQ(nash_williams(c4()).value, 2);
  EXPECT_EQ(nash_williams(k4()).value, 2);
  EXPECT_EQ(nash_williams(Graph{5, {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}, {3, 4}, {3, 5}, {4, 5}}}).value, 3);
  EXPECT_EQ(kind_of([] { nash_williams(Graph{3, {}}); }), ErrorKind::NoEdges);
}

TEST(Bonds, Examples) {
  EXPECT_EQ(bonds(c4()).size(), 6U);  // any two of the four edges
  EXPECT_EQ(largest_bond(c4()), 2);
  EXPECT_EQ(largest_bond(k4()), 4);
  EXPECT_EQ(largest_bond(Graph{3, {{1, 2}, {2, 3}}}), 1);
  EXPECT_EQ(largest_bond(Graph{3, {}}), 0);
}

TEST(Bonds, MatchBruteForceAndCographicCircuits) {
  for (const Graph& g : small_graphs(5, 7)) {
    oracle::Family mine;
    for (ElementSet b : bonds(g)) mine.insert(b.elements());
    EXPECT_EQ(mine, oracle::bonds(g)) << graph_label(g);
    EXPECT_EQ(bonds(g).members(), circuits(dual(graphic(g))).members()) << graph_label(g);
  }
}

TEST(ForestCover, Examples) {
  EXPECT_EQ(min_forest_cover(c4()).value, 2);
  EXPECT_EQ(min_forest_cover(c4(), true).value, 2);
  EXPECT_EQ(min_forest_cover(k4()).value, 2);
  EXPECT_EQ(min_forest_cover(parallel_edges(3), true).value, 3);
  const auto cover = min_forest_cover(k4());
  EXPECT_EQ(cover.certificate.kind, CoverKind::ForestCover);
  EXPECT_TRUE(validate_certificate(graphic(k4()), cover.certificate));
}

TEST(GraphHelpers, BridgesAndCircumference) {
  const Graph two_triangles{6, {{1, 2}, {2, 3}, {1, 3}, {3, 4}, {4, 5}, {5, 6}, {4, 6}}};
  EXPECT_EQ(bridges(two_triangles), (ElementSet{4}));
  EXPECT_EQ(bridges(two_triangles), star_centers(graphic(two_triangles)));
  EXPECT_EQ(graph_circumference(two_triangles), 3);
  EXPECT_EQ(graph_circumference(k4()), 4);
  EXPECT_FALSE(graph_circumference(Graph{3, {{1, 2}, {2, 3}}}).has_value());
}

TEST(CheckArbor, SharpnessExample) {
  // M = U_{2,3} ⊕ U_{1,2}: every largest circuit of the dual U_{1,3} ⊕ U_{1,2}
  // has size 2 and rank 1, so a(M) = 2 = c(M*).
  const Matroid m = direct_sum(uniform(2, 3), uniform(1, 2));
  const ArborRecord rec = check_arbor(m);
  EXPECT_EQ(rec.arboricity, 2);
  EXPECT_EQ(rec.circumference_dual, 2);
  EXPECT_TRUE(rec.pass);
  EXPECT_TRUE(rec.equality);
  // U_{1,3}: dual U_{2,3} has c = 3 = a.
  const ArborRecord u = check_arbor(uniform(1, 3));
  EXPECT_EQ(u.arboricity, 3);
  EXPECT_TRUE(u.equality);
  EXPECT_EQ(kind_of([] { check_arbor(free_matroid(2)); }), ErrorKind::Inapplicable);
  EXPECT_EQ(kind_of([] { check_arbor(from_bases(3, {{1}, {2}})); }), ErrorKind::Inapplicable);
}

TEST(CheckArbor, StarsAreReducedToTheirCore) {
  const Matroid star = direct_sum(square(), free_matroid(2));
  const ArborRecord rec = check_arbor(star);
  EXPECT_EQ(rec.coloops_removed, 2);
  EXPECT_EQ(rec.arboricity, 2);
  EXPECT_EQ(arboricity_exact(star).value, 2);
}

TEST(CheckMb, Examples) {
  const MbRecord sq = check_mb(square());
  EXPECT_EQ(sq.lhs, 4);
  EXPECT_EQ(sq.rhs, 4);
  EXPECT_TRUE(sq.equality);
  EXPECT_TRUE(check_mb(uniform(2, 5)).pass);
  EXPECT_EQ(kind_of([] { check_mb(free_matroid(1)); }), ErrorKind::StarMatroid);
}

// ---- brute-force agreement over every matroid on up to five elements ----

TEST(ArboricityProperties, AgreeWithBruteForce) {
  for (int n = 1; n <= 5; ++n) {
    for (const Matroid& m : enumerate_all_matroids(n)) {
      const auto bases = oracle::bases_of(m);
      if (loops(m).empty()) {
        const auto a = arboricity_exact(m);
        EXPECT_EQ(a.value, oracle::min_bases(bases, n, true));
        EXPECT_TRUE(validate_certificate(m, a.certificate));
        if (m.rank() > 0) EXPECT_EQ(arboricity_edmonds(m).value, a.value);
        EXPECT_EQ(a.value, gamma(dual(m)).value);
      }
      if (!is_star(m)) {
        const auto g = gamma(m);
        EXPECT_EQ(g.value, oracle::min_bases(bases, n, false));
        EXPECT_TRUE(validate_certificate(m, g.certificate));
        EXPECT_LE(g.value, circumference(m).value());
      }
    }
  }
}

TEST(ArboricityProperties, GraphFormulasAgree) {
  for (const Graph& g : labeled_simple_graphs(4)) {
    const int exact = arboricity_exact(graphic(g)).value;
    EXPECT_EQ(nash_williams(g).value, exact);
    EXPECT_EQ(oracle::nash_williams(g), exact);
    EXPECT_EQ(min_forest_cover(g).value, exact);
    EXPECT_EQ(min_forest_cover(g, true).value, exact);
    EXPECT_LE(exact, largest_bond(g));
  }
}
