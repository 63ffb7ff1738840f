#pragma once

#include <optional>
#include <string>
#include <vector>

#include "matreg/element_set.hpp"
#include "matreg/matroid.hpp"

namespace matreg {

enum class CoverKind { BaseCover, EmptyIntersection, ForestCover };

/// Witness family for a covering or intersection bound.
struct CoverCertificate {
  CoverKind kind = CoverKind::BaseCover;
  std::vector<ElementSet> witness;

  int size() const { return static_cast<int>(witness.size()); }
};

/// Re-checks a certificate against the matroid, without using the search that produced it.
/// ForestCover certificates are checked as base covers of the graphic matroid.
bool validate_certificate(const Matroid& m, const CoverCertificate& cert);

struct CountWithCertificate {
  int value = 0;
  CoverCertificate certificate;
};

/// Fewest bases with empty common intersection. Throws StarMatroid.
CountWithCertificate gamma(const Matroid& m);
/// Fewest bases covering the ground set. Throws LoopElement when some element lies in no basis.
CountWithCertificate arboricity_exact(const Matroid& m);

struct SubsetMaximizer {
  int value = 0;
  ElementSet maximizer;
};

/// max ⌈|A| / r(A)⌉ over A with r(A) >= 1. Throws ZeroRank.
SubsetMaximizer arboricity_edmonds(const Matroid& m);
/// max ⌈e_H / (n_H - 1)⌉ over induced subgraphs on >= 2 vertices; the maximizer is a vertex set.
SubsetMaximizer nash_williams(const Graph& g);

/// Minimal edge cuts, found from vertex bipartitions of each connected component.
SubsetFamily bonds(const Graph& g);
/// Size of the largest bond; 0 for a graph without edges.
int largest_bond(const Graph& g);

/// Minimum number of forests covering every edge. With `disjoint`, the forests
/// partition the edge set (found by direct edge colouring, not via bases).
CountWithCertificate min_forest_cover(const Graph& g, bool disjoint = false);

/// Bridges of g, as edge labels; these are the coloops of graphic(g).
ElementSet bridges(const Graph& g);
/// Length of the longest cycle; nothing for a forest.
std::optional<int> graph_circumference(const Graph& g);

struct ArborRecord {
  int arboricity = 0;
  int gamma_dual = 0;
  int circumference_dual = 0;
  bool pass = false;
  bool equality = false;
  /// Number of coloops removed before checking.
  int coloops_removed = 0;
};

/// a(M) <= c(M*), after stripping coloops. Throws Inapplicable for free
/// matroids and for matroids with loops (no base cover exists).
ArborRecord check_arbor(const Matroid& m);

struct MbRecord {
  int lhs = 0;  // c(M)(|V| - r(M))
  int rhs = 0;  // |V|
  bool pass = false;
  bool equality = false;
};

/// c(M)(|V| - r(M)) >= |V| for a matroid that is not a star.
MbRecord check_mb(const Matroid& m);

struct GammaRecord {
  int gamma = 0;
  int circumference = 0;
  bool pass = false;
};

/// γ(M) <= c(M) for a matroid that is not a star.
GammaRecord check_gamma(const Matroid& m);

std::string to_string(CoverKind kind);

}  // namespace matreg
