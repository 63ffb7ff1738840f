#pragma once

#include <optional>
#include <string>
#include <vector>

#include "matreg/matroid.hpp"

namespace matreg {

struct NamedMatroid {
  std::string id;
  Matroid matroid;
  /// Set when the matroid is (co)graphic and came from this graph.
  std::optional<Graph> graph;
};

/// Every labeled matroid on {1..n}, ranks 0..n, loops included, sorted by
/// rank and then lexicographically by basis list. Throws TooLarge for n > 6.
std::vector<Matroid> enumerate_all_matroids(int n);

/// Simple graphs on 2..max_vertices vertices without isolated vertices and
/// with at most max_edges edges, one per isomorphism class, ordered by
/// (vertices, edges, canonical edge list).
std::vector<Graph> small_graphs(int max_vertices = 5, int max_edges = 8);

/// Every labeled simple graph on 1..max_vertices vertices with at least one edge.
std::vector<Graph> labeled_simple_graphs(int max_vertices);

/// Two vertices joined by k parallel edges.
Graph parallel_edges(int k);

/// Edges as "1-2 1-3 ..".
std::string graph_label(const Graph& g);

struct FamilySpec {
  enum class Kind { Uniform, Graphic, Cographic, DirectSum, Exhaustive, FromFile };
  Kind kind = Kind::Uniform;
  int k_min = 1, k_max = 3;
  int n_min = 2, n_max = 5;
  int max_vertices = 5;
  int max_edges = 8;
  /// Exhaustive: all n in [n_min, exhaustive_n].
  int exhaustive_n = 4;
  std::vector<std::string> paths;

  /// Throws InvalidArgument on empty ranges, TooLarge on exhaustive_n > 6.
  void validate() const;
};

/// Deterministic stream for the spec, materialized.
std::vector<NamedMatroid> generate(const FamilySpec& spec);

/// Parses "uniform", "graphic", "cographic", "directsum", "exhaustive".
std::optional<FamilySpec::Kind> family_kind(const std::string& name);

/// The n ∈ {5,6} list: U_{k,n} for 0 <= k < n, graphic and cographic
/// matroids of small graphs with 5 or 6 edges, and square ⊕ U_{1,2}.
std::vector<NamedMatroid> curated_medium();

}  // namespace matreg
