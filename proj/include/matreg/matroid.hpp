#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "matreg/element_set.hpp"
#include "matreg/error.hpp"

namespace matreg {

/// A matroid on {1..n} given explicitly by its bases.
///
/// Instances are immutable and always satisfy the basis axioms: the family is
/// nonempty, equicardinal and closed under exchange. Loops (elements in no
/// basis) are representable; duals of free matroids and exhaustive
/// enumeration both produce them. A ground size of 0 only arises as the core
/// of a free matroid.
class Matroid {
 public:
  int ground_size() const { return n_; }
  int rank() const { return rank_; }
  ElementSet ground() const { return ElementSet::full(n_); }
  const std::vector<ElementSet>& bases() const { return bases_; }
  bool is_basis(ElementSet s) const;
  /// Subset of some basis.
  bool is_independent(ElementSet s) const;

  friend bool operator==(const Matroid& a, const Matroid& b) { return a.n_ == b.n_ && a.bases_ == b.bases_; }

 private:
  friend Matroid make_matroid_unchecked(int n, std::vector<ElementSet> bases);

  int n_ = 0;
  int rank_ = 0;
  std::vector<ElementSet> bases_;           // canonical order
  std::vector<std::uint32_t> sorted_bits_;  // numeric order, for lookup
};

/// An undirected multigraph without self-loops. Edge i (1-based) is matroid element i.
struct Graph {
  int vertex_count = 0;
  std::vector<std::pair<int, int>> edges;

  int edge_count() const { return static_cast<int>(edges.size()); }
  /// Throws OutOfRange / InvalidArgument on bad endpoints or self-loops.
  void validate() const;
};

/// A matroid obtained on a subset of another ground set, relabelled to 1..m.
/// `labels[j]` is the original element carried by new element j+1.
struct Relabelled {
  Matroid matroid;
  std::vector<int> labels;

  /// Maps a set in the new labels back to the original ground set.
  ElementSet to_original(ElementSet s) const;
};

/// Witness for a failed exchange check: B1 - x + y is not a basis for any y in B2 - B1.
struct ExchangeWitness {
  ElementSet b1;
  ElementSet b2;
  int x = 0;
};

/// Returns the first violating triple in canonical order, or nothing if the
/// equicardinal family satisfies basis exchange.
std::optional<ExchangeWitness> find_exchange_violation(const std::vector<ElementSet>& bases);

class ExchangeError : public Error {
 public:
  explicit ExchangeError(const ExchangeWitness& w)
      : Error(ErrorKind::ExchangeViolation, "B1=" + w.b1.to_string() + " B2=" + w.b2.to_string() +
                                                " x=" + std::to_string(w.x) + " has no exchange partner"),
        witness_(w) {}
  const ExchangeWitness& witness() const noexcept { return witness_; }

 private:
  ExchangeWitness witness_;
};

Matroid from_bases(int n, const std::vector<ElementSet>& bases);
Matroid from_circuits(int n, const std::vector<ElementSet>& circuits);
Matroid uniform(int k, int n);
/// Rank-n matroid on {1..n} (every element a coloop).
Matroid free_matroid(int n);
Matroid graphic(const Graph& g);
Matroid dual(const Matroid& m);

int rank_subset(const Matroid& m, ElementSet a);
/// Minimal dependent sets in canonical order.
SubsetFamily circuits(const Matroid& m);
/// Size of the largest circuit; nothing when the matroid has no circuit.
std::optional<int> circumference(const Matroid& m);
ElementSet loops(const Matroid& m);

Relabelled restriction(const Matroid& m, ElementSet a);
Matroid deletion(const Matroid& m, int x);
/// Contraction by an independent set with the resulting loops dropped.
Relabelled link_matroid(const Matroid& m, ElementSet f);

/// Elements in every basis (the coloops).
ElementSet star_centers(const Matroid& m);
bool is_star(const Matroid& m);
/// Restriction to the non-coloops. For a free matroid the result has an
/// empty ground set.
Relabelled core(const Matroid& m);

Matroid direct_sum(const Matroid& a, const Matroid& b);

/// True when m has bases equal to all k-subsets of its ground set for some k.
bool is_uniform(const Matroid& m);

/// Only for callers that already hold a valid basis family.
Matroid make_matroid_unchecked(int n, std::vector<ElementSet> bases);

}  // namespace matreg
