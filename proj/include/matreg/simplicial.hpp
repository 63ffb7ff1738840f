#pragma once

#include <optional>
#include <string>
#include <vector>

#include "matreg/element_set.hpp"
#include "matreg/matroid.hpp"

namespace matreg {

/// Simplicial complex on vertices {1..vertex_count}, stored by its facets.
///
/// The void complex (no faces) and the empty complex {∅} are different
/// values: void() has no facets, empty() has the single facet ∅.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;
  /// Facets may be any generating family; it is reduced to its maximal members.
  SimplicialComplex(int vertex_count, std::vector<ElementSet> generators);

  static SimplicialComplex void_complex(int vertex_count) { return SimplicialComplex(vertex_count, {}); }
  static SimplicialComplex empty_complex(int vertex_count) { return SimplicialComplex(vertex_count, {ElementSet()}); }
  static SimplicialComplex simplex(int vertex_count) {
    return SimplicialComplex(vertex_count, {ElementSet::full(vertex_count)});
  }

  int vertex_count() const { return n_; }
  const std::vector<ElementSet>& facets() const { return facets_; }
  bool is_void() const { return facets_.empty(); }
  /// -1 for {∅}; the void complex also reports -1.
  int dimension() const;
  bool contains(ElementSet face) const;
  bool is_pure() const;
  /// Vertices that are faces.
  ElementSet vertices() const;
  /// All faces, canonically ordered. Throws TooLarge past `limit` faces.
  std::vector<ElementSet> faces(std::size_t limit = 1U << 22) const;

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

  std::string to_string() const;

 private:
  int n_ = 0;
  std::vector<ElementSet> facets_;
};

struct HomologyReport {
  int prime = 2;
  /// dims[k] = dim H̃_{k-1}; the first entry is degree -1.
  std::vector<int> dims;

  /// dim H̃_i, zero outside the stored range.
  int at(int i) const {
    const int k = i + 1;
    return k >= 0 && k < static_cast<int>(dims.size()) ? dims[static_cast<std::size_t>(k)] : 0;
  }
  bool all_zero() const;
  friend bool operator==(const HomologyReport&, const HomologyReport&) = default;
};

SimplicialComplex independence_complex(const Matroid& m);

SimplicialComplex link(const SimplicialComplex& c, ElementSet f);
/// Induced subcomplex on `keep`; the vertex count is unchanged.
SimplicialComplex induced(const SimplicialComplex& c, ElementSet keep);
SimplicialComplex delete_vertex(const SimplicialComplex& c, int u);

/// Moves a complex on {1..labels.size()} to the vertices named by `labels`.
SimplicialComplex relabel_vertices(const SimplicialComplex& c, const std::vector<int>& labels, int vertex_count);

/// Least vertex contained in every facet, if any. Throws VoidComplex.
std::optional<int> cone_center(const SimplicialComplex& c);
inline bool is_cone(const SimplicialComplex& c) { return cone_center(c).has_value(); }

bool is_prime(int p);
/// Rank of a dense matrix over GF(p); entries must already be reduced mod p.
int rank_mod_p(std::vector<std::vector<std::uint32_t>> rows, int p);

using DenseMatrix = std::vector<std::vector<std::uint32_t>>;

/// ∂_k over GF(p): rows are (k-1)-faces, columns k-faces, both canonically
/// ordered. Defined for 0 <= k <= dimension()+1 (∂_0 maps vertices onto ∅).
DenseMatrix boundary_matrix(const SimplicialComplex& c, int k, int p);
DenseMatrix multiply_mod_p(const DenseMatrix& a, const DenseMatrix& b, int p);

/// Reduced homology over GF(p) from boundary matrices on canonically ordered faces.
HomologyReport reduced_homology(const SimplicialComplex& c, int p);
bool is_acyclic(const SimplicialComplex& c, int p);

/// Σ (-1)^i f_i over faces of dimension i, including the empty face at i = -1.
long long reduced_euler_characteristic(const SimplicialComplex& c);

}  // namespace matreg
