#include "matreg/simplicial.hpp"

#include <algorithm>

#include "matreg/error.hpp"

namespace matreg {

namespace {

constexpr int kMaxHomologyVertices = 24;
constexpr std::size_t kMaxMatrixCells = 40'000'000;

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  // Fermat: a^(p-2)
  std::uint64_t result = 1, base = a % p;
  for (std::uint32_t e = p - 2; e > 0; e >>= 1) {
    if (e & 1U) result = result * base % p;
    base = base * base % p;
  }
  return static_cast<std::uint32_t>(result);
}

void check_prime(int p) {
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p));
  if (p > 46337) throw Error(ErrorKind::InvalidArgument, "prime too large for 32-bit arithmetic");
}

// Faces of each dimension in canonical order; entry k holds faces of size k.
std::vector<std::vector<ElementSet>> faces_by_size(const SimplicialComplex& c) {
  std::vector<std::vector<ElementSet>> by_size(static_cast<std::size_t>(c.dimension() + 2));
  if (c.is_void()) return by_size;
  for (ElementSet f : c.faces()) by_size[static_cast<std::size_t>(f.size())].push_back(f);
  return by_size;
}

int index_of(const std::vector<std::pair<std::uint32_t, int>>& lookup, ElementSet s) {
  auto it = std::lower_bound(lookup.begin(), lookup.end(), std::make_pair(s.bits(), 0));
  return it->second;
}

std::vector<std::pair<std::uint32_t, int>> make_lookup(const std::vector<ElementSet>& faces) {
  std::vector<std::pair<std::uint32_t, int>> lookup;
  lookup.reserve(faces.size());
  for (std::size_t i = 0; i < faces.size(); ++i) lookup.emplace_back(faces[i].bits(), static_cast<int>(i));
  std::sort(lookup.begin(), lookup.end());
  return lookup;
}

// Rows indexed by the larger faces (transpose of ∂); rank is unaffected.
DenseMatrix boundary_rows(const std::vector<ElementSet>& upper, const std::vector<ElementSet>& lower, int p) {
  if (upper.size() * std::max<std::size_t>(lower.size(), 1) > kMaxMatrixCells) {
    throw Error(ErrorKind::TooLarge, "boundary matrix " + std::to_string(lower.size()) + "x" +
                                         std::to_string(upper.size()));
  }
  const auto lookup = make_lookup(lower);
  DenseMatrix rows(upper.size(), std::vector<std::uint32_t>(lower.size(), 0));
  const auto up = static_cast<std::uint32_t>(p);
  for (std::size_t r = 0; r < upper.size(); ++r) {
    int position = 0;
    upper[r].for_each([&](int v) {
      const int col = index_of(lookup, upper[r].without(v));
      rows[r][static_cast<std::size_t>(col)] = (position % 2 == 0) ? 1U % up : up - 1U;
      ++position;
    });
  }
  return rows;
}

}  // namespace

SimplicialComplex::SimplicialComplex(int vertex_count, std::vector<ElementSet> generators)
    : n_(vertex_count), facets_(maximal_members(std::move(generators))) {
  if (vertex_count < 0 || vertex_count > kMaxGround) {
    throw Error(ErrorKind::OutOfRange, "vertex count " + std::to_string(vertex_count));
  }
  const ElementSet all = ElementSet::full(vertex_count);
  for (ElementSet f : facets_) {
    if (!f.subset_of(all)) throw Error(ErrorKind::OutOfRange, "facet " + f.to_string());
  }
}

int SimplicialComplex::dimension() const {
  int d = -1;
  for (ElementSet f : facets_) d = std::max(d, f.size() - 1);
  return d;
}

bool SimplicialComplex::contains(ElementSet face) const {
  return std::any_of(facets_.begin(), facets_.end(), [&](ElementSet f) { return face.subset_of(f); });
}

bool SimplicialComplex::is_pure() const {
  return std::all_of(facets_.begin(), facets_.end(),
                     [&](ElementSet f) { return f.size() == facets_.front().size(); });
}

ElementSet SimplicialComplex::vertices() const {
  ElementSet v;
  for (ElementSet f : facets_) v = v | f;
  return v;
}

std::vector<ElementSet> SimplicialComplex::faces(std::size_t limit) const {
  std::vector<ElementSet> out;
  for (ElementSet f : facets_) {
    if (f.size() > kMaxHomologyVertices) throw Error(ErrorKind::TooLarge, "facet " + f.to_string());
    for_each_subset(f, [&](ElementSet s) { out.push_back(s); });
    if (out.size() > 4 * limit) canonicalize(out);
    if (out.size() > limit) throw Error(ErrorKind::TooLarge, "more than " + std::to_string(limit) + " faces");
  }
  canonicalize(out);
  if (out.size() > limit) throw Error(ErrorKind::TooLarge, "more than " + std::to_string(limit) + " faces");
  return out;
}

std::string SimplicialComplex::to_string() const {
  if (facets_.empty()) return "void";
  std::string s;
  for (std::size_t i = 0; i < facets_.size(); ++i) {
    if (i) s += ' ';
    s += facets_[i].to_string();
  }
  return s;
}

bool HomologyReport::all_zero() const {
  return std::all_of(dims.begin(), dims.end(), [](int d) { return d == 0; });
}

SimplicialComplex independence_complex(const Matroid& m) {
  return SimplicialComplex(m.ground_size(), m.bases());
}

SimplicialComplex link(const SimplicialComplex& c, ElementSet f) {
  if (!c.contains(f)) throw Error(ErrorKind::FaceNotInComplex, f.to_string());
  std::vector<ElementSet> gens;
  for (ElementSet facet : c.facets()) {
    if (f.subset_of(facet)) gens.push_back(facet - f);
  }
  return SimplicialComplex(c.vertex_count(), std::move(gens));
}

SimplicialComplex induced(const SimplicialComplex& c, ElementSet keep) {
  std::vector<ElementSet> gens;
  gens.reserve(c.facets().size());
  for (ElementSet facet : c.facets()) gens.push_back(facet & keep);
  return SimplicialComplex(c.vertex_count(), std::move(gens));
}

SimplicialComplex delete_vertex(const SimplicialComplex& c, int u) {
  if (u < 1 || u > c.vertex_count()) throw Error(ErrorKind::OutOfRange, "vertex " + std::to_string(u));
  return induced(c, ElementSet::full(c.vertex_count()).without(u));
}

SimplicialComplex relabel_vertices(const SimplicialComplex& c, const std::vector<int>& labels, int vertex_count) {
  std::vector<ElementSet> gens;
  for (ElementSet facet : c.facets()) {
    ElementSet g;
    facet.for_each([&](int v) { g = g.with(labels.at(static_cast<std::size_t>(v - 1))); });
    gens.push_back(g);
  }
  return SimplicialComplex(vertex_count, std::move(gens));
}

std::optional<int> cone_center(const SimplicialComplex& c) {
  if (c.is_void()) throw Error(ErrorKind::VoidComplex, "cone test on the void complex");
  ElementSet common = ElementSet::full(c.vertex_count());
  for (ElementSet f : c.facets()) common = common & f;
  if (common.empty()) return std::nullopt;
  return common.min_element();
}

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

int rank_mod_p(DenseMatrix rows, int p) {
  if (rows.empty()) return 0;
  const auto up = static_cast<std::uint32_t>(p);
  const std::size_t cols = rows.front().size();
  int rank = 0;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < cols && pivot_row < rows.size(); ++col) {
    std::size_t sel = pivot_row;
    while (sel < rows.size() && rows[sel][col] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[sel], rows[pivot_row]);
    const std::uint32_t inv = inverse_mod(rows[pivot_row][col], up);
    for (std::size_t j = col; j < cols; ++j) rows[pivot_row][j] = rows[pivot_row][j] * inv % up;
    for (std::size_t r = pivot_row + 1; r < rows.size(); ++r) {
      const std::uint32_t factor = rows[r][col];
      if (factor == 0) continue;
      for (std::size_t j = col; j < cols; ++j) {
        rows[r][j] = (rows[r][j] + (up - factor) * rows[pivot_row][j]) % up;
      }
    }
    ++pivot_row;
    ++rank;
  }
  return rank;
}

DenseMatrix boundary_matrix(const SimplicialComplex& c, int k, int p) {
  check_prime(p);
  const auto by_size = faces_by_size(c);
  auto layer = [&](int size) -> std::vector<ElementSet> {
    if (size < 0 || size >= static_cast<int>(by_size.size())) return {};
    return by_size[static_cast<std::size_t>(size)];
  };
  // k-faces have k+1 vertices
  const auto upper = layer(k + 1);
  const auto lower = layer(k);
  const DenseMatrix rows = boundary_rows(upper, lower, p);
  DenseMatrix m(lower.size(), std::vector<std::uint32_t>(upper.size(), 0));
  for (std::size_t r = 0; r < upper.size(); ++r) {
    for (std::size_t q = 0; q < lower.size(); ++q) m[q][r] = rows[r][q];
  }
  return m;
}

DenseMatrix multiply_mod_p(const DenseMatrix& a, const DenseMatrix& b, int p) {
  const std::size_t inner = b.size();
  const std::size_t cols = inner == 0 ? 0 : b.front().size();
  DenseMatrix out(a.size(), std::vector<std::uint32_t>(cols, 0));
  const auto up = static_cast<std::uint64_t>(p);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      std::uint64_t acc = 0;
      for (std::size_t k = 0; k < inner; ++k) acc = (acc + std::uint64_t{a[i][k]} * b[k][j]) % up;
      out[i][j] = static_cast<std::uint32_t>(acc);
    }
  }
  return out;
}

HomologyReport reduced_homology(const SimplicialComplex& c, int p) {
  check_prime(p);
  if (c.vertex_count() > kMaxHomologyVertices) {
    throw Error(ErrorKind::TooLarge, std::to_string(c.vertex_count()) + " vertices");
  }
  HomologyReport report;
  report.prime = p;
  if (c.is_void()) {
    report.dims = {0};
    return report;
  }
  const auto by_size = faces_by_size(c);
  const int levels = static_cast<int>(by_size.size());  // sizes 0..dim+1
  // rank_of[s] = rank of the boundary from size-s faces to size-(s-1) faces
  std::vector<int> rank_of(static_cast<std::size_t>(levels) + 1, 0);
  for (int s = 1; s < levels; ++s) {
    rank_of[static_cast<std::size_t>(s)] =
        rank_mod_p(boundary_rows(by_size[static_cast<std::size_t>(s)], by_size[static_cast<std::size_t>(s - 1)], p), p);
  }
  report.dims.resize(static_cast<std::size_t>(levels));
  for (int s = 0; s < levels; ++s) {
    const auto count = static_cast<int>(by_size[static_cast<std::size_t>(s)].size());
    report.dims[static_cast<std::size_t>(s)] =
        count - rank_of[static_cast<std::size_t>(s)] - rank_of[static_cast<std::size_t>(s + 1)];
  }
  return report;
}

bool is_acyclic(const SimplicialComplex& c, int p) { return reduced_homology(c, p).all_zero(); }

long long reduced_euler_characteristic(const SimplicialComplex& c) {
  long long chi = 0;
  if (c.is_void()) return 0;
  for (ElementSet f : c.faces()) chi += ((f.size() - 1) % 2 == 0) ? 1 : -1;
  return chi;
}

}  // namespace matreg
