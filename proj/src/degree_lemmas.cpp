#include "matreg/degree_lemmas.hpp"

#include <algorithm>

#include "matreg/error.hpp"

namespace matreg {

namespace {

// Δ_b(I_L^(s)) for the matroid L, moved onto the original labels. A free L
// has the zero ideal, whose degree complex is the full simplex.
SimplicialComplex relabelled_degree_complex(const Relabelled& l, int s, const ExponentVector& b, int n) {
  const int p = l.matroid.ground_size();
  if (l.matroid.rank() == p) return relabel_vertices(SimplicialComplex::simplex(p), l.labels, n);
  const SimplicialComplex c = degree_complex_general(symbolic_generators(l.matroid, s), b);
  return relabel_vertices(c, l.labels, n);
}

ExponentVector restrict_to(const ExponentVector& a, const std::vector<int>& labels) {
  std::vector<int> e;
  e.reserve(labels.size());
  for (int i : labels) e.push_back(a[i]);
  return ExponentVector(std::move(e));
}

}  // namespace

int argmin_coordinate(const ExponentVector& a) {
  const auto& e = a.entries();
  return static_cast<int>(std::min_element(e.begin(), e.end()) - e.begin()) + 1;
}

std::optional<IdentityCheck> check_link_identity(const Matroid& m, int t, const ExponentVector& a, int v) {
  const int n = m.ground_size();
  if (!a.nonnegative() || v < 1 || v > n) return std::nullopt;
  const SimplicialComplex gamma = degree_complex_matroid(m, t, a);
  if (gamma.is_void() || !gamma.vertices().contains(v)) return std::nullopt;
  const Relabelled lk = link_matroid(m, ElementSet::singleton(v));
  if (lk.matroid.ground_size() == 0) return std::nullopt;

  ElementSet p_set;
  for (int i : lk.labels) p_set = p_set.with(i);
  int r = 0;
  (m.ground() - p_set).without(v).for_each([&](int i) { r += a[i]; });
  // r <= t-1 whenever v is a vertex of Γ
  if (r > t - 1) throw Error(ErrorKind::InvalidArgument, "link shift exceeds t-1");

  IdentityCheck out{link(gamma, ElementSet::singleton(v)),
                    relabelled_degree_complex(lk, t - r, restrict_to(a, lk.labels), n)};
  return out;
}

std::optional<IdentityCheck> check_restrict_identity(const Matroid& m, int t, const ExponentVector& a, int u) {
  const int n = m.ground_size();
  if (!a.nonnegative() || n < 2 || u < 1 || u > n || m.rank() == n) return std::nullopt;
  const SimplicialComplex gamma = degree_complex_matroid(m, t, a);
  if (gamma.is_void()) return std::nullopt;
  const int s = t - a[u];
  if (s < 1) return std::nullopt;
  const Relabelled rest = restriction(m, m.ground().without(u));
  IdentityCheck out{delete_vertex(gamma, u), relabelled_degree_complex(rest, s, restrict_to(a, rest.labels), n)};
  return out;
}

std::optional<int> find_circ_link_violation(const Matroid& m) {
  const int c = circumference(m).value_or(0);
  for (int x = 1; x <= m.ground_size(); ++x) {
    if (!m.is_independent(ElementSet::singleton(x))) continue;
    const Relabelled lk = link_matroid(m, ElementSet::singleton(x));
    if (lk.matroid.ground_size() == 0) continue;
    if (circumference(lk.matroid).value_or(0) > c) return x;
  }
  return std::nullopt;
}

}  // namespace matreg
