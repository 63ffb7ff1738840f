#include "matreg/arboricity.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "matreg/error.hpp"

namespace matreg {

namespace {

// Exact set-cover style search: fewest sets from `pool` whose union is `target`.
// Branches on the smallest uncovered element, so every optimal cover is reachable.
std::vector<ElementSet> min_cover(const std::vector<ElementSet>& pool, ElementSet target, int max_set_size) {
  for (int k = 1; k <= target.size(); ++k) {
    std::vector<ElementSet> chosen;
    std::function<bool(ElementSet)> dfs = [&](ElementSet covered) -> bool {
      const ElementSet missing = target - covered;
      if (missing.empty()) return true;
      const int left = k - static_cast<int>(chosen.size());
      if (left == 0 || missing.size() > left * max_set_size) return false;
      const int e = missing.min_element();
      for (ElementSet s : pool) {
        if (!s.contains(e)) continue;
        chosen.push_back(s);
        if (dfs(covered | s)) return true;
        chosen.pop_back();
      }
      return false;
    };
    if (dfs(ElementSet())) return chosen;
  }
  return {};
}

int ceil_div(int a, int b) { return (a + b - 1) / b; }

int find_root(std::vector<int>& parent, int v) {
  while (parent[v] != v) {
    parent[v] = parent[parent[v]];
    v = parent[v];
  }
  return v;
}

// Connectivity of the subgraph induced on `vertices` (bit v-1 = vertex v).
bool induced_connected(const Graph& g, std::uint32_t vertices) {
  if (vertices == 0) return false;
  std::vector<int> parent(static_cast<std::size_t>(g.vertex_count) + 1);
  std::iota(parent.begin(), parent.end(), 0);
  int pieces = std::popcount(vertices);
  for (auto [u, v] : g.edges) {
    if (((vertices >> (u - 1)) & 1U) && ((vertices >> (v - 1)) & 1U)) {
      int ru = find_root(parent, u), rv = find_root(parent, v);
      if (ru != rv) {
        parent[ru] = rv;
        --pieces;
      }
    }
  }
  return pieces == 1;
}

std::vector<std::uint32_t> components(const Graph& g) {
  std::vector<int> parent(static_cast<std::size_t>(g.vertex_count) + 1);
  std::iota(parent.begin(), parent.end(), 0);
  for (auto [u, v] : g.edges) {
    int ru = find_root(parent, u), rv = find_root(parent, v);
    if (ru != rv) parent[ru] = rv;
  }
  std::vector<std::uint32_t> by_root(static_cast<std::size_t>(g.vertex_count) + 1, 0);
  for (int v = 1; v <= g.vertex_count; ++v) by_root[find_root(parent, v)] |= std::uint32_t{1} << (v - 1);
  std::vector<std::uint32_t> out;
  for (std::uint32_t c : by_root) {
    if (c) out.push_back(c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::string to_string(CoverKind kind) {
  switch (kind) {
    case CoverKind::BaseCover: return "BaseCover";
    case CoverKind::EmptyIntersection: return "EmptyIntersection";
    case CoverKind::ForestCover: return "ForestCover";
  }
  return "?";
}

bool validate_certificate(const Matroid& m, const CoverCertificate& cert) {
  if (cert.witness.empty()) return false;
  switch (cert.kind) {
    case CoverKind::BaseCover: {
      ElementSet u;
      for (ElementSet b : cert.witness) {
        if (!m.is_basis(b)) return false;
        u = u | b;
      }
      return u == m.ground();
    }
    case CoverKind::EmptyIntersection: {
      ElementSet common = m.ground();
      for (ElementSet b : cert.witness) {
        if (!m.is_basis(b)) return false;
        common = common & b;
      }
      return common.empty();
    }
    case CoverKind::ForestCover: {
      ElementSet u;
      for (ElementSet f : cert.witness) {
        if (!m.is_independent(f)) return false;
        u = u | f;
      }
      return u == m.ground();
    }
  }
  return false;
}

CountWithCertificate gamma(const Matroid& m) {
  if (m.ground_size() == 0) throw Error(ErrorKind::InvalidArgument, "empty ground set");
  if (is_star(m)) throw Error(ErrorKind::StarMatroid, "centers " + star_centers(m).to_string());
  // Bases with empty intersection are exactly those whose complements cover the ground set.
  std::vector<ElementSet> complements;
  for (ElementSet b : m.bases()) complements.push_back(m.ground() - b);
  const auto cover = min_cover(complements, m.ground(), m.ground_size() - m.rank());
  CountWithCertificate out;
  out.value = static_cast<int>(cover.size());
  out.certificate.kind = CoverKind::EmptyIntersection;
  for (ElementSet c : cover) out.certificate.witness.push_back(m.ground() - c);
  canonicalize(out.certificate.witness);
  return out;
}

CountWithCertificate arboricity_exact(const Matroid& m) {
  if (m.ground_size() == 0) throw Error(ErrorKind::InvalidArgument, "empty ground set");
  if (const ElementSet l = loops(m); !l.empty()) {
    throw Error(ErrorKind::LoopElement, "elements " + l.to_string() + " lie in no basis");
  }
  CountWithCertificate out;
  out.certificate.kind = CoverKind::BaseCover;
  out.certificate.witness = min_cover(m.bases(), m.ground(), m.rank());
  canonicalize(out.certificate.witness);
  out.value = out.certificate.size();
  return out;
}

SubsetMaximizer arboricity_edmonds(const Matroid& m) {
  if (m.rank() == 0) throw Error(ErrorKind::ZeroRank, "rank-0 matroid");
  SubsetMaximizer best;
  const std::uint64_t end = std::uint64_t{1} << m.ground_size();
  for (std::uint64_t s = 1; s < end; ++s) {
    const ElementSet a(static_cast<std::uint32_t>(s));
    const int r = rank_subset(m, a);
    if (r == 0) continue;
    const int value = ceil_div(a.size(), r);
    if (value > best.value || (value == best.value && a.size() > best.maximizer.size())) {
      best = {value, a};
    }
  }
  return best;
}

SubsetMaximizer nash_williams(const Graph& g) {
  g.validate();
  if (g.edges.empty()) throw Error(ErrorKind::NoEdges, "graph has no edges");
  SubsetMaximizer best;
  const std::uint64_t end = std::uint64_t{1} << g.vertex_count;
  for (std::uint64_t s = 1; s < end; ++s) {
    const ElementSet h(static_cast<std::uint32_t>(s));
    if (h.size() < 2) continue;
    int e = 0;
    for (auto [u, v] : g.edges) {
      if (h.contains(u) && h.contains(v)) ++e;
    }
    const int value = ceil_div(e, h.size() - 1);
    if (value > best.value || (value == best.value && h.size() > best.maximizer.size())) {
      best = {value, h};
    }
  }
  return best;
}

SubsetFamily bonds(const Graph& g) {
  g.validate();
  std::vector<ElementSet> found;
  for (std::uint32_t comp : components(g)) {
    if (std::popcount(comp) < 2) continue;
    const std::uint32_t anchor = comp & (~comp + 1);
    const std::uint32_t rest = comp & ~anchor;
    // every proper side S containing the anchor vertex, enumerated as anchor | sub
    for (std::uint32_t sub = rest;; sub = (sub - 1) & rest) {
      const std::uint32_t side = anchor | sub;
      if (side != comp && induced_connected(g, side) && induced_connected(g, comp & ~side)) {
        ElementSet cut;
        for (std::size_t i = 0; i < g.edges.size(); ++i) {
          const bool in_u = (side >> (g.edges[i].first - 1)) & 1U;
          const bool in_v = (side >> (g.edges[i].second - 1)) & 1U;
          if (in_u != in_v) cut = cut.with(static_cast<int>(i) + 1);
        }
        found.push_back(cut);
      }
      if (sub == 0) break;
    }
  }
  return SubsetFamily(g.edge_count(), std::move(found));
}

int largest_bond(const Graph& g) {
  int best = 0;
  for (ElementSet b : bonds(g)) best = std::max(best, b.size());
  return best;
}

CountWithCertificate min_forest_cover(const Graph& g, bool disjoint) {
  g.validate();
  if (g.edges.empty()) throw Error(ErrorKind::NoEdges, "graph has no edges");
  if (!disjoint) {
    CountWithCertificate out = arboricity_exact(graphic(g));
    out.certificate.kind = CoverKind::ForestCover;
    return out;
  }
  const int m = g.edge_count();
  const auto n = static_cast<std::size_t>(g.vertex_count) + 1;
  for (int k = 1; k <= m; ++k) {
    std::vector<std::vector<int>> parent(static_cast<std::size_t>(k), std::vector<int>(n));
    for (auto& p : parent) std::iota(p.begin(), p.end(), 0);
    std::vector<ElementSet> forests(static_cast<std::size_t>(k));
    // Edge i goes into a forest index no larger than the number already opened.
    std::function<bool(int, int)> assign = [&](int edge, int opened) -> bool {
      if (edge == m) return true;
      auto [u, v] = g.edges[static_cast<std::size_t>(edge)];
      for (int f = 0; f < std::min(k, opened + 1); ++f) {
        auto saved = parent[static_cast<std::size_t>(f)];
        int ru = find_root(parent[static_cast<std::size_t>(f)], u);
        int rv = find_root(parent[static_cast<std::size_t>(f)], v);
        if (ru == rv) continue;
        parent[static_cast<std::size_t>(f)][ru] = rv;
        forests[static_cast<std::size_t>(f)] = forests[static_cast<std::size_t>(f)].with(edge + 1);
        if (assign(edge + 1, std::max(opened, f + 1))) return true;
        forests[static_cast<std::size_t>(f)] = forests[static_cast<std::size_t>(f)].without(edge + 1);
        parent[static_cast<std::size_t>(f)] = std::move(saved);
      }
      return false;
    };
    if (assign(0, 0)) {
      CountWithCertificate out;
      out.value = k;
      out.certificate.kind = CoverKind::ForestCover;
      for (ElementSet f : forests) {
        if (!f.empty()) out.certificate.witness.push_back(f);
      }
      canonicalize(out.certificate.witness);
      out.value = out.certificate.size();
      return out;
    }
  }
  throw Error(ErrorKind::InvalidArgument, "no forest partition found");
}

ElementSet bridges(const Graph& g) {
  g.validate();
  const auto base = components(g).size();
  ElementSet out;
  for (int skip = 0; skip < g.edge_count(); ++skip) {
    Graph h{g.vertex_count, {}};
    for (int i = 0; i < g.edge_count(); ++i) {
      if (i != skip) h.edges.push_back(g.edges[static_cast<std::size_t>(i)]);
    }
    if (components(h).size() > base) out = out.with(skip + 1);
  }
  return out;
}

std::optional<int> graph_circumference(const Graph& g) { return circumference(graphic(g)); }

ArborRecord check_arbor(const Matroid& m) {
  if (const ElementSet l = loops(m); !l.empty()) {
    throw Error(ErrorKind::Inapplicable, "loops " + l.to_string() + " cannot be covered by bases");
  }
  const ElementSet centers = star_centers(m);
  if (centers == m.ground()) throw Error(ErrorKind::Inapplicable, "free matroid");
  const Matroid reduced = core(m).matroid;
  const Matroid reduced_dual = dual(reduced);
  ArborRecord rec;
  rec.coloops_removed = centers.size();
  rec.arboricity = arboricity_exact(reduced).value;
  rec.gamma_dual = gamma(reduced_dual).value;
  rec.circumference_dual = circumference(reduced_dual).value();
  rec.pass = rec.arboricity <= rec.circumference_dual;
  rec.equality = rec.arboricity == rec.circumference_dual;
  return rec;
}

MbRecord check_mb(const Matroid& m) {
  if (is_star(m)) throw Error(ErrorKind::StarMatroid, "centers " + star_centers(m).to_string());
  const int c = circumference(m).value();
  MbRecord rec;
  rec.lhs = c * (m.ground_size() - m.rank());
  rec.rhs = m.ground_size();
  rec.pass = rec.lhs >= rec.rhs;
  rec.equality = rec.lhs == rec.rhs;
  return rec;
}

GammaRecord check_gamma(const Matroid& m) {
  GammaRecord rec;
  rec.gamma = gamma(m).value;
  rec.circumference = circumference(m).value();
  rec.pass = rec.gamma <= rec.circumference;
  return rec;
}

}  // namespace matreg
