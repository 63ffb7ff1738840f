#include "matreg/matroid.hpp"

#include <algorithm>
#include <numeric>

namespace matreg {

namespace {

constexpr int kMaxTableGround = 24;

void check_ground(int n) {
  if (n < 1 || n > kMaxGround) {
    throw Error(ErrorKind::OutOfRange, "ground size " + std::to_string(n) + " outside 1.." +
                                           std::to_string(kMaxGround));
  }
}

// Marks every independent set; entry s is nonzero iff bitmask s is independent.
std::vector<std::uint8_t> independence_table(const Matroid& m) {
  const int n = m.ground_size();
  if (n > kMaxTableGround) throw Error(ErrorKind::TooLarge, "ground size " + std::to_string(n));
  std::vector<std::uint8_t> table(std::size_t{1} << n, 0);
  for (ElementSet b : m.bases()) table[b.bits()] = 1;
  for (int i = 0; i < n; ++i) {
    const std::uint32_t bit = std::uint32_t{1} << i;
    for (std::uint32_t s = 0; s < table.size(); ++s) {
      if ((s & bit) && table[s]) table[s & ~bit] = 1;
    }
  }
  return table;
}

// Restricts an explicit basis family to the sorted `kept` elements and relabels them 1..k.
Relabelled relabel(int n_new, const std::vector<ElementSet>& bases_old, const std::vector<int>& kept) {
  std::vector<int> to_new(kMaxGround + 1, 0);
  for (std::size_t j = 0; j < kept.size(); ++j) to_new[kept[j]] = static_cast<int>(j) + 1;
  std::vector<ElementSet> bases;
  bases.reserve(bases_old.size());
  for (ElementSet b : bases_old) {
    ElementSet nb;
    b.for_each([&](int e) { nb = nb.with(to_new[e]); });
    bases.push_back(nb);
  }
  return Relabelled{make_matroid_unchecked(n_new, std::move(bases)), kept};
}

int find_root(std::vector<int>& parent, int v) {
  while (parent[v] != v) {
    parent[v] = parent[parent[v]];
    v = parent[v];
  }
  return v;
}

}  // namespace

Matroid make_matroid_unchecked(int n, std::vector<ElementSet> bases) {
  Matroid m;
  m.n_ = n;
  canonicalize(bases);
  m.rank_ = bases.empty() ? 0 : bases.front().size();
  m.bases_ = std::move(bases);
  m.sorted_bits_.reserve(m.bases_.size());
  for (ElementSet b : m.bases_) m.sorted_bits_.push_back(b.bits());
  std::sort(m.sorted_bits_.begin(), m.sorted_bits_.end());
  return m;
}

bool Matroid::is_basis(ElementSet s) const {
  return std::binary_search(sorted_bits_.begin(), sorted_bits_.end(), s.bits());
}

bool Matroid::is_independent(ElementSet s) const {
  return std::any_of(bases_.begin(), bases_.end(), [&](ElementSet b) { return s.subset_of(b); });
}

void Graph::validate() const {
  if (vertex_count < 1) throw Error(ErrorKind::InvalidArgument, "graph needs at least one vertex");
  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto [u, v] = edges[i];
    if (u < 1 || u > vertex_count || v < 1 || v > vertex_count) {
      throw Error(ErrorKind::OutOfRange, "edge " + std::to_string(i + 1) + " has an endpoint outside 1.." +
                                             std::to_string(vertex_count));
    }
    if (u == v) throw Error(ErrorKind::InvalidArgument, "edge " + std::to_string(i + 1) + " is a self-loop");
  }
}

ElementSet Relabelled::to_original(ElementSet s) const {
  ElementSet out;
  s.for_each([&](int e) { out = out.with(labels.at(e - 1)); });
  return out;
}

std::optional<ExchangeWitness> find_exchange_violation(const std::vector<ElementSet>& bases) {
  std::vector<std::uint32_t> sorted;
  sorted.reserve(bases.size());
  for (ElementSet b : bases) sorted.push_back(b.bits());
  std::sort(sorted.begin(), sorted.end());
  auto present = [&](ElementSet s) { return std::binary_search(sorted.begin(), sorted.end(), s.bits()); };

  for (ElementSet b1 : bases) {
    for (ElementSet b2 : bases) {
      const ElementSet only1 = b1 - b2;
      const ElementSet only2 = b2 - b1;
      std::optional<ExchangeWitness> bad;
      only1.for_each([&](int x) {
        if (bad) return;
        bool found = false;
        only2.for_each([&](int y) {
          if (!found && present(b1.without(x).with(y))) found = true;
        });
        if (!found) bad = ExchangeWitness{b1, b2, x};
      });
      if (bad) return bad;
    }
  }
  return std::nullopt;
}

Matroid from_bases(int n, const std::vector<ElementSet>& bases) {
  check_ground(n);
  if (bases.empty()) throw Error(ErrorKind::EmptyFamily, "a matroid needs at least one basis");
  const ElementSet ground = ElementSet::full(n);
  for (ElementSet b : bases) {
    if (!b.subset_of(ground)) {
      throw Error(ErrorKind::OutOfRange, "basis " + b.to_string() + " has element " +
                                             std::to_string((b - ground).min_element()) + " outside 1.." +
                                             std::to_string(n));
    }
  }
  std::vector<ElementSet> family = bases;
  canonicalize(family);
  const int r = family.front().size();
  for (ElementSet b : family) {
    if (b.size() != r) {
      throw Error(ErrorKind::UnequalCardinality,
                  family.front().to_string() + " and " + b.to_string() + " differ in size");
    }
  }
  if (auto w = find_exchange_violation(family)) throw ExchangeError(*w);
  return make_matroid_unchecked(n, std::move(family));
}

Matroid from_circuits(int n, const std::vector<ElementSet>& circuit_list) {
  check_ground(n);
  if (n > kMaxTableGround) throw Error(ErrorKind::TooLarge, "ground size " + std::to_string(n));
  std::vector<ElementSet> cs = circuit_list;
  canonicalize(cs);
  const ElementSet ground = ElementSet::full(n);
  for (ElementSet c : cs) {
    if (c.empty()) throw Error(ErrorKind::InvalidArgument, "the empty set cannot be a circuit");
    if (!c.subset_of(ground)) throw Error(ErrorKind::OutOfRange, "circuit " + c.to_string());
  }
  for (ElementSet a : cs) {
    for (ElementSet b : cs) {
      if (a != b && a.subset_of(b)) {
        throw Error(ErrorKind::NotAntichain, a.to_string() + " is contained in " + b.to_string());
      }
    }
  }
  std::vector<ElementSet> independent;
  for (std::uint32_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    const ElementSet set(s);
    if (std::none_of(cs.begin(), cs.end(), [&](ElementSet c) { return c.subset_of(set); })) {
      independent.push_back(set);
    }
  }
  // Unequal maximal sets also mean the family was not a circuit set.
  Matroid m;
  try {
    m = from_bases(n, maximal_members(std::move(independent)));
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::UnequalCardinality) throw;
    throw Error(ErrorKind::ExchangeViolation, "family is not the circuit set of a matroid");
  }
  if (circuits(m).members() != cs) {
    throw Error(ErrorKind::ExchangeViolation, "family is not the circuit set of a matroid");
  }
  return m;
}

Matroid uniform(int k, int n) {
  check_ground(n);
  if (k < 0 || k > n) {
    throw Error(ErrorKind::InvalidRank, "rank " + std::to_string(k) + " outside 0.." + std::to_string(n));
  }
  return make_matroid_unchecked(n, k_subsets(n, k));
}

Matroid free_matroid(int n) { return uniform(n, n); }

Matroid graphic(const Graph& g) {
  g.validate();
  const int m = g.edge_count();
  if (m == 0) throw Error(ErrorKind::NoEdges, "graphic matroid needs at least one edge");
  check_ground(m);

  std::vector<int> parent(g.vertex_count + 1);
  auto reset = [&] { std::iota(parent.begin(), parent.end(), 0); };
  reset();
  int components = g.vertex_count;
  for (auto [u, v] : g.edges) {
    int ru = find_root(parent, u), rv = find_root(parent, v);
    if (ru != rv) {
      parent[ru] = rv;
      --components;
    }
  }
  const int r = g.vertex_count - components;

  std::vector<ElementSet> bases;
  for (ElementSet s : k_subsets(m, r)) {
    reset();
    bool acyclic = true;
    s.for_each([&](int e) {
      if (!acyclic) return;
      auto [u, v] = g.edges[e - 1];
      int ru = find_root(parent, u), rv = find_root(parent, v);
      if (ru == rv) {
        acyclic = false;
      } else {
        parent[ru] = rv;
      }
    });
    if (acyclic) bases.push_back(s);
  }
  return make_matroid_unchecked(m, std::move(bases));
}

Matroid dual(const Matroid& m) {
  const ElementSet ground = m.ground();
  std::vector<ElementSet> bases;
  bases.reserve(m.bases().size());
  for (ElementSet b : m.bases()) bases.push_back(ground - b);
  return make_matroid_unchecked(m.ground_size(), std::move(bases));
}

int rank_subset(const Matroid& m, ElementSet a) {
  if (!a.subset_of(m.ground())) throw Error(ErrorKind::OutOfRange, "subset " + a.to_string());
  int best = 0;
  for (ElementSet b : m.bases()) best = std::max(best, (a & b).size());
  return best;
}

SubsetFamily circuits(const Matroid& m) {
  const int n = m.ground_size();
  const auto indep = independence_table(m);
  std::vector<ElementSet> out;
  for (std::uint32_t s = 1; s < indep.size(); ++s) {
    if (indep[s]) continue;
    bool minimal = true;
    for (std::uint32_t rest = s; rest != 0 && minimal; rest &= rest - 1) {
      const std::uint32_t bit = rest & (~rest + 1);
      if (!indep[s & ~bit]) minimal = false;
    }
    if (minimal) out.emplace_back(s);
  }
  return SubsetFamily(n, std::move(out));
}

std::optional<int> circumference(const Matroid& m) {
  const SubsetFamily cs = circuits(m);
  if (cs.empty()) return std::nullopt;
  int best = 0;
  for (ElementSet c : cs) best = std::max(best, c.size());
  return best;
}

ElementSet loops(const Matroid& m) {
  ElementSet covered;
  for (ElementSet b : m.bases()) covered = covered | b;
  return m.ground() - covered;
}

Relabelled restriction(const Matroid& m, ElementSet a) {
  if (a.empty()) throw Error(ErrorKind::EmptySubset, "restriction to the empty set");
  if (!a.subset_of(m.ground())) throw Error(ErrorKind::OutOfRange, "subset " + a.to_string());
  const int r = rank_subset(m, a);
  std::vector<ElementSet> bases;
  for (ElementSet b : m.bases()) {
    if ((b & a).size() == r) bases.push_back(b & a);
  }
  canonicalize(bases);
  return relabel(a.size(), bases, a.elements());
}

Matroid deletion(const Matroid& m, int x) {
  if (!m.ground().contains(x)) throw Error(ErrorKind::OutOfRange, "element " + std::to_string(x));
  return restriction(m, m.ground().without(x)).matroid;
}

Relabelled link_matroid(const Matroid& m, ElementSet f) {
  if (!f.subset_of(m.ground())) throw Error(ErrorKind::OutOfRange, "subset " + f.to_string());
  if (!m.is_independent(f)) throw Error(ErrorKind::DependentFace, f.to_string() + " is dependent");
  std::vector<ElementSet> bases;
  ElementSet support;
  for (ElementSet b : m.bases()) {
    if (f.subset_of(b)) {
      bases.push_back(b - f);
      support = support | (b - f);
    }
  }
  canonicalize(bases);
  return relabel(support.size(), bases, support.elements());
}

ElementSet star_centers(const Matroid& m) {
  ElementSet common = m.ground();
  for (ElementSet b : m.bases()) common = common & b;
  return common;
}

bool is_star(const Matroid& m) { return !star_centers(m).empty(); }

Relabelled core(const Matroid& m) {
  const ElementSet keep = m.ground() - star_centers(m);
  if (keep.empty()) return Relabelled{make_matroid_unchecked(0, {ElementSet()}), {}};
  return restriction(m, keep);
}

Matroid direct_sum(const Matroid& a, const Matroid& b) {
  const int n = a.ground_size() + b.ground_size();
  check_ground(n);
  const int shift = a.ground_size();
  std::vector<ElementSet> bases;
  bases.reserve(a.bases().size() * b.bases().size());
  for (ElementSet x : a.bases()) {
    for (ElementSet y : b.bases()) bases.push_back(x | ElementSet(y.bits() << shift));
  }
  return make_matroid_unchecked(n, std::move(bases));
}

bool is_uniform(const Matroid& m) {
  std::uint64_t count = 1;
  const int n = m.ground_size(), r = m.rank();
  for (int i = 0; i < r; ++i) count = count * static_cast<std::uint64_t>(n - i) / static_cast<std::uint64_t>(i + 1);
  return m.bases().size() == count;
}

}  // namespace matreg
