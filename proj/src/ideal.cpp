#include "matreg/ideal.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "matreg/error.hpp"

namespace matreg {

namespace {

constexpr int kMaxEnumeratedVertices = 22;

// Facets of {F ⊆ allowed : no member of `nonfaces` is contained in F}.
SimplicialComplex complex_avoiding(int n, ElementSet allowed, const std::vector<ElementSet>& nonfaces) {
  if (allowed.size() > kMaxEnumeratedVertices) throw Error(ErrorKind::TooLarge, "vertex set " + allowed.to_string());
  auto is_face = [&](ElementSet f) {
    return std::none_of(nonfaces.begin(), nonfaces.end(), [&](ElementSet d) { return d.subset_of(f); });
  };
  std::vector<ElementSet> facets;
  for_each_subset(allowed, [&](ElementSet f) {
    if (!is_face(f)) return;
    bool maximal = true;
    (allowed - f).for_each([&](int v) {
      if (maximal && is_face(f.with(v))) maximal = false;
    });
    if (maximal) facets.push_back(f);
  });
  return SimplicialComplex(n, std::move(facets));
}

void check_length(const ExponentVector& a, int n) {
  if (a.length() != n) {
    throw Error(ErrorKind::InvalidArgument,
                "vector of length " + std::to_string(a.length()) + " on a ground set of size " + std::to_string(n));
  }
}

}  // namespace

int ExponentVector::total() const { return std::accumulate(entries_.begin(), entries_.end(), 0); }

ElementSet ExponentVector::negative_support() const {
  ElementSet s;
  for (int i = 1; i <= length(); ++i) {
    if ((*this)[i] < 0) s = s.with(i);
  }
  return s;
}

ElementSet ExponentVector::support() const {
  ElementSet s;
  for (int i = 1; i <= length(); ++i) {
    if ((*this)[i] != 0) s = s.with(i);
  }
  return s;
}

bool ExponentVector::divides(const ExponentVector& other) const {
  if (other.length() != length()) return false;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i] > other.entries_[i]) return false;
  }
  return true;
}

std::string ExponentVector::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(entries_[i]);
  }
  return s;
}

bool graded_lex_less(const ExponentVector& a, const ExponentVector& b) {
  const int ta = a.total(), tb = b.total();
  if (ta != tb) return ta < tb;
  return a.entries() > b.entries();
}

MonomialIdeal::MonomialIdeal(int n, std::vector<ExponentVector> generators) : n_(n) {
  for (const auto& g : generators) {
    check_length(g, n);
    if (!g.nonnegative()) throw Error(ErrorKind::InvalidArgument, "generator with a negative exponent");
  }
  std::sort(generators.begin(), generators.end(), graded_lex_less);
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  // In graded-lex order a divisor always precedes its multiples.
  for (const auto& g : generators) {
    const bool redundant =
        std::any_of(generators_.begin(), generators_.end(), [&](const ExponentVector& k) { return k.divides(g); });
    if (!redundant) generators_.push_back(g);
  }
}

bool MonomialIdeal::contains(const ExponentVector& a) const {
  return std::any_of(generators_.begin(), generators_.end(), [&](const ExponentVector& g) { return g.divides(a); });
}

ExponentVector MonomialIdeal::lcm_exponent() const {
  std::vector<int> top(static_cast<std::size_t>(n_), 0);
  for (const auto& g : generators_) {
    for (std::size_t i = 0; i < top.size(); ++i) top[i] = std::max(top[i], g.entries()[i]);
  }
  return ExponentVector(std::move(top));
}

MonomialIdeal stanley_reisner(const SimplicialComplex& c) {
  if (c.is_void()) throw Error(ErrorKind::VoidComplex, "the void complex has no Stanley-Reisner ideal");
  const int n = c.vertex_count();
  if (n > kMaxEnumeratedVertices) throw Error(ErrorKind::TooLarge, std::to_string(n) + " vertices");
  std::vector<ExponentVector> gens;
  for_each_subset(ElementSet::full(n), [&](ElementSet s) {
    if (c.contains(s)) return;
    bool minimal = true;
    s.for_each([&](int v) {
      if (minimal && !c.contains(s.without(v))) minimal = false;
    });
    if (!minimal) return;
    std::vector<int> e(static_cast<std::size_t>(n), 0);
    s.for_each([&](int v) { e[static_cast<std::size_t>(v - 1)] = 1; });
    gens.emplace_back(std::move(e));
  });
  return MonomialIdeal(n, std::move(gens));
}

bool symbolic_membership(const Matroid& m, const ExponentVector& a, int t) {
  check_length(a, m.ground_size());
  if (!a.nonnegative()) throw Error(ErrorKind::InvalidArgument, "membership needs a nonnegative vector");
  for (ElementSet b : m.bases()) {
    int sum = 0;
    (m.ground() - b).for_each([&](int i) { sum += a[i]; });
    if (sum < t) return false;
  }
  return true;
}

MonomialIdeal symbolic_generators(const Matroid& m, int t) {
  if (t < 1) throw Error(ErrorKind::InvalidArgument, "t must be positive");
  const int n = m.ground_size();
  if (m.rank() == n) throw Error(ErrorKind::FreeMatroid, "the Stanley-Reisner ideal of a simplex is zero");
  const auto& bases = m.bases();
  const std::size_t nb = bases.size();

  // outside[i][j]: coordinate i+1 is outside basis j
  std::vector<std::vector<char>> outside(static_cast<std::size_t>(n), std::vector<char>(nb, 0));
  // slots[k][j]: coordinates > k that are outside basis j
  std::vector<std::vector<int>> slots(static_cast<std::size_t>(n) + 1, std::vector<int>(nb, 0));
  for (int i = n - 1; i >= 0; --i) {
    for (std::size_t j = 0; j < nb; ++j) {
      outside[static_cast<std::size_t>(i)][j] = !bases[j].contains(i + 1);
      slots[static_cast<std::size_t>(i)][j] = slots[static_cast<std::size_t>(i) + 1][j] + outside[static_cast<std::size_t>(i)][j];
    }
  }

  std::vector<int> a(static_cast<std::size_t>(n), 0);
  std::vector<int> sums(nb, 0);
  std::vector<ExponentVector> gens;
  std::function<void(int)> walk = [&](int i) {
    for (std::size_t j = 0; j < nb; ++j) {
      if (sums[j] + t * slots[static_cast<std::size_t>(i)][j] < t) return;
    }
    if (i == n) {
      // minimal iff lowering any positive coordinate breaks some basis constraint
      for (int k = 0; k < n; ++k) {
        if (a[static_cast<std::size_t>(k)] == 0) continue;
        bool tight = false;
        for (std::size_t j = 0; j < nb && !tight; ++j) tight = outside[static_cast<std::size_t>(k)][j] && sums[j] == t;
        if (!tight) return;
      }
      gens.emplace_back(a);
      return;
    }
    for (int v = 0; v <= t; ++v) {
      a[static_cast<std::size_t>(i)] = v;
      for (std::size_t j = 0; j < nb; ++j) {
        if (outside[static_cast<std::size_t>(i)][j]) sums[j] += v;
      }
      walk(i + 1);
      for (std::size_t j = 0; j < nb; ++j) {
        if (outside[static_cast<std::size_t>(i)][j]) sums[j] -= v;
      }
    }
    a[static_cast<std::size_t>(i)] = 0;
  };
  walk(0);
  return MonomialIdeal(n, std::move(gens));
}

SimplicialComplex degree_complex_general(const MonomialIdeal& ideal, const ExponentVector& a) {
  if (ideal.is_zero()) throw Error(ErrorKind::ZeroIdeal, "degree complex of the zero ideal");
  const int n = ideal.ambient();
  check_length(a, n);
  const ElementSet negative = a.negative_support();
  const ElementSet allowed = ElementSet::full(n) - negative;
  // x^a ∈ I S_F iff some generator b has {i ∉ G_a : b_i > a_i} ⊆ F.
  std::vector<ElementSet> blockers;
  for (const auto& b : ideal.generators()) {
    ElementSet d;
    allowed.for_each([&](int i) {
      if (b[i] > a[i]) d = d.with(i);
    });
    blockers.push_back(d);
  }
  return complex_avoiding(n, allowed, blockers);
}

SimplicialComplex degree_complex_matroid(const Matroid& m, int t, const ExponentVector& a) {
  check_length(a, m.ground_size());
  const ElementSet negative = a.negative_support();
  if (!m.is_independent(negative)) {
    throw Error(ErrorKind::NegativeSupportNotFace, "G_a = " + negative.to_string() + " is not a face");
  }
  std::vector<ElementSet> facets;
  for (ElementSet b : m.bases()) {
    if (!negative.subset_of(b)) continue;
    int sum = 0;
    (m.ground() - b).for_each([&](int i) { sum += a[i]; });
    if (sum <= t - 1) facets.push_back(b - negative);
  }
  return SimplicialComplex(m.ground_size(), std::move(facets));
}

SimplicialComplex radical_complex(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) throw Error(ErrorKind::ZeroIdeal, "radical complex of the zero ideal");
  std::vector<ElementSet> supports;
  for (const auto& g : ideal.generators()) supports.push_back(g.support());
  return complex_avoiding(ideal.ambient(), ElementSet::full(ideal.ambient()), supports);
}

}  // namespace matreg
