#include "matreg/regularity.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>

#include "matreg/error.hpp"
#include "matreg/simplicial.hpp"

namespace matreg {

namespace {

// Evaluates Δ_a(I^(t)) through the basis description and memoizes its homology.
// Two vectors with the same negative support and the same surviving bases share
// a degree complex, so the cache key is (G_a, surviving-basis mask).
class DegreeComplexHomology {
 public:
  DegreeComplexHomology(const Matroid& m, int t, int p, long long budget)
      : m_(m), t_(t), p_(p), budget_(budget) {
    for (ElementSet b : m.bases()) complements_.push_back(m.ground() - b);
  }

  const HomologyReport& homology(const ExponentVector& a, ElementSet negative) {
    const auto& bases = m_.bases();
    std::string key(4 + (bases.size() + 7) / 8, '\0');
    const std::uint32_t g = negative.bits();
    for (int i = 0; i < 4; ++i) key[static_cast<std::size_t>(i)] = static_cast<char>((g >> (8 * i)) & 0xFFU);
    for (std::size_t j = 0; j < bases.size(); ++j) {
      if (!negative.subset_of(bases[j])) continue;
      int sum = 0;
      complements_[j].for_each([&](int i) { sum += a[i]; });
      if (sum <= t_ - 1) key[4 + j / 8] = static_cast<char>(key[4 + j / 8] | (1 << (j % 8)));
    }
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    if (++evaluations_ > budget_) {
      throw Error(ErrorKind::BudgetExceeded, "more than " + std::to_string(budget_) + " homology evaluations");
    }
    std::vector<ElementSet> facets;
    for (std::size_t j = 0; j < bases.size(); ++j) {
      if ((key[4 + j / 8] >> (j % 8)) & 1) facets.push_back(bases[j] - negative);
    }
    const SimplicialComplex c(m_.ground_size(), std::move(facets));
    return cache_.emplace(std::move(key), reduced_homology(c, p_)).first->second;
  }

  long long evaluations() const { return evaluations_; }

 private:
  const Matroid& m_;
  int t_;
  int p_;
  long long budget_;
  long long evaluations_ = 0;
  std::vector<ElementSet> complements_;
  std::unordered_map<std::string, HomologyReport> cache_;
};

// Visits every a that is -1 on an independent set G (G = ∅ first) and
// nonnegative elsewhere with nonnegative part summing to at most `bound`.
void walk_box(const Matroid& m, int bound, bool with_negative,
              const std::function<void(const ExponentVector&, ElementSet)>& visit) {
  const int n = m.ground_size();
  std::vector<ElementSet> faces{ElementSet()};
  if (with_negative) {
    for (ElementSet f : independence_complex(m).faces()) {
      if (!f.empty()) faces.push_back(f);
    }
  }
  std::vector<int> entries(static_cast<std::size_t>(n), 0);
  for (ElementSet g : faces) {
    std::vector<int> free_coords;
    for (int i = 1; i <= n; ++i) {
      entries[static_cast<std::size_t>(i - 1)] = g.contains(i) ? -1 : 0;
      if (!g.contains(i)) free_coords.push_back(i);
    }
    std::function<void(std::size_t, int)> fill = [&](std::size_t k, int left) {
      if (k == free_coords.size()) {
        visit(ExponentVector(entries), g);
        return;
      }
      auto& slot = entries[static_cast<std::size_t>(free_coords[k] - 1)];
      for (int v = 0; v <= left; ++v) {
        slot = v;
        fill(k + 1, left - v);
      }
      slot = 0;
    };
    fill(0, bound);
  }
}

void require_core_with_circuit(const Matroid& m, int t) {
  if (t < 1) throw Error(ErrorKind::InvalidArgument, "t must be positive");
  if (m.ground_size() == 0) throw Error(ErrorKind::NoCircuit, "empty ground set");
  if (is_star(m)) throw Error(ErrorKind::NotCore, "coloops " + star_centers(m).to_string() + " must be removed first");
}

}  // namespace

int reg_formula(const Matroid& m, int t) {
  if (t < 1) throw Error(ErrorKind::InvalidArgument, "t must be positive");
  const auto c = circumference(m);
  if (!c) throw Error(ErrorKind::NoCircuit, "circumference undefined for a free matroid");
  return *c * (t - 1) + core(m).matroid.rank() + 1;
}

int local_cohomology_dim(const Matroid& m, int t, const ExponentVector& a, int i, int p) {
  const ElementSet negative = a.negative_support();
  if (!m.is_independent(negative)) return 0;
  const SimplicialComplex c = degree_complex_matroid(m, t, a);
  return reduced_homology(c, p).at(i - negative.size() - 1);
}

ATopResult a_top_search(const Matroid& m, int t, int p, const SearchOptions& options) {
  require_core_with_circuit(m, t);
  const auto c = circumference(m);
  if (!c) throw Error(ErrorKind::NoCircuit, "no circuit");
  const int d = m.rank();
  DegreeComplexHomology eval(m, t, p, options.budget);

  ATopResult result;
  result.search_bound = *c * (t - 1) + options.slack.value_or(*c);
  bool found = false, found_nonnegative = false;
  walk_box(m, result.search_bound, true, [&](const ExponentVector& a, ElementSet g) {
    ++result.vectors_visited;
    if (eval.homology(a, g).at(d - g.size() - 1) == 0) return;
    const int value = a.total();
    if (g.empty() && (!found_nonnegative || value > result.nonnegative_value)) {
      result.nonnegative_value = value;
      found_nonnegative = true;
    }
    if (!found || value > result.value || (value == result.value && graded_lex_less(a, result.witness))) {
      result.value = value;
      result.witness = a;
      found = true;
    }
  });
  result.homology_evaluations = eval.evaluations();
  if (!found) throw Error(ErrorKind::InvalidArgument, "top local cohomology vanishes on the whole search box");
  result.negative_only = !found_nonnegative || result.value > result.nonnegative_value;
  return result;
}

TakayamaResult reg_takayama(const Matroid& m, int t, int p, const SearchOptions& options) {
  const Relabelled reduced = core(m);
  if (reduced.matroid.ground_size() == 0) throw Error(ErrorKind::NoCircuit, "free matroid");
  TakayamaResult out;
  out.search = a_top_search(reduced.matroid, t, p, options);
  out.value = out.search.value + reduced.matroid.rank() + 1;
  std::vector<int> w(static_cast<std::size_t>(m.ground_size()), 0);
  for (std::size_t j = 0; j < reduced.labels.size(); ++j) {
    w[static_cast<std::size_t>(reduced.labels[j] - 1)] = out.search.witness.entries()[j];
  }
  out.witness = ExponentVector(std::move(w));
  return out;
}

CmGuardRecord check_cm_guard(const Matroid& m, int t, int p, const SearchOptions& options) {
  require_core_with_circuit(m, t);
  const auto c = circumference(m);
  if (!c) throw Error(ErrorKind::NoCircuit, "no circuit");
  const int d = m.rank();
  DegreeComplexHomology eval(m, t, p, options.budget);
  CmGuardRecord rec;
  walk_box(m, *c * (t - 1) + options.slack.value_or(*c), true, [&](const ExponentVector& a, ElementSet g) {
    ++rec.vectors_checked;
    const HomologyReport& h = eval.homology(a, g);
    for (int i = 0; i < d; ++i) {
      if (h.at(i - g.size() - 1) != 0) {
        ++rec.violations;
        if (!rec.first_violation) rec.first_violation = std::make_pair(a, i);
      }
    }
  });
  return rec;
}

SimplicialComplex upper_koszul_complex(const MonomialIdeal& ideal, const ExponentVector& a) {
  const ElementSet supp = a.support();
  const int n = ideal.ambient();
  auto is_face = [&](ElementSet f) {
    std::vector<int> e = a.entries();
    f.for_each([&](int i) { e[static_cast<std::size_t>(i - 1)] -= 1; });
    return ideal.contains(ExponentVector(std::move(e)));
  };
  std::vector<ElementSet> facets;
  for_each_subset(supp, [&](ElementSet f) {
    if (!is_face(f)) return;
    bool maximal = true;
    (supp - f).for_each([&](int v) {
      if (maximal && is_face(f.with(v))) maximal = false;
    });
    if (maximal) facets.push_back(f);
  });
  return SimplicialComplex(n, std::move(facets));
}

std::vector<BettiEntry> betti_oracle(const MonomialIdeal& ideal, int p, long long box_cap) {
  if (ideal.is_zero()) throw Error(ErrorKind::ZeroIdeal, "Betti numbers of the zero ideal");
  const ExponentVector top = ideal.lcm_exponent();
  long long box = 1;
  for (int e : top.entries()) {
    box *= e + 1;
    if (box > box_cap) throw Error(ErrorKind::BoxTooLarge, "box exceeds " + std::to_string(box_cap) + " points");
  }
  std::vector<BettiEntry> table;
  std::vector<int> a(top.entries().size(), 0);
  std::function<void(std::size_t)> walk = [&](std::size_t k) {
    if (k == a.size()) {
      const ExponentVector deg(a);
      if (!ideal.contains(deg)) return;
      const HomologyReport h = reduced_homology(upper_koszul_complex(ideal, deg), p);
      for (std::size_t i = 0; i < h.dims.size(); ++i) {
        if (h.dims[i] != 0) table.push_back({static_cast<int>(i), deg, h.dims[i]});
      }
      return;
    }
    for (int v = 0; v <= top.entries()[k]; ++v) {
      a[k] = v;
      walk(k + 1);
    }
    a[k] = 0;
  };
  walk(0);
  std::sort(table.begin(), table.end(), [](const BettiEntry& x, const BettiEntry& y) {
    if (x.homological_degree != y.homological_degree) return x.homological_degree < y.homological_degree;
    return graded_lex_less(x.degree, y.degree);
  });
  return table;
}

int reg_from_betti(const std::vector<BettiEntry>& table) {
  if (table.empty()) throw Error(ErrorKind::ZeroIdeal, "empty Betti table");
  int reg = table.front().degree.total() - table.front().homological_degree;
  for (const auto& e : table) reg = std::max(reg, e.degree.total() - e.homological_degree);
  return reg;
}

int reg_from_betti(const MonomialIdeal& ideal, int p) { return reg_from_betti(betti_oracle(ideal, p)); }

bool has_linear_resolution(const std::vector<BettiEntry>& table, const MonomialIdeal& ideal) {
  if (ideal.is_zero()) return false;
  const int delta = ideal.generators().front().total();
  for (const auto& g : ideal.generators()) {
    if (g.total() != delta) return false;
  }
  return std::all_of(table.begin(), table.end(),
                     [&](const BettiEntry& e) { return e.degree.total() == delta + e.homological_degree; });
}

bool has_linear_resolution(const MonomialIdeal& ideal, int p) {
  return has_linear_resolution(betti_oracle(ideal, p), ideal);
}

UpperRecord check_upper(const Matroid& m, int t, int p, const SearchOptions& options) {
  require_core_with_circuit(m, t);
  const auto c = circumference(m);
  if (!c) throw Error(ErrorKind::NoCircuit, "no circuit");
  DegreeComplexHomology eval(m, t, p, options.budget);
  UpperRecord rec;
  rec.bound = *c * (t - 1);
  rec.window_top = rec.bound + options.slack.value_or(*c);
  walk_box(m, rec.window_top, false, [&](const ExponentVector& a, ElementSet g) {
    if (eval.homology(a, g).all_zero()) return;
    const int value = a.total();
    if (value > rec.max_nonacyclic || (value == rec.max_nonacyclic && graded_lex_less(a, rec.witness))) {
      rec.max_nonacyclic = value;
      rec.witness = a;
    }
  });
  rec.pass = rec.max_nonacyclic <= rec.bound;
  rec.attained = rec.max_nonacyclic == rec.bound;
  return rec;
}

UniformRecord check_uniform_characterization(const Matroid& m, int t, int p, long long box_cap) {
  const MonomialIdeal ideal = symbolic_generators(m, t);
  UniformRecord rec;
  rec.linear = has_linear_resolution(betti_oracle(ideal, p, box_cap), ideal);
  const Matroid reduced = core(m).matroid;
  rec.in_hypothesis = reduced.rank() >= 1;
  rec.uniform = reduced.rank() >= 1 && reduced.rank() < reduced.ground_size() && is_uniform(reduced);
  rec.consistent = rec.linear == rec.uniform;
  return rec;
}

RegularityReport regularity_report(const Matroid& m, const std::string& id, int t, int p, ReportMethods methods,
                                   const SearchOptions& options) {
  RegularityReport rep;
  rep.id = id;
  rep.t = t;
  rep.d = m.rank();
  rep.c = circumference(m).value_or(0);
  rep.core_rank = core(m).matroid.rank();
  rep.formula_value = reg_formula(m, t);
  if (methods.takayama) {
    const TakayamaResult tk = reg_takayama(m, t, p, options);
    rep.takayama_value = tk.value;
    rep.witness = tk.witness;
    rep.agree = rep.agree && tk.value == rep.formula_value;
  }
  if (methods.betti) {
    rep.betti_value = reg_from_betti(symbolic_generators(m, t), p);
    rep.agree = rep.agree && *rep.betti_value == rep.formula_value;
  }
  return rep;
}

}  // namespace matreg
