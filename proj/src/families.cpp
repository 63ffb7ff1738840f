#include "matreg/families.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "matreg/error.hpp"
#include "matreg/io.hpp"

namespace matreg {

namespace {

enum class State : std::uint8_t { Undecided, In, Out };

// Include/exclude backtracking over the r-subsets of [n]. A partial family is
// abandoned once some included pair (B1, B2) and x ∈ B1 \ B2 has every
// candidate B1 - x + y (y ∈ B2 \ B1) already excluded.
class RankLayer {
 public:
  RankLayer(int n, int r) : n_(n), sets_(k_subsets(n, r)), state_(sets_.size(), State::Undecided) {
    for (std::size_t i = 0; i < sets_.size(); ++i) index_[sets_[i].bits()] = static_cast<int>(i);
  }

  void run(std::vector<Matroid>& out) {
    out_ = &out;
    descend(0);
  }

 private:
  bool pair_ok(ElementSet b1, ElementSet b2) const {
    bool ok = true;
    (b1 - b2).for_each([&](int x) {
      if (!ok) return;
      bool found = false;
      (b2 - b1).for_each([&](int y) {
        if (!found && state_[static_cast<std::size_t>(index_.at(b1.without(x).with(y).bits()))] != State::Out) found = true;
      });
      ok = found;
    });
    return ok;
  }

  bool consistent_after_in(std::size_t k) const {
    for (std::size_t j = 0; j < sets_.size(); ++j) {
      if (state_[j] != State::In) continue;
      if (!pair_ok(sets_[k], sets_[j]) || !pair_ok(sets_[j], sets_[k])) return false;
    }
    return true;
  }

  // Excluding S can only hurt pairs whose first member is adjacent to S.
  bool consistent_after_out(std::size_t k) const {
    const ElementSet s = sets_[k];
    for (std::size_t i = 0; i < sets_.size(); ++i) {
      if (state_[i] != State::In || (sets_[i] - s).size() != 1) continue;
      for (std::size_t j = 0; j < sets_.size(); ++j) {
        if (state_[j] == State::In && !pair_ok(sets_[i], sets_[j])) return false;
      }
    }
    return true;
  }

  void descend(std::size_t k) {
    if (k == sets_.size()) {
      std::vector<ElementSet> bases;
      for (std::size_t i = 0; i < sets_.size(); ++i) {
        if (state_[i] == State::In) bases.push_back(sets_[i]);
      }
      if (!bases.empty()) out_->push_back(from_bases(n_, bases));
      return;
    }
    state_[k] = State::In;
    if (consistent_after_in(k)) descend(k + 1);
    state_[k] = State::Out;
    if (consistent_after_out(k)) descend(k + 1);
    state_[k] = State::Undecided;
  }

  int n_;
  std::vector<ElementSet> sets_;
  std::vector<State> state_;
  std::map<std::uint32_t, int> index_;
  std::vector<Matroid>* out_ = nullptr;
};

bool family_less(const Matroid& a, const Matroid& b) {
  if (a.rank() != b.rank()) return a.rank() < b.rank();
  return std::lexicographical_compare(a.bases().begin(), a.bases().end(), b.bases().begin(), b.bases().end(),
                                      canonical_less);
}

using EdgeList = std::vector<std::pair<int, int>>;

EdgeList canonical_edges(int v, const EdgeList& edges) {
  std::vector<int> perm(static_cast<std::size_t>(v));
  std::iota(perm.begin(), perm.end(), 1);
  EdgeList best;
  do {
    EdgeList mapped;
    for (auto [a, b] : edges) {
      int x = perm[static_cast<std::size_t>(a - 1)], y = perm[static_cast<std::size_t>(b - 1)];
      mapped.emplace_back(std::min(x, y), std::max(x, y));
    }
    std::sort(mapped.begin(), mapped.end());
    if (best.empty() || mapped < best) best = std::move(mapped);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

EdgeList all_pairs(int v) {
  EdgeList pairs;
  for (int a = 1; a <= v; ++a) {
    for (int b = a + 1; b <= v; ++b) pairs.emplace_back(a, b);
  }
  return pairs;
}

std::string uniform_id(int k, int n) { return "U" + std::to_string(k) + "," + std::to_string(n); }

std::vector<NamedMatroid> graph_family(bool cographic, int max_vertices, int max_edges) {
  std::vector<Graph> graphs = small_graphs(max_vertices, max_edges);
  for (int k = 2; k <= 5 && k <= max_edges; ++k) graphs.push_back(parallel_edges(k));
  std::vector<NamedMatroid> out;
  for (const Graph& g : graphs) {
    const Matroid m = graphic(g);
    std::string id = (cographic ? "M*(" : "M(") + std::to_string(g.vertex_count) + ":" + graph_label(g) + ")";
    out.push_back({std::move(id), cographic ? dual(m) : m, g});
  }
  return out;
}

Matroid square() { return from_bases(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}}); }

}  // namespace

std::vector<Matroid> enumerate_all_matroids(int n) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "n must be positive");
  if (n > 6) throw Error(ErrorKind::TooLarge, "exhaustive enumeration is capped at n = 6");
  std::vector<Matroid> out;
  for (int r = 0; r <= n; ++r) RankLayer(n, r).run(out);
  std::sort(out.begin(), out.end(), family_less);
  return out;
}

std::vector<Graph> small_graphs(int max_vertices, int max_edges) {
  std::vector<std::pair<std::pair<int, EdgeList>, Graph>> found;
  for (int v = 2; v <= max_vertices; ++v) {
    const EdgeList pairs = all_pairs(v);
    std::set<EdgeList> seen;
    for (std::uint32_t mask = 1; mask < (1U << pairs.size()); ++mask) {
      if (std::popcount(mask) > max_edges) continue;
      EdgeList edges;
      std::uint32_t touched = 0;
      for (std::size_t i = 0; i < pairs.size(); ++i) {
        if (!((mask >> i) & 1U)) continue;
        edges.push_back(pairs[i]);
        touched |= (1U << (pairs[i].first - 1)) | (1U << (pairs[i].second - 1));
      }
      if (touched != (1U << v) - 1) continue;
      EdgeList canon = canonical_edges(v, edges);
      if (!seen.insert(canon).second) continue;
      found.push_back({{static_cast<int>(canon.size()), canon}, Graph{v, canon}});
    }
    std::sort(found.end() - static_cast<std::ptrdiff_t>(seen.size()), found.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
  }
  std::vector<Graph> out;
  for (auto& f : found) out.push_back(std::move(f.second));
  return out;
}

std::vector<Graph> labeled_simple_graphs(int max_vertices) {
  std::vector<Graph> out;
  for (int v = 1; v <= max_vertices; ++v) {
    const EdgeList pairs = all_pairs(v);
    for (std::uint32_t mask = 1; mask < (1U << pairs.size()); ++mask) {
      Graph g{v, {}};
      for (std::size_t i = 0; i < pairs.size(); ++i) {
        if ((mask >> i) & 1U) g.edges.push_back(pairs[i]);
      }
      out.push_back(std::move(g));
    }
  }
  return out;
}

Graph parallel_edges(int k) { return Graph{2, EdgeList(static_cast<std::size_t>(k), {1, 2})}; }

std::string graph_label(const Graph& g) {
  std::string s;
  for (const auto& [a, b] : g.edges) {
    if (!s.empty()) s += ' ';
    s += std::to_string(a) + "-" + std::to_string(b);
  }
  return s;
}

void FamilySpec::validate() const {
  if (k_min > k_max || n_min > n_max || n_min < 1 || k_min < 0) throw Error(ErrorKind::InvalidArgument, "empty parameter range");
  if (kind == Kind::Exhaustive && exhaustive_n > 6) throw Error(ErrorKind::TooLarge, "exhaustive families stop at n = 6");
  if (kind == Kind::Exhaustive && exhaustive_n < 1) throw Error(ErrorKind::InvalidArgument, "exhaustive_n must be positive");
  if (kind == Kind::FromFile && paths.empty()) throw Error(ErrorKind::InvalidArgument, "no input files");
}

std::vector<NamedMatroid> generate(const FamilySpec& spec) {
  spec.validate();
  std::vector<NamedMatroid> out;
  switch (spec.kind) {
    case FamilySpec::Kind::Uniform:
      for (int k = spec.k_min; k <= spec.k_max; ++k) {
        for (int n = std::max(spec.n_min, k + 1); n <= spec.n_max; ++n) out.push_back({uniform_id(k, n), uniform(k, n), {}});
      }
      break;
    case FamilySpec::Kind::Graphic:
      out = graph_family(false, spec.max_vertices, spec.max_edges);
      break;
    case FamilySpec::Kind::Cographic:
      out = graph_family(true, spec.max_vertices, spec.max_edges);
      break;
    case FamilySpec::Kind::DirectSum: {
      const std::vector<std::pair<std::string, Matroid>> seeds = {
          {"U0,1", uniform(0, 1)}, {"U1,1", uniform(1, 1)}, {"U1,2", uniform(1, 2)},
          {"U1,3", uniform(1, 3)}, {"U2,3", uniform(2, 3)}, {"U2,4", uniform(2, 4)}};
      for (std::size_t i = 0; i < seeds.size(); ++i) {
        for (std::size_t j = i; j < seeds.size(); ++j) {
          out.push_back({seeds[i].first + "+" + seeds[j].first, direct_sum(seeds[i].second, seeds[j].second), {}});
        }
      }
      break;
    }
    case FamilySpec::Kind::Exhaustive:
      for (int n = 1; n <= spec.exhaustive_n; ++n) {
        const auto all = enumerate_all_matroids(n);
        for (std::size_t i = 0; i < all.size(); ++i) {
          out.push_back({"E" + std::to_string(n) + "." + std::to_string(i + 1), all[i], {}});
        }
      }
      break;
    case FamilySpec::Kind::FromFile:
      for (const auto& path : spec.paths) out.push_back({path, parse_matroid(read_file(path)), {}});
      break;
  }
  return out;
}

std::optional<FamilySpec::Kind> family_kind(const std::string& name) {
  static const std::map<std::string, FamilySpec::Kind> kinds = {
      {"uniform", FamilySpec::Kind::Uniform},     {"graphic", FamilySpec::Kind::Graphic},
      {"cographic", FamilySpec::Kind::Cographic}, {"directsum", FamilySpec::Kind::DirectSum},
      {"exhaustive", FamilySpec::Kind::Exhaustive}, {"file", FamilySpec::Kind::FromFile}};
  const auto it = kinds.find(name);
  if (it == kinds.end()) return std::nullopt;
  return it->second;
}

std::vector<NamedMatroid> curated_medium() {
  std::vector<NamedMatroid> out;
  for (int n = 5; n <= 6; ++n) {
    for (int k = 0; k < n; ++k) out.push_back({uniform_id(k, n), uniform(k, n), {}});
  }
  for (bool cographic : {false, true}) {
    for (auto& nm : graph_family(cographic, 5, 6)) {
      const int e = nm.matroid.ground_size();
      if ((e == 5 || e == 6) && circumference(nm.matroid)) out.push_back(std::move(nm));
    }
  }
  out.push_back({"square+U1,2", direct_sum(square(), uniform(1, 2)), {}});
  return out;
}

}  // namespace matreg
